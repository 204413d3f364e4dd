#pragma once

// The adding machine Z(A): a binary counter written as an S-machine.
//
//   parts    P_1 = {L}, P_2 = {p(1), p(2), p(3)}, P_3 = {R}
//   sectors  Y_1 = A_0 u A_1, Y_2 = A_0
//
// Sector 1 holds the counter (a_0 = digit 0, a_1 = digit 1, least significant
// digit next to p). Starting from L u p(1) R the machine counts from 0 to
// 2^|u| - 1, carries once more into an empty sector 1, switches to p(3) and
// moves the digits back, ending at L u p(3) R.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "smw/machine.hpp"
#include "smw/report.hpp"

namespace smw {

class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class GTableConflict : public Error {
 public:
  using Error::Error;
};

class GTableMiss : public Error {
 public:
  explicit GTableMiss(std::uint64_t n) : Error("g(" + std::to_string(n) + ") has not been measured"), n_(n) {}
  std::uint64_t n() const noexcept { return n_; }

 private:
  std::uint64_t n_;
};

/// Letters of one adding machine, with the rule families indexed per base letter.
struct AddingLetters {
  std::vector<std::string> base;
  std::vector<LetterId> copy0;  // A_0
  std::vector<LetterId> copy1;  // A_1
  LetterId left = 0;            // L
  LetterId right = 0;           // R
  LetterId p[3] = {0, 0, 0};    // p(1), p(2), p(3)
};

struct AddingMachine {
  Machine machine;
  AddingLetters letters;
  /// Declared rule indices in deterministic priority order:
  /// r_1(a)..., r_12(a)..., r_2(a)..., r_21, r_13, r_3(a)...
  std::vector<std::size_t> priority;
};

/// Copy letters of base letter x: "x0" in A_0 and "x1" in A_1.
LetterId copy_letter(const std::string& base, int copy);

/// Positive rules of Z(A) over the given letters.
std::vector<SRule> adding_rules(const AddingLetters& letters);

/// Throws InvalidAlphabet for an empty alphabet, more than 26 letters,
/// duplicates, or names unusable as letters.
AddingMachine build_adding(const std::vector<std::string>& base);

struct CanonicalRun {
  Computation computation;
  bool used_fallback = false;
  std::string strategy;
};

std::uint64_t default_budget(std::size_t n);

/// A computation from L u p(1) R to a word containing p(3) R. Runs the guarded
/// priority strategy and falls back to breadth-first search (bounded by the
/// start length) if it stalls. Throws NotFound.
CanonicalRun canonical_run(const AddingMachine& z, const Word& u, std::optional<std::uint64_t> budget = {});

/// The start word L u p(1) R; u must be a positive word over A_0.
AdmissibleWord adding_start(const AddingMachine& z, const Word& u);

struct GEntry {
  std::uint64_t g = 0;
  std::string strategy;
  std::string witness;  // the u that was run
  double wall_ms = 0.0;
};

/// Measured n -> g(n). Safe to fill from several threads.
class GTable {
 public:
  GTable() = default;
  GTable(const GTable& other);
  GTable& operator=(const GTable& other);

  /// Keyed insert; a second value for the same n must agree.
  void insert(std::uint64_t n, const GEntry& e);
  std::optional<std::uint64_t> find(std::uint64_t n) const;
  std::uint64_t at(std::uint64_t n) const;  // throws GTableMiss
  std::map<std::uint64_t, GEntry> entries() const;
  bool contains(std::uint64_t n) const { return find(n).has_value(); }

 private:
  mutable std::mutex mutex_;
  std::map<std::uint64_t, GEntry> entries_;
};

inline double lemma1_lower(std::uint64_t n) { return static_cast<double>(std::uint64_t{1} << n); }
inline double lemma1_upper(std::uint64_t n) { return 6.0 * static_cast<double>(std::uint64_t{1} << n); }
bool in_lemma1_window(std::uint64_t n, std::uint64_t g);

/// Runs canonical_run on u = a_0^n, records g(n), and throws BoundViolation
/// if the value leaves [2^n, 6*2^n].
std::uint64_t measure_g(const AddingMachine& z, std::uint64_t n, GTable& table);

/// measure_g for every n in `ns` in parallel; returns the first failure, if any, rethrown.
void measure_g_all(const AddingMachine& z, const std::vector<std::uint64_t>& ns, GTable& table);

/// Length ceiling, window and constant-length checks for a computation started
/// from L u p(1) R with |u| = u_length.
BoundReport verify_lemma1(const Computation& c, std::size_t u_length);
BoundReport verify_lemma1(const AddingMachine& z, const Word& u);

/// CSV columns: n,g,lower,upper,strategy,wall_time_ms
void write_g_table(std::ostream& out, const GTable& table);
GTable read_g_table(std::istream& in);

}  // namespace smw
