#pragma once

// Group presentations of S-machines, hub words, relator traces and a tiny
// brute-force area oracle.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "smw/machine.hpp"

namespace smw {

class KappaCollision : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class UnrecognizedShape : public Error {
 public:
  using Error::Error;
};

enum class RelatorTag { transition, fixing, auxiliary, hub };
std::string_view to_string(RelatorTag t);

struct Relator {
  Word word;  // cyclically reduced, least rotation
  RelatorTag tag = RelatorTag::transition;
  std::string origin;  // rule name, or "hub"
};

struct HubParams {
  std::size_t n = 1;  // 2n kappa letters
  AdmissibleWord w0;
};

struct GroupPresentation {
  std::vector<LetterId> generators;
  std::vector<Relator> relators;

  std::size_t count(RelatorTag t) const;
  /// Index of the relator equal to `w` up to rotation and inversion.
  std::optional<std::size_t> find(const Word& w) const;
  void index();  // rebuilds the lookup used by find()

 private:
  std::unordered_map<Word, std::size_t, WordHash> by_key_;
};

/// Cyclic reduction.
Word cyclic_reduce(const Word& w);
/// Lexicographically least rotation, comparing symbols by (display, exponent).
Word least_rotation(const Word& w);
/// least_rotation of the cyclic reduction of w or of its inverse, whichever is smaller.
Word relator_key(const Word& w);

LetterId kappa(std::size_t j);  // kappa1, kappa2, ...
/// alpha, omega, delta as special letters.
std::vector<LetterId> default_specials();

/// (u^-1 k1 u k2 ... u^-1 k_{2N-1} u k_{2N}) (k_{2N} u^-1 k_{2N-1} u ... k2 u^-1 k1 u)^-1,
/// before reduction; length 4N(|u|+1). Throws KappaCollision.
Word hub_word_unreduced(const Word& u, std::size_t n);
Word hub_word(const Word& u, std::size_t n);

/// Generators: states, tape letters, specials, kappa1..kappa2N, positive rule
/// letters. Relators in the order transition, fixing, auxiliary, hub, deduplicated.
GroupPresentation generate_presentation(const Machine& m, const HubParams& hub,
                                        const std::vector<LetterId>& specials = {});

/// "! generators: ...", "! tags: ...", then one relator per line.
void write_presentation(std::ostream& out, const GroupPresentation& p);

/// The rule letter of a declared rule.
LetterId rule_letter(const SRule& r);

struct TraceStep {
  std::size_t relator = 0;
  int exponent = 1;
  Word conjugator;
};

/// start * prod conjugator^-1 relator^exponent conjugator == end in the free group.
struct RelatorTrace {
  Word start;
  std::vector<TraceStep> steps;
  Word end;
};

bool verify_trace(const GroupPresentation& p, const RelatorTrace& t);

/// Certificate that apply_rule(rule, w) = t^-1 w t in the presented group,
/// where t is the rule letter (inverted for negative rules). start = t^-1 flat(w) t,
/// end = flat(w'). One step per tape letter crossed, per substitution and per
/// untouched part. Throws NotApplicable.
RelatorTrace rule_application_trace(const GroupPresentation& p, const Machine& m, std::size_t rule,
                                    const AdmissibleWord& w);

/// Least number of relator applications turning w into the empty word,
/// through reduced words of length <= max_len; nullopt when the caps are hit.
std::optional<std::size_t> brute_force_area(const GroupPresentation& p, const Word& w, std::size_t max_len,
                                            std::size_t max_area);

// ---- S(M)-shaped words -------------------------------------------------------

/// Hardware with 17k+6 parts:
///   E(0) x(0) F(0) | per tape i: E(i) x(i) F_q(i) E'(i) p(i) q(i) r(i) s(i) t(i) u(i)
///   pbar(i) qbar(i) rbar(i) sbar(i) tbar(i) ubar(i) F'_q(i) | E'(k+1) x'(k+1) F'(k+1)
struct SigmaShape {
  std::size_t k = 0;
  std::vector<Alphabet> tapes;      // Y_1..Y_k
  std::vector<std::string> states;  // states q of the Turing machine
  Hardware hardware;
  LetterId alpha = 0, omega = 0, delta = 0;
};

SigmaShape sigma_shape(std::vector<Alphabet> tapes, std::vector<std::string> states);

struct TapeConfig {
  Word v;             // tape contents between E_i and F_q
  std::string state;  // q
};

/// sigma(c), parsed against the shape's hardware. Throws AlphabetMismatch.
AdmissibleWord sigma_encode(const SigmaShape& shape, const std::vector<TapeConfig>& config, std::size_t n);

// ---- Turing machine commands -------------------------------------------------

struct TMPiece {
  std::vector<std::string> from;
  std::vector<std::string> to;
};

/// "{F_q1 -> F_q2, a F_q2 -> F_q3}"; tokens are whitespace separated.
std::vector<TMPiece> parse_tm_command(std::string_view text);

struct TMCommandForm {
  int form = 0;  // 1: a F_q -> F_q', 2: E_i F_q -> E_i F_q'
  Polarity polarity = Polarity::positive;
  std::size_t piece = 0;  // index of the non-plain piece
};

/// Tokens starting with "F_" are F-letters, "E_" are left markers, anything
/// else is a tape letter. Throws UnrecognizedShape.
TMCommandForm classify_tm_command(const std::vector<TMPiece>& cmd);

}  // namespace smw
