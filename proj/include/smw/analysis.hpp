#pragma once

// Base-word predicates, computation metrics and the bound formulas used to
// check measured computations against the area and width estimates.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smw/adding.hpp"
#include "smw/machine.hpp"

namespace smw {

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPositive : public DomainError {
 public:
  using DomainError::DomainError;
};

class EpsilonTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---- base words --------------------------------------------------------------

/// A word over part names Q_1, Q_2, ...; stored as 1-based part numbers.
using BaseWord = std::vector<int>;
using BaseSet = std::vector<BaseWord>;

/// "Q1Q2Q1" or "Q1 Q2 Q1".
BaseWord parse_base_word(std::string_view text);
std::string to_string(const BaseWord& w);

/// Every position lies in an occurrence of some base from B, and the first and
/// last letters agree.
bool is_covered(const BaseSet& b, const BaseWord& w);
/// No nonempty subword is covered.
bool is_narrow(const BaseSet& b, const BaseWord& w);
/// w = u x v x with x v x covered, and u x v (w without its last letter) has no
/// covered subword.
bool is_tight(const BaseSet& b, const BaseWord& w);
/// Whole-word reading: w = u x v x with x v x covered and no other occurrence
/// of a covered subword anywhere in w.
bool is_tight_whole(const BaseSet& b, const BaseWord& w);

/// The part-name word of an admissible word (parts are 1-based).
BaseWord base_of(const AdmissibleWord& w);

// ---- metrics -----------------------------------------------------------------

std::size_t a_length(const AdmissibleWord& w);
/// max_i |W_i|_a.
std::size_t width(const Computation& c);

/// Cell-count model of the area swept by a computation:
/// sum over steps of (n_parts + |W_i|_a), W_i the source word of step i.
std::uint64_t area_estimate(const Computation& c, std::size_t n_parts);

/// max(log2 x, 1). Throws NonPositive for x <= 0.
double log_prime(double x);

// ---- bound formulas ----------------------------------------------------------

/// C(|W| + |W_t| + log2 t / log2 log2 t); t >= 4.
double bound_width_lemma2(double c, double w, double wt, double t);
/// C t (|W_0|_a + |W_t|_a).
double bound_area_lemma3(double c, double t, double w0_a, double wt_a);
/// C h (|W|_a + |W'|_a + log'n / log'log'n + 1).
double bound_area_lemma4(double c, double h, double w_a, double w2_a, double n);
/// M n^2 log'n / log'log'n + M (log'n / log'log'n) E.
double bound_area_lemma5(double m, double n, double e);

struct Lemma6Value {
  double m = 0;      // R g(g(r-1)) log'n
  double value = 0;  // M (n^2 + m^2 log'm) + M E
};
/// Needs g(r-1) and g(g(r-1)) in the table (GTableMiss otherwise).
Lemma6Value bound_area_lemma6(double big_m, double n, std::uint64_t r, double big_r, double e, const GTable& g);

struct GGCheck {
  std::uint64_t r = 0;
  std::uint64_t lhs = 0;  // g(g(r-1))^2
  std::uint64_t rhs = 0;  // g(g(r))
  bool holds = false;
  /// (2^{g(r-1)})^2 <= 6 * 2^{g(r)}: the inequality's shape under the window bounds.
  bool window_sane = false;
};

/// g(g(r-1))^2 <= g(g(r)). Throws GTableMiss.
GGCheck check_gg_inequality(const GTable& g, std::uint64_t r);

struct LemcoolInterval {
  std::uint64_t i = 0;
  double n = 0;       // g(g(i))
  double d = 0;       // n^{3/4}
  double lambda = 0;  // n^eps
  double lo = 0;      // d / lambda
  double hi = 0;      // lambda d
  double e_cap = 0;   // n^2, ceiling used for the dispersion term
};

/// i = 1..i_max. Throws EpsilonTooLarge for eps >= 1/4, DomainError for eps <= 0, GTableMiss.
std::vector<LemcoolInterval> lemcool_intervals(const GTable& g, std::uint64_t i_max, double eps);

struct P1Report {
  bool pass = true;
  std::size_t checked = 0;  // samples that fell inside some interval
  std::optional<std::uint64_t> violator;
};

/// area(n) <= c n^2 for every sampled n inside the union of intervals.
/// Throws DomainError on an empty sample set.
P1Report check_p1(const std::map<std::uint64_t, double>& samples, double c,
                  const std::vector<std::pair<double, double>>& intervals);
std::vector<std::pair<double, double>> as_ranges(const std::vector<LemcoolInterval>& v);

/// Least constant C with measured <= C * base for every pair.
double fit_constant(const std::vector<std::pair<double, double>>& measured_and_base);

// ---- reports -----------------------------------------------------------------

struct BoundRow {
  std::string lemma;
  std::string inputs;
  double formula_value = 0;
  std::optional<double> measured_value;
  bool pass = true;
};

/// columns: lemma,inputs,formula_value,measured_value,pass
void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows);
/// columns: i,n_i,d_i,lambda_i,lo,hi,e_cap
void write_intervals_csv(std::ostream& out, const std::vector<LemcoolInterval>& v);

}  // namespace smw
