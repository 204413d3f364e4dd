#include "smw/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace smw {

BaseWord parse_base_word(std::string_view text) {
  BaseWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'Q') throw Error("base word '" + std::string(text) + "': expected Q at " + std::to_string(i));
    std::size_t j = ++i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw Error("base word '" + std::string(text) + "': Q without a number");
    int part = std::stoi(std::string(text.substr(i, j - i)));
    if (part < 1) throw Error("base word '" + std::string(text) + "': parts are numbered from 1");
    out.push_back(part);
    i = j;
  }
  return out;
}

std::string to_string(const BaseWord& w) {
  std::string out;
  for (int q : w) out += "Q" + std::to_string(q);
  return out;
}

namespace {

// covered[i][j]: w[i..j] (inclusive) is B-covered.
std::vector<std::vector<char>> covered_table(const BaseSet& b, const BaseWord& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> starts(n);  // starts[e]: occurrences ending at e
  for (const auto& base : b) {
    if (base.empty() || base.size() > n) continue;
    for (std::size_t s = 0; s + base.size() <= n; ++s)
      if (std::equal(base.begin(), base.end(), w.begin() + static_cast<long>(s))) starts[s + base.size() - 1].push_back(s);
  }
  std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
  std::vector<char> marked(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(marked.begin(), marked.end(), 0);
    std::size_t count = 0;
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t s : starts[j]) {
        if (s < i) continue;
        for (std::size_t k = s; k <= j; ++k)
          if (!marked[k]) {
            marked[k] = 1;
            ++count;
          }
      }
      out[i][j] = count == j - i + 1 && w[i] == w[j];
    }
  }
  return out;
}

bool any_covered(const std::vector<std::vector<char>>& t, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i; j < hi; ++j)
      if (t[i][j]) return true;
  return false;
}

}  // namespace

bool is_covered(const BaseSet& b, const BaseWord& w) {
  if (w.empty()) return false;
  return covered_table(b, w)[0][w.size() - 1];
}

bool is_narrow(const BaseSet& b, const BaseWord& w) {
  if (w.empty()) return true;
  return !any_covered(covered_table(b, w), 0, w.size());
}

bool is_tight(const BaseSet& b, const BaseWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return false;
  auto t = covered_table(b, w);
  bool suffix = false;
  for (std::size_t s = 0; s + 1 < n; ++s) suffix = suffix || t[s][n - 1];
  return suffix && !any_covered(t, 0, n - 1);
}

bool is_tight_whole(const BaseSet& b, const BaseWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return false;
  auto t = covered_table(b, w);
  std::size_t count = 0;
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (t[i][j]) {
        ++count;
        if (j == n - 1 && i + 1 < n) start = i;
      }
  return start.has_value() && count == 1;
}

BaseWord base_of(const AdmissibleWord& w) {
  BaseWord out;
  for (std::size_t i = 0; i < w.states().size(); ++i) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::size_t a_length(const AdmissibleWord& w) { return w.a_length(); }

std::size_t width(const Computation& c) {
  std::size_t best = 0;
  for (const auto& w : c.words) best = std::max(best, w.a_length());
  return best;
}

std::uint64_t area_estimate(const Computation& c, std::size_t n_parts) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.steps.size(); ++i) total += n_parts + c.words[i].a_length();
  return total;
}

double log_prime(double x) {
  if (!(x > 0)) throw NonPositive("log' needs a positive argument, got " + std::to_string(x));
  return std::max(std::log2(x), 1.0);
}

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0)) throw DomainError(std::string(what) + " must be positive, got " + std::to_string(x));
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0)) throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(x));
}

double log_ratio(double n) { return log_prime(n) / log_prime(log_prime(n)); }

}  // namespace

double bound_width_lemma2(double c, double w, double wt, double t) {
  require_positive(c, "C");
  require_nonnegative(w, "|W|");
  require_nonnegative(wt, "|W_t|");
  if (!(t >= 4)) throw DomainError("log2 log2 t needs t >= 4, got " + std::to_string(t));
  return c * (w + wt + std::log2(t) / std::log2(std::log2(t)));
}

double bound_area_lemma3(double c, double t, double w0_a, double wt_a) {
  require_positive(c, "C");
  require_nonnegative(t, "t");
  require_nonnegative(w0_a, "|W_0|_a");
  require_nonnegative(wt_a, "|W_t|_a");
  return c * t * (w0_a + wt_a);
}

double bound_area_lemma4(double c, double h, double w_a, double w2_a, double n) {
  require_positive(c, "C");
  if (!(h >= 1)) throw DomainError("height must be at least 1");
  require_nonnegative(w_a, "|W|_a");
  require_nonnegative(w2_a, "|W'|_a");
  require_positive(n, "n");
  return c * h * (w_a + w2_a + log_ratio(n) + 1);
}

double bound_area_lemma5(double m, double n, double e) {
  require_positive(m, "M");
  require_positive(n, "n");
  require_nonnegative(e, "E");
  const double r = log_ratio(n);
  return m * n * n * r + m * r * e;
}

Lemma6Value bound_area_lemma6(double big_m, double n, std::uint64_t r, double big_r, double e, const GTable& g) {
  require_positive(big_m, "M");
  require_positive(n, "n");
  require_positive(big_r, "R");
  require_nonnegative(e, "E");
  if (r < 1) throw DomainError("r must be a positive integer");
  const double gg = static_cast<double>(g.at(g.at(r - 1)));
  Lemma6Value out;
  out.m = big_r * gg * log_prime(n);
  out.value = big_m * (n * n + out.m * out.m * log_prime(out.m)) + big_m * e;
  return out;
}

GGCheck check_gg_inequality(const GTable& g, std::uint64_t r) {
  if (r < 1) throw DomainError("r must be a positive integer");
  GGCheck c;
  c.r = r;
  const std::uint64_t prev = g.at(r - 1), cur = g.at(r);
  const std::uint64_t a = g.at(prev), b = g.at(cur);
  c.lhs = a * a;
  c.rhs = b;
  c.holds = c.lhs <= c.rhs;
  c.window_sane = 2.0 * static_cast<double>(prev) <= std::log2(6.0) + static_cast<double>(cur);
  return c;
}

std::vector<LemcoolInterval> lemcool_intervals(const GTable& g, std::uint64_t i_max, double eps) {
  if (eps >= 0.25) throw EpsilonTooLarge("epsilon must be below 1/4, got " + std::to_string(eps));
  if (!(eps > 0)) throw DomainError("epsilon must be positive, got " + std::to_string(eps));
  std::vector<LemcoolInterval> out;
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    LemcoolInterval v;
    v.i = i;
    v.n = static_cast<double>(g.at(g.at(i)));
    v.d = std::pow(v.n, 0.75);
    v.lambda = std::pow(v.n, eps);
    v.lo = v.d / v.lambda;
    v.hi = v.lambda * v.d;
    v.e_cap = v.n * v.n;
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<double, double>> as_ranges(const std::vector<LemcoolInterval>& v) {
  std::vector<std::pair<double, double>> out;
  for (const auto& x : v) out.emplace_back(x.lo, x.hi);
  return out;
}

P1Report check_p1(const std::map<std::uint64_t, double>& samples, double c,
                  const std::vector<std::pair<double, double>>& intervals) {
  if (samples.empty()) throw DomainError("check_p1 needs at least one sample");
  P1Report r;
  for (const auto& [n, area] : samples) {
    const double x = static_cast<double>(n);
    bool inside = std::any_of(intervals.begin(), intervals.end(), [x](const auto& iv) { return iv.first <= x && x <= iv.second; });
    if (!inside) continue;
    ++r.checked;
    if (area > c * x * x && r.pass) {
      r.pass = false;
      r.violator = n;
    }
  }
  return r;
}

double fit_constant(const std::vector<std::pair<double, double>>& measured_and_base) {
  double c = 0;
  for (const auto& [measured, base] : measured_and_base) {
    if (!(base > 0)) {
      if (measured > 0) throw DomainError("cannot fit a constant against a zero bound");
      continue;
    }
    c = std::max(c, measured / base);
  }
  return c;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "lemma,inputs,formula_value,measured_value,pass\n";
  for (const auto& r : rows)
    out << csv_field(r.lemma) << ',' << csv_field(r.inputs) << ',' << num(r.formula_value) << ','
        << (r.measured_value ? num(*r.measured_value) : "") << ',' << (r.pass ? "true" : "false") << '\n';
}

void write_intervals_csv(std::ostream& out, const std::vector<LemcoolInterval>& v) {
  out << "i,n_i,d_i,lambda_i,lo,hi,e_cap\n";
  for (const auto& x : v)
    out << x.i << ',' << num(x.n) << ',' << num(x.d) << ',' << num(x.lambda) << ',' << num(x.lo) << ',' << num(x.hi)
        << ',' << num(x.e_cap) << '\n';
}

}  // namespace smw
