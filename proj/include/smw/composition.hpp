#pragma once

// S∘Z: every step of S is slowed down by full runs of adding-machine copies.
//
// For S with state parts K_1..K_N the composed parts are
//   K_1, P_1, K_2, P_2, ..., P_{N-1}, K_N          (2N-1 parts)
// and sector i of S splits into Ybar_{2i-1} = Y_{i,0} u Y_{i,1} (left of p_i)
// and Ybar_{2i} = Y_{i,0} (right of p_i). In the 0-based API, S part k sits at
// composed part 2k, P_{k+1} at 2k+1, S sector s at composed sectors 2s, 2s+1.
//
// P_i = {p_i} u {p_i(theta,j) : theta in Theta_+, j = 1,2,3}. The decorated
// letters display as "p1.theta.1".

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smw/machine.hpp"

namespace smw {

class ShapeError : public Error {
 public:
  using Error::Error;
};

class MidSimulation : public Error {
 public:
  using Error::Error;
};

class CopyLeak : public Error {
 public:
  using Error::Error;
};

/// Composed-rule indices belonging to one positive rule theta of S.
struct ComposedFamily {
  std::size_t theta = 0;       // declared index in S
  std::size_t modified = 0;    // theta-bar
  std::vector<std::vector<std::size_t>> copies;  // per S sector, Z priority order
  std::size_t transition = 0;
};

struct ComposedMachine {
  Machine source;
  Machine machine;
  std::vector<ComposedFamily> families;
  /// Per S sector: S tape letter -> Y_{s,0} / Y_{s,1} copy.
  std::vector<std::map<LetterId, LetterId>> copy0, copy1;
  std::vector<LetterId> plain;  // p_i per S sector
  /// decorated[theta][s][j-1] = p_{s+1}(theta, j)
  std::vector<std::vector<std::array<LetterId, 3>>> decorated;

  std::size_t source_parts() const { return source.hardware().parts(); }
  const ComposedFamily& family(std::size_t theta) const;
};

/// Throws ShapeError unless S has at least two parts and every positive rule
/// has one single-part substitution per part:
///   [k_1 u_1 -> k'_1 u'_1, v_1 k_2 u_2 -> v'_1 k'_2 u'_2, ..., v_{N-1} k_N -> v'_{N-1} k'_N]
ComposedMachine compose(const Machine& s);

/// |Theta_+| + sum_i |Theta_+| (4|Y_i| + 2) + |Theta_+|
std::size_t expected_composed_rules(const Machine& s);

struct CompositionCounts {
  std::size_t theta_plus = 0;
  std::size_t modified = 0;
  std::vector<std::size_t> copies_per_sector;
  std::size_t transition = 0;
  std::size_t total = 0;
  std::size_t expected = 0;
  std::vector<std::size_t> p_letters;  // |P_i|
};

CompositionCounts count_rules(const ComposedMachine& cm);

/// Inserts p_i at the right end of sector i and maps tape letters to Y_{i,0}.
AdmissibleWord lift_word(const ComposedMachine& cm, const AdmissibleWord& w);

/// Inverse of lift_word. Throws MidSimulation on a decorated p-letter or a
/// nonempty Ybar_{2i}, CopyLeak on a Y_{i,1} letter.
AdmissibleWord project(const ComposedMachine& cm, const AdmissibleWord& w);

struct SimulatedStep {
  Computation computation;
  std::vector<std::uint64_t> sector_steps;  // Z_i(theta) run length per sector
};

/// theta-bar, then the Z_i(theta) copies left to right, then the transition
/// rule. `theta` is a declared rule index of S. Throws NotApplicable or NotFound.
SimulatedStep simulate_step(const ComposedMachine& cm, std::size_t theta, const AdmissibleWord& lifted);

}  // namespace smw
