#pragma once

// Small machines used by the tests, the acceptance suite and the CLI demos.

#include <cstddef>

#include "smw/machine.hpp"

namespace smw {

/// A chain machine with `parts` state parts K_i = {k<i>} (1-based names) and
/// parts-1 sectors, each over the first `letters` of a, b, c, ...
///
/// Rules, in order, up to `rules` of them:
///   theta  [k1 -> k1, ..., kN -> kN]
///   grow   [k1 -> k1 a, ..., k(N-1) -> k(N-1) a, kN -> kN]
///   shed   [k1 -> k1, a k2 -> k2, ..., a kN -> kN]
Machine chain_machine(std::size_t parts, std::size_t rules, std::size_t letters);

/// Two parts {q1, q1'} | {q2}, one sector over {a, b}; rules
///   flip  [q1 a -> q1' a, q2 -> q2]
///   push  [q1' -> q1' b, q2 -> q2]
///   tie   [q1' b q2 -> q1 a q2]   (inner sector matched literally)
/// Used for exhaustive rule-application sweeps.
Machine two_letter_machine();

}  // namespace smw
