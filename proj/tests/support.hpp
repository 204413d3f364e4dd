#pragma once

#include <random>
#include <vector>

#include "smw/word.hpp"

namespace smw::testing {

inline constexpr std::uint64_t kSeed = 20240611;

// Repeatedly scans for an adjacent x x^-1 pair and deletes it.
inline std::vector<Sym> naive_reduce(std::vector<Sym> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<LetterId>& letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Sym> out(len(rng));
  for (auto& s : out) s = inv(rng) ? neg(letters[pick(rng)]) : pos(letters[pick(rng)]);
  return Word(std::move(out));
}

inline Word random_positive(std::mt19937_64& rng, const std::vector<LetterId>& letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  std::vector<Sym> out(len(rng));
  for (auto& s : out) s = pos(letters[pick(rng)]);
  return Word(std::move(out));
}

}  // namespace smw::testing
