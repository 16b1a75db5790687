// Shared helpers for the test binaries: seeded generators and oracles that
// are independent of the library code paths they check.
#ifndef BRAIDFORCE_TEST_SUPPORT_HPP
#define BRAIDFORCE_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "braidforce/braid.hpp"
#include "braidforce/free_group.hpp"
#include "braidforce/text.hpp"

namespace testsupport {

using braidforce::BraidWord;
using braidforce::FreeWord;
using braidforce::Letter;

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int n, std::size_t len) {
  std::uniform_int_distribution<int> idx(1, n);
  std::bernoulli_distribution pos(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({idx(rng), pos(rng) ? 1 : -1});
  return out;
}

inline FreeWord random_word(std::mt19937_64& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return FreeWord::reduce(n, random_letters(rng, n, len(rng)));
}

/// Random reduced word of exactly `len` letters.
inline FreeWord random_reduced_exact(std::mt19937_64& rng, int n, std::size_t len) {
  std::uniform_int_distribution<int> idx(1, n);
  std::bernoulli_distribution pos(0.5);
  std::vector<Letter> out;
  while (out.size() < len) {
    Letter l{idx(rng), pos(rng) ? 1 : -1};
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return FreeWord::reduce(n, out);
}

inline BraidWord random_braid(std::mt19937_64& rng, int n, std::size_t len) {
  if (n < 2) return BraidWord(n);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::bernoulli_distribution pos(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({idx(rng), pos(rng) ? 1 : -1});
  return BraidWord(n, out);
}

/// Oracle: rescan from the start after every single cancellation.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].index == w[i + 1].index && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline FreeWord w(const char* text, int rank) { return braidforce::parse_free_word(text, rank); }
inline BraidWord b(const char* text, int strands) { return braidforce::parse_braid_word(text, strands); }

/// The worked example: s1 s2 s3^-1 s4^-1 in B_5.
inline BraidWord example_beta() { return b("1 2 -3 -4", 5); }

}  // namespace testsupport

#endif  // BRAIDFORCE_TEST_SUPPORT_HPP
