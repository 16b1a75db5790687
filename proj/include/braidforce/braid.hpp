#ifndef BRAIDFORCE_BRAID_HPP
#define BRAIDFORCE_BRAID_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "braidforce/free_group.hpp"

namespace braidforce {

/// Word in the Artin generators sigma_1..sigma_{n-1} of B_n. No normal form is
/// imposed; equality of braids is decided by braid_eq.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  static BraidWord generator(int strands, int index, int sign = 1);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Literal (letter-by-letter) equality, not braid equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

/// Bijection on {1..n}, stored 0-based internally.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-based point i.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Diagrammatic: (then(p, q))(i) = q(p(i)).
Permutation then(const Permutation& p, const Permutation& q);

Permutation perm(const BraidWord& b);

/// A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1 on n strands.
BraidWord pure_gen(int i, int j, int n);

/// Artin action on F_n. sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to
/// x_i; letters are composed left to right, so artin(b1 b2) =
/// compose(artin(b1), artin(b2)).
FreeEndo artin(const BraidWord& b);

bool braid_eq(const BraidWord& b1, const BraidWord& b2);
BraidWord braid_invert(const BraidWord& b);
BraidWord power(const BraidWord& b, int m);
bool fixes_last_strand(const BraidWord& w);

}  // namespace braidforce

#endif  // BRAIDFORCE_BRAID_HPP
