#ifndef BRAIDFORCE_AUG_BRAID_HPP
#define BRAIDFORCE_AUG_BRAID_HPP

#include <string>
#include <string_view>

#include "braidforce/braid.hpp"
#include "braidforce/free_group.hpp"
#include "braidforce/nielsen.hpp"

namespace braidforce {

/// Element iota(base) * phi(tail) of the subgroup of B_{n+1} fixing the last
/// strand. base lives in B_n, tail in U_{n+1} = F_n.
struct AugBraid {
  BraidWord base;
  FreeWord tail;

  AugBraid(BraidWord b, FreeWord t);
  static AugBraid identity(int n);

  int strands() const { return base.strands(); }
};

/// Each x_i^{+-1} becomes A_{i,n+1}^{+-1} on n+1 strands.
BraidWord phi_word(const FreeWord& u);

/// Section of strand deletion: the same letters on n+1 strands.
BraidWord section_word(const BraidWord& b);

/// Conjugation action of B_n on U_{n+1}: iota(b) phi(u) iota(b)^-1 =
/// phi(act(b)(u)). Calibrated to artin(b^-1).
FreeEndo act(const BraidWord& b);

BraidWord to_word(const AugBraid& a);

/// Deletes the last strand of w (which must end where it started).
BraidWord delete_last_strand(const BraidWord& w);

/// Inverse of to_word. Throws std::invalid_argument if w does not fix its
/// last strand.
AugBraid from_word(const BraidWord& w);

AugBraid compose(const AugBraid& a1, const AugBraid& a2);
bool aug_eq(const AugBraid& a1, const AugBraid& a2);

/// Conjugacy by elements of U_{n+1}. Reduces to twisted conjugacy of the tails
/// under artin(base); a Yes witness alpha satisfies
/// phi(alpha) a1 phi(alpha)^-1 = a2.
Decision u_equiv(const AugBraid& a1, const AugBraid& a2, const Bounds& bounds);

/// `(<braid word> ; <free word>)` on n base strands.
AugBraid parse_aug_braid(std::string_view text, int n, std::size_t max_length = 128);
std::string format_aug_braid(const AugBraid& a);

}  // namespace braidforce

#endif  // BRAIDFORCE_AUG_BRAID_HPP
