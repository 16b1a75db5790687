#ifndef BRAIDFORCE_FOX_HPP
#define BRAIDFORCE_FOX_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidforce/free_group.hpp"

namespace braidforce {

using Integer = boost::multiprecision::cpp_int;

/// Element of the integral group ring Z[F_n]: a finite sum of reduced words
/// with nonzero coefficients. Terms are kept in shortlex order.
class GroupRingElem {
 public:
  using Terms = std::map<FreeWord, Integer, ShortlexLess>;

  explicit GroupRingElem(int rank) : rank_(rank) {}
  static GroupRingElem word(const FreeWord& w, Integer coefficient = 1);
  static GroupRingElem one(int rank) { return word(FreeWord(rank)); }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of w (zero when absent).
  Integer coefficient(const FreeWord& w) const;

  void add_term(const FreeWord& w, const Integer& coefficient);

  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  int rank_;
  Terms terms_;
};

GroupRingElem gr_add(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_negate(const GroupRingElem& a);
GroupRingElem gr_sub(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_left_mul(const FreeWord& w, const GroupRingElem& a);
GroupRingElem gr_right_mul(const GroupRingElem& a, const FreeWord& w);
Integer augmentation(const GroupRingElem& a);

/// Fox derivative d w / d x_j.
GroupRingElem fox(const FreeWord& w, int j);

/// Entry i is fox(image of x_i, i).
std::vector<GroupRingElem> jacobian_diagonal(const FreeEndo& e);

/// 1 - sum of the Jacobian diagonal, before any class merging.
GroupRingElem raw_trace(const FreeEndo& e);

/// Terms printed as `+2*[x1 x2^-1]`, `-[e]`; zero prints as `0`.
std::string format_group_ring(const GroupRingElem& a);
std::string format_coefficient_term(const Integer& coefficient, const FreeWord& w);

}  // namespace braidforce

#endif  // BRAIDFORCE_FOX_HPP
