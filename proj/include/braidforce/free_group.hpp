#ifndef BRAIDFORCE_FREE_GROUP_HPP
#define BRAIDFORCE_FREE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace braidforce {

/// A generator letter x_index^sign. Indices are 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  bool cancels(const Letter& other) const {
    return index == other.index && sign == -other.sign;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letter order used everywhere a deterministic order is needed:
/// index ascending, positive before negative.
bool letter_less(const Letter& a, const Letter& b);

/// Freely reduced word in the free group F_n. Immutable value type; the empty
/// word is the identity.
class FreeWord {
 public:
  explicit FreeWord(int rank);

  /// Freely reduces `letters`. Throws std::out_of_range on a bad index and
  /// std::invalid_argument on rank < 1.
  static FreeWord reduce(int rank, std::span<const Letter> letters);
  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Subword [first, first + count), which is again reduced.
  FreeWord subword(std::size_t first, std::size_t count) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  FreeWord(int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_;
  std::vector<Letter> letters_;

  friend class WordBuilder;
};

/// Stack-based free reducer; appends letters and cancels on the fly.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}

  void push(const Letter& l);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord build() &&;

 private:
  int rank_;
  std::vector<Letter> stack_;
};

/// Shortlex order: length first, then lexicographic by letter_less.
bool shortlex_less(const FreeWord& a, const FreeWord& b);

struct ShortlexLess {
  bool operator()(const FreeWord& a, const FreeWord& b) const { return shortlex_less(a, b); }
};

FreeWord concat(const FreeWord& w1, const FreeWord& w2);
FreeWord concat(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3);
FreeWord invert(const FreeWord& w);
FreeWord word_power(const FreeWord& w, int k);

struct CyclicReduction {
  FreeWord core;  // cyclically reduced
  FreeWord conj;  // w = conj * core * conj^-1
};

CyclicReduction cyclic_reduce(const FreeWord& w);

/// Returns c with w2 = c * w1 * c^-1, or nothing if w1 and w2 are not
/// conjugate. The witness is checked by substitution before it is returned.
std::optional<FreeWord> conjugator(const FreeWord& w1, const FreeWord& w2);

using AbelianVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

AbelianVector abelianize(const FreeWord& w);

/// Endomorphism of F_n given by the images of x_1..x_n.
class FreeEndo {
 public:
  FreeEndo(int rank, std::vector<FreeWord> images);

  static FreeEndo identity(int rank);

  int rank() const { return rank_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }

  FreeWord apply(const FreeWord& w) const;

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

inline FreeWord apply(const FreeEndo& e, const FreeWord& w) { return e.apply(w); }

/// Diagrammatic composition: compose(e1, e2)(w) = e2(e1(w)).
FreeEndo compose(const FreeEndo& e1, const FreeEndo& e2);
FreeEndo endo_power(const FreeEndo& e, int m);
bool endo_eq(const FreeEndo& e1, const FreeEndo& e2);

/// Column j is abelianize(image of x_j), so that
/// abelianize(e(w)) = endo_matrix(e) * abelianize(w).
IntMatrix endo_matrix(const FreeEndo& e);
AbelianVector mat_vec(const IntMatrix& m, const AbelianVector& v);

}  // namespace braidforce

#endif  // BRAIDFORCE_FREE_GROUP_HPP
