#include "braidforce/free_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace braidforce {

namespace {

void check_rank(int rank) {
  if (rank < 1) {
    throw std::invalid_argument("free group rank must be positive, got " + std::to_string(rank));
  }
}

void check_same_rank(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

bool letter_less(const Letter& a, const Letter& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;
}

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord FreeWord::reduce(int rank, std::span<const Letter> letters) {
  WordBuilder builder(rank);
  for (const auto& l : letters) builder.push(l);
  return std::move(builder).build();
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  const Letter l{index, sign >= 0 ? 1 : -1};
  return reduce(rank, std::span<const Letter>(&l, 1));
}

FreeWord FreeWord::subword(std::size_t first, std::size_t count) const {
  return FreeWord(rank_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

void WordBuilder::push(const Letter& l) {
  if (l.index < 1 || l.index > rank_) {
    throw std::out_of_range("generator index " + std::to_string(l.index) + " outside 1.." +
                            std::to_string(rank_));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
  if (!stack_.empty() && stack_.back().cancels(l)) {
    stack_.pop_back();
  } else {
    stack_.push_back(l);
  }
}

void WordBuilder::append(const FreeWord& w) {
  check_same_rank(rank_, w.rank());
  for (const auto& l : w.letters()) {
    if (!stack_.empty() && stack_.back().cancels(l)) {
      stack_.pop_back();
    } else {
      stack_.push_back(l);
    }
  }
}

void WordBuilder::append_inverse(const FreeWord& w) {
  check_same_rank(rank_, w.rank());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const Letter l = it->inverse();
    if (!stack_.empty() && stack_.back().cancels(l)) {
      stack_.pop_back();
    } else {
      stack_.push_back(l);
    }
  }
}

FreeWord WordBuilder::build() && {
  check_rank(rank_);
  return FreeWord(rank_, std::move(stack_));
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                      b.letters().end(), letter_less);
}

FreeWord concat(const FreeWord& w1, const FreeWord& w2) {
  check_same_rank(w1.rank(), w2.rank());
  WordBuilder b(w1.rank());
  b.append(w1);
  b.append(w2);
  return std::move(b).build();
}

FreeWord concat(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3) {
  check_same_rank(w1.rank(), w2.rank());
  check_same_rank(w1.rank(), w3.rank());
  WordBuilder b(w1.rank());
  b.append(w1);
  b.append(w2);
  b.append(w3);
  return std::move(b).build();
}

FreeWord invert(const FreeWord& w) {
  WordBuilder b(w.rank());
  b.append_inverse(w);
  return std::move(b).build();
}

FreeWord word_power(const FreeWord& w, int k) {
  WordBuilder b(w.rank());
  for (int i = 0; i < std::abs(k); ++i) {
    if (k > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return {w.subword(lo, hi - lo), w.subword(0, lo)};
}

std::optional<FreeWord> conjugator(const FreeWord& w1, const FreeWord& w2) {
  check_same_rank(w1.rank(), w2.rank());
  const auto [k1, c1] = cyclic_reduce(w1);
  const auto [k2, c2] = cyclic_reduce(w2);
  if (k1.size() != k2.size()) return std::nullopt;

  // k1 = a b and k2 = b a give k2 = a^-1 k1 a, hence w2 = (c2 a^-1 c1^-1) w1 (...)^-1.
  const std::size_t len = k1.size();
  for (std::size_t shift = 0; shift < std::max<std::size_t>(len, 1); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (!(k2[i] == k1[(i + shift) % len])) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    const FreeWord a = k1.subword(0, shift);
    FreeWord c = concat(c2, invert(a), invert(c1));
    if (concat(c, w1, invert(c)) != w2) {
      throw std::logic_error("conjugator: witness failed verification");
    }
    return c;
  }
  return std::nullopt;
}

AbelianVector abelianize(const FreeWord& w) {
  AbelianVector v(static_cast<std::size_t>(w.rank()), 0);
  for (const auto& l : w.letters()) v[static_cast<std::size_t>(l.index - 1)] += l.sign;
  return v;
}

FreeEndo::FreeEndo(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("endomorphism needs exactly " + std::to_string(rank) + " images");
  }
  for (const auto& img : images_) check_same_rank(rank, img.rank());
}

FreeEndo FreeEndo::identity(int rank) {
  check_rank(rank);
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
  return FreeEndo(rank, std::move(images));
}

FreeWord FreeEndo::apply(const FreeWord& w) const {
  check_same_rank(rank_, w.rank());
  WordBuilder b(rank_);
  for (const auto& l : w.letters()) {
    const FreeWord& img = images_[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      b.append(img);
    } else {
      b.append_inverse(img);
    }
  }
  return std::move(b).build();
}

FreeEndo compose(const FreeEndo& e1, const FreeEndo& e2) {
  check_same_rank(e1.rank(), e2.rank());
  std::vector<FreeWord> images;
  images.reserve(e1.images().size());
  for (const auto& img : e1.images()) images.push_back(e2.apply(img));
  return FreeEndo(e1.rank(), std::move(images));
}

FreeEndo endo_power(const FreeEndo& e, int m) {
  if (m < 0) throw std::invalid_argument("endo_power needs m >= 0");
  FreeEndo result = FreeEndo::identity(e.rank());
  for (int i = 0; i < m; ++i) result = compose(result, e);
  return result;
}

bool endo_eq(const FreeEndo& e1, const FreeEndo& e2) {
  check_same_rank(e1.rank(), e2.rank());
  return e1.images() == e2.images();
}

IntMatrix endo_matrix(const FreeEndo& e) {
  const auto n = static_cast<std::size_t>(e.rank());
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = abelianize(e.images()[j]);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

AbelianVector mat_vec(const IntMatrix& m, const AbelianVector& v) {
  AbelianVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

}  // namespace braidforce
