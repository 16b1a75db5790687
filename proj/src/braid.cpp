#include "braidforce/braid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace braidforce {

namespace {

void check_strands(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("strand count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Automorphism of one Artin letter acting on F_n.
FreeEndo letter_action(int n, const Letter& l) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(FreeWord::generator(n, j));
  const int i = l.index;
  const auto xi = FreeWord::generator(n, i);
  const auto xj = FreeWord::generator(n, i + 1);
  if (l.sign > 0) {
    images[static_cast<std::size_t>(i - 1)] = concat(xi, xj, invert(xi));
    images[static_cast<std::size_t>(i)] = xi;
  } else {
    images[static_cast<std::size_t>(i - 1)] = xj;
    images[static_cast<std::size_t>(i)] = concat(invert(xj), xi, xj);
  }
  return FreeEndo(n, std::move(images));
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands - 1) {
      throw std::out_of_range("braid generator s" + std::to_string(l.index) + " invalid on " +
                              std::to_string(strands) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {Letter{index, sign >= 0 ? 1 : -1}});
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  check_strands(a.strands(), b.strands());
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation then(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(i - 1)] = q(p(i));
  return Permutation(std::move(images));
}

Permutation perm(const BraidWord& b) {
  // where[k] is the current image of the point k+1.
  std::vector<int> where(static_cast<std::size_t>(b.strands()));
  std::iota(where.begin(), where.end(), 1);
  for (const auto& l : b.letters()) {
    for (int& w : where) {
      if (w == l.index) {
        w = l.index + 1;
      } else if (w == l.index + 1) {
        w = l.index;
      }
    }
  }
  return Permutation(std::move(where));
}

BraidWord pure_gen(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::out_of_range("pure_gen needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
  std::vector<Letter> letters;
  for (int k = j - 1; k > i; --k) letters.push_back({k, 1});
  letters.push_back({i, 1});
  letters.push_back({i, 1});
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back({k, -1});
  return BraidWord(n, std::move(letters));
}

FreeEndo artin(const BraidWord& b) {
  const int n = b.strands();
  FreeEndo result = FreeEndo::identity(n);
  for (const auto& l : b.letters()) result = compose(result, letter_action(n, l));
  return result;
}

bool braid_eq(const BraidWord& b1, const BraidWord& b2) {
  check_strands(b1.strands(), b2.strands());
  return endo_eq(artin(b1), artin(b2));
}

BraidWord braid_invert(const BraidWord& b) {
  std::vector<Letter> letters(b.letters().rbegin(), b.letters().rend());
  for (auto& l : letters) l.sign = -l.sign;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord power(const BraidWord& b, int m) {
  const BraidWord unit = m < 0 ? braid_invert(b) : b;
  BraidWord result(b.strands());
  for (int k = 0; k < std::abs(m); ++k) result = result * unit;
  return result;
}

bool fixes_last_strand(const BraidWord& w) { return perm(w)(w.strands()) == w.strands(); }

}  // namespace braidforce
