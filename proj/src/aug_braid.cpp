#include "braidforce/aug_braid.hpp"

#include <cctype>
#include <stdexcept>

#include "braidforce/text.hpp"

namespace braidforce {

AugBraid::AugBraid(BraidWord b, FreeWord t) : base(std::move(b)), tail(std::move(t)) {
  if (base.strands() != tail.rank()) {
    throw std::invalid_argument("tail rank " + std::to_string(tail.rank()) + " differs from base strand count " +
                                std::to_string(base.strands()));
  }
}

AugBraid AugBraid::identity(int n) { return AugBraid(BraidWord(n), FreeWord(n)); }

BraidWord phi_word(const FreeWord& u) {
  const int n = u.rank();
  std::vector<Letter> letters;
  for (const auto& l : u.letters()) {
    const BraidWord a = pure_gen(l.index, n + 1, n + 1);
    const BraidWord piece = l.sign > 0 ? a : braid_invert(a);
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return BraidWord(n + 1, std::move(letters));
}

BraidWord section_word(const BraidWord& b) { return BraidWord(b.strands() + 1, b.letters()); }

FreeEndo act(const BraidWord& b) { return artin(braid_invert(b)); }

BraidWord to_word(const AugBraid& a) { return section_word(a.base) * phi_word(a.tail); }

BraidWord delete_last_strand(const BraidWord& w) {
  if (!fixes_last_strand(w)) throw std::invalid_argument("braid does not fix its last strand");
  int pos = w.strands();
  std::vector<Letter> kept;
  for (const auto& l : w.letters()) {
    if (l.index == pos) {
      pos = l.index + 1;
    } else if (l.index + 1 == pos) {
      pos = l.index;
    } else if (l.index + 1 < pos) {
      kept.push_back(l);
    } else {
      kept.push_back({l.index - 1, l.sign});
    }
  }
  return BraidWord(w.strands() - 1, std::move(kept));
}

AugBraid from_word(const BraidWord& w) {
  if (w.strands() < 2) throw std::invalid_argument("from_word needs at least two strands");
  BraidWord base = delete_last_strand(w);
  const int n = base.strands();
  const BraidWord pure = braid_invert(section_word(base)) * w;

  // pure = phi(u); it sends x_{n+1} to c x_{n+1} c^-1 and c maps onto u once
  // x_{n+1} is killed.
  const FreeEndo action = artin(pure);
  const auto last = FreeWord::generator(n + 1, n + 1);
  const auto c = conjugator(last, action.image(n + 1));
  if (!c) throw std::logic_error("from_word: last generator image is not a conjugate of x_{n+1}");
  std::vector<Letter> projected;
  for (const auto& l : c->letters()) {
    if (l.index != n + 1) projected.push_back(l);
  }
  AugBraid out(std::move(base), FreeWord::reduce(n, projected));
  if (!braid_eq(to_word(out), w)) throw std::logic_error("from_word: decomposition does not reproduce the word");
  return out;
}

AugBraid compose(const AugBraid& a1, const AugBraid& a2) {
  if (a1.strands() != a2.strands()) throw std::invalid_argument("augmented braid strand mismatch");
  // iota(b1) phi(u1) iota(b2) phi(u2) = iota(b1 b2) phi(act(b2^-1)(u1) u2), act(b2^-1) = artin(b2).
  return AugBraid(a1.base * a2.base, concat(artin(a2.base).apply(a1.tail), a2.tail));
}

bool aug_eq(const AugBraid& a1, const AugBraid& a2) {
  if (a1.strands() != a2.strands()) throw std::invalid_argument("augmented braid strand mismatch");
  return a1.tail == a2.tail && braid_eq(a1.base, a2.base);
}

Decision u_equiv(const AugBraid& a1, const AugBraid& a2, const Bounds& bounds) {
  if (a1.strands() != a2.strands()) throw std::invalid_argument("augmented braid strand mismatch");
  if (!braid_eq(a1.base, a2.base)) return Decision::no({}, "bases differ in B_n");
  // phi(alpha) iota(b) phi(u) phi(alpha)^-1 = iota(b) phi(artin(b)(alpha) u alpha^-1).
  const TwistContext ctx(artin(a1.base), bounds);
  return twisted_conj(ctx, a1.tail, a2.tail);
}

AugBraid parse_aug_braid(std::string_view text, int n, std::size_t max_length) {
  const auto open = text.find('(');
  const auto semi = text.find(';');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || semi == std::string_view::npos || close == std::string_view::npos ||
      !(open < semi && semi < close)) {
    throw ParseError("augmented braid must look like '(<braid> ; <free word>)'");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected text outside parentheses");
    }
  }
  return AugBraid(parse_braid_word(text.substr(open + 1, semi - open - 1), n, max_length),
                  parse_free_word(text.substr(semi + 1, close - semi - 1), n));
}

std::string format_aug_braid(const AugBraid& a) {
  return "(" + format_braid_word(a.base) + " ; " + format_free_word(a.tail) + ")";
}

}  // namespace braidforce
