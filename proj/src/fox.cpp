#include "braidforce/fox.hpp"

#include <sstream>
#include <stdexcept>

#include "braidforce/text.hpp"

namespace braidforce {

namespace {

void check_same_rank(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("group ring rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

GroupRingElem GroupRingElem::word(const FreeWord& w, Integer coefficient) {
  GroupRingElem out(w.rank());
  out.add_term(w, coefficient);
  return out;
}

Integer GroupRingElem::coefficient(const FreeWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElem::add_term(const FreeWord& w, const Integer& coefficient) {
  check_same_rank(rank_, w.rank());
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem gr_add(const GroupRingElem& a, const GroupRingElem& b) {
  check_same_rank(a.rank(), b.rank());
  GroupRingElem out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

GroupRingElem gr_negate(const GroupRingElem& a) {
  GroupRingElem out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(w, -c);
  return out;
}

GroupRingElem gr_sub(const GroupRingElem& a, const GroupRingElem& b) { return gr_add(a, gr_negate(b)); }

GroupRingElem gr_left_mul(const FreeWord& w, const GroupRingElem& a) {
  check_same_rank(w.rank(), a.rank());
  GroupRingElem out(a.rank());
  for (const auto& [u, c] : a.terms()) out.add_term(concat(w, u), c);
  return out;
}

GroupRingElem gr_right_mul(const GroupRingElem& a, const FreeWord& w) {
  check_same_rank(w.rank(), a.rank());
  GroupRingElem out(a.rank());
  for (const auto& [u, c] : a.terms()) out.add_term(concat(u, w), c);
  return out;
}

Integer augmentation(const GroupRingElem& a) {
  Integer sum = 0;
  for (const auto& [w, c] : a.terms()) sum += c;
  return sum;
}

GroupRingElem fox(const FreeWord& w, int j) {
  if (j < 1 || j > w.rank()) {
    throw std::out_of_range("fox derivative index " + std::to_string(j) + " outside 1.." + std::to_string(w.rank()));
  }
  // w is reduced, so every prefix is already a reduced word:
  // d/dx_j contributes +[w_<k] for x_j at k and -[w_<=k] for x_j^-1 at k.
  GroupRingElem out(w.rank());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].index != j) continue;
    if (w[k].sign > 0) {
      out.add_term(w.subword(0, k), 1);
    } else {
      out.add_term(w.subword(0, k + 1), -1);
    }
  }
  return out;
}

std::vector<GroupRingElem> jacobian_diagonal(const FreeEndo& e) {
  std::vector<GroupRingElem> diag;
  diag.reserve(e.images().size());
  for (int i = 1; i <= e.rank(); ++i) diag.push_back(fox(e.image(i), i));
  return diag;
}

GroupRingElem raw_trace(const FreeEndo& e) {
  GroupRingElem out = GroupRingElem::one(e.rank());
  Integer diag_aug = 0;
  for (const auto& entry : jacobian_diagonal(e)) {
    diag_aug += augmentation(entry);
    out = gr_sub(out, entry);
  }
  if (augmentation(out) != 1 - diag_aug) throw std::logic_error("raw_trace: augmentation mismatch");
  return out;
}

std::string format_coefficient_term(const Integer& coefficient, const FreeWord& w) {
  std::ostringstream out;
  out << (coefficient < 0 ? '-' : '+');
  const Integer magnitude = abs(coefficient);
  if (magnitude != 1) out << magnitude << '*';
  out << '[' << format_free_word(w) << ']';
  return out.str();
}

std::string format_group_ring(const GroupRingElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.terms()) {
    if (!out.empty()) out += ' ';
    out += format_coefficient_term(c, w);
  }
  return out;
}

}  // namespace braidforce
