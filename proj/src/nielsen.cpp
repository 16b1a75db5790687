#include "braidforce/nielsen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "braidforce/text.hpp"

namespace braidforce {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("abelian lattice arithmetic overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("abelian lattice arithmetic overflow");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row -= q * pivot_row
void axpy(std::vector<std::int64_t>& row, std::int64_t q, const std::vector<std::int64_t>& pivot_row) {
  if (q == 0) return;
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = checked_sub(row[i], checked_mul(q, pivot_row[i]));
}

// Row echelon form of the lattice spanned by `rows`, pivots positive and
// entries above each pivot reduced into [0, pivot).
void echelon(IntMatrix rows, IntMatrix& basis, std::vector<std::size_t>& pivots) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t k = r; k < rows.size(); ++k) {
        if (rows[k][c] != 0 && (best == rows.size() || std::abs(rows[k][c]) < std::abs(rows[best][c]))) best = k;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t k = r + 1; k < rows.size(); ++k) {
        if (rows[k][c] == 0) continue;
        axpy(rows[k], rows[k][c] / rows[r][c], rows[r]);
        if (rows[k][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = checked_sub(0, x);
    }
    for (std::size_t k = 0; k < r; ++k) axpy(rows[k], floor_div(rows[k][c], rows[r][c]), rows[r]);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  basis = std::move(rows);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

Decision Decision::yes(FreeWord witness, std::string reason) {
  return Decision(Verdict::Yes, std::move(witness), {}, std::move(reason));
}

Decision Decision::no(std::vector<AbelianCertificate> certificates, std::string reason) {
  return Decision(Verdict::No, std::nullopt, std::move(certificates), std::move(reason));
}

Decision Decision::unknown(std::string reason) { return Decision(Verdict::Unknown, std::nullopt, {}, std::move(reason)); }

TwistContext::TwistContext(FreeEndo theta, Bounds bounds)
    : theta_(std::move(theta)), matrix_(endo_matrix(theta_)), bounds_(bounds) {
  if (bounds_.radius < 0 || bounds_.k_max < 0) throw std::invalid_argument("bounds must be non-negative");
  const std::size_t n = matrix_.size();
  IntMatrix generators(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) generators[j][i] = matrix_[i][j] - (i == j ? 1 : 0);
  }
  echelon(std::move(generators), basis_, pivots_);
}

AbelianVector abelian_invariant(const TwistContext& ctx, const FreeWord& w) {
  AbelianVector v = abelianize(w);
  const auto& basis = ctx.lattice_basis();
  const auto& pivots = ctx.pivot_columns();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    axpy(v, floor_div(v[pivots[r]], basis[r][pivots[r]]), basis[r]);
  }
  return v;
}

FreeWord twisted_conjugate(const FreeEndo& theta, const FreeWord& u, const FreeWord& alpha) {
  return concat(theta.apply(alpha), u, invert(alpha));
}

Decision twisted_conj(const TwistContext& ctx, const FreeWord& u, const FreeWord& v) {
  const auto lu = abelian_invariant(ctx, u);
  const auto lv = abelian_invariant(ctx, v);
  if (lu != lv) return Decision::no({AbelianCertificate{u, v, lu, lv}}, "abelian labels differ");

  const int n = ctx.rank();
  const FreeEndo& theta = ctx.theta();
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) {
    alphabet.push_back({i, 1});
    alphabet.push_back({i, -1});
  }
  std::vector<FreeWord> letter_images;
  for (const auto& l : alphabet) letter_images.push_back(theta.apply(FreeWord::generator(n, l.index, l.sign)));

  // Layers of (alpha, theta(alpha)), alpha in shortlex order.
  std::vector<std::pair<FreeWord, FreeWord>> layer{{FreeWord(n), FreeWord(n)}};
  for (int len = 0;; ++len) {
    for (const auto& [alpha, image] : layer) {
      if (concat(image, u, invert(alpha)) == v) {
        if (twisted_conjugate(theta, u, alpha) != v) throw std::logic_error("twisted_conj: witness failed");
        return Decision::yes(alpha);
      }
    }
    if (len == ctx.bounds().radius) break;
    std::vector<std::pair<FreeWord, FreeWord>> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& [alpha, image] : layer) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (!alpha.empty() && alpha.letters().back().cancels(alphabet[a])) continue;
        WordBuilder wa(n);
        wa.append(alpha);
        wa.push(alphabet[a]);
        next.emplace_back(std::move(wa).build(), concat(image, letter_images[a]));
      }
    }
    layer = std::move(next);
  }
  return Decision::unknown("no witness of length <= " + std::to_string(ctx.bounds().radius));
}

FreeWord shorten_in_class(const FreeEndo& theta, const FreeWord& w) {
  const int n = theta.rank();
  FreeWord current = w;
  while (!current.empty()) {
    std::optional<FreeWord> best;
    for (int i = 1; i <= n; ++i) {
      for (int s : {1, -1}) {
        FreeWord candidate = twisted_conjugate(theta, current, FreeWord::generator(n, i, s));
        if (candidate.size() < current.size() && (!best || shortlex_less(candidate, *best))) {
          best = std::move(candidate);
        }
      }
    }
    if (!best) break;
    current = std::move(*best);
  }
  return current;
}

ReidemeisterTrace merge(const TwistContext& ctx, const GroupRingElem& raw) {
  std::vector<FreeWord> words;
  std::vector<Integer> coefficients;
  for (const auto& [w, c] : raw.terms()) {
    words.push_back(w);
    coefficients.push_back(c);
  }
  const std::size_t t = words.size();
  std::vector<AbelianVector> labels;
  for (const auto& w : words) labels.push_back(abelian_invariant(ctx, w));

  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Descent stays inside the class, so equal shortened forms merge without a search.
  std::vector<FreeWord> shortened;
  for (const auto& w : words) shortened.push_back(shorten_in_class(ctx.theta(), w));
  auto unite = [&](std::size_t i, std::size_t j) {
    const std::size_t ri = find(i);
    const std::size_t rj = find(j);
    parent[std::max(ri, rj)] = std::min(ri, rj);
  };
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (shortened[i] == shortened[j]) unite(i, j);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> unknown_pairs;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (labels[i] != labels[j] || find(i) == find(j)) continue;
      const Decision d = twisted_conj(ctx, words[i], words[j]);
      if (d.is_yes()) {
        unite(i, j);
      } else if (d.is_unknown()) {
        unknown_pairs.emplace_back(i, j);
      }
    }
  }

  ReidemeisterTrace trace;
  for (std::size_t root = 0; root < t; ++root) {
    if (find(root) != root) continue;
    TraceSummand s{0, FreeWord(ctx.rank()), {}};
    std::optional<FreeWord> rep;
    for (std::size_t k = 0; k < t; ++k) {
      if (find(k) != root) continue;
      s.coefficient += coefficients[k];
      s.members.push_back(words[k]);
      if (!rep || shortlex_less(shortened[k], *rep)) rep = shortened[k];
    }
    if (s.coefficient == 0) continue;
    s.representative = *rep;
    trace.summands.push_back(std::move(s));
  }
  std::sort(trace.summands.begin(), trace.summands.end(), [](const TraceSummand& a, const TraceSummand& b) {
    if (a.coefficient != b.coefficient) return a.coefficient > b.coefficient;
    return shortlex_less(a.representative, b.representative);
  });
  for (const auto& [i, j] : unknown_pairs) {
    if (find(i) != find(j)) trace.unresolved.emplace_back(words[i], words[j]);
  }
  return trace;
}

FreeEndo iterate_endo(const BraidWord& beta, int m, const Bounds& bounds) {
  if (m < 1) throw std::invalid_argument("iterate m must be >= 1");
  if (beta.size() * static_cast<std::size_t>(m) > bounds.max_word_length) {
    throw std::length_error("beta^m has " + std::to_string(beta.size() * static_cast<std::size_t>(m)) +
                            " letters, above the cap of " + std::to_string(bounds.max_word_length));
  }
  return endo_power(artin(beta), m);
}

ReidemeisterTrace reidemeister_trace(const BraidWord& beta, int m, const Bounds& bounds) {
  const TwistContext ctx(iterate_endo(beta, m, bounds), bounds);
  return merge(ctx, raw_trace(ctx.theta()));
}

std::vector<DegenerateFamily> degenerate_families(const FreeEndo& theta) {
  std::vector<DegenerateFamily> out;
  const int n = theta.rank();
  for (int i = 1; i <= n; ++i) {
    const auto xi = FreeWord::generator(n, i);
    if (auto lambda = conjugator(xi, theta.image(i))) out.push_back({i, std::move(*lambda)});
  }
  return out;
}

std::vector<DegenerateFamily> degenerate_families(const BraidWord& beta, int m) {
  if (m < 1) throw std::invalid_argument("iterate m must be >= 1");
  const FreeEndo theta = endo_power(artin(beta), m);
  const Permutation p = perm(power(beta, m));
  std::vector<DegenerateFamily> out;
  const int n = beta.strands();
  for (int i = 1; i <= n; ++i) {
    if (p(i) != i) continue;
    auto lambda = conjugator(FreeWord::generator(n, i), theta.image(i));
    if (!lambda) throw std::logic_error("fixed strand " + std::to_string(i) + " without a conjugating lambda");
    out.push_back({i, std::move(*lambda)});
  }
  return out;
}

namespace {

// Integers k with abelianize(gamma) - abelianize(lambda) - k e_i in im(M - I):
// nothing, a single value (period 0), or k0 + period Z.
struct PowerSolutions {
  std::int64_t k0;
  std::int64_t period;
};

std::optional<PowerSolutions> abelian_power_solutions(const TwistContext& ctx, const AbelianVector& delta, int puncture) {
  const std::size_t n = static_cast<std::size_t>(ctx.rank());
  IntMatrix rows;
  for (const auto& r : ctx.lattice_basis()) {
    auto ext = r;
    ext.push_back(0);
    rows.push_back(std::move(ext));
  }
  std::vector<std::int64_t> ei(n + 1, 0);
  ei[static_cast<std::size_t>(puncture - 1)] = 1;
  ei[n] = 1;
  rows.push_back(std::move(ei));

  IntMatrix basis;
  std::vector<std::size_t> pivots;
  echelon(std::move(rows), basis, pivots);
  auto v = delta;
  v.push_back(0);
  std::int64_t period = 0;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    axpy(v, floor_div(v[pivots[r]], basis[r][pivots[r]]), basis[r]);
    if (pivots[r] == n) period = basis[r][n];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) return std::nullopt;
  }
  return PowerSolutions{checked_sub(0, v[n]), period};
}

}  // namespace

Decision is_degenerate(const TwistContext& ctx, const FreeWord& gamma, const std::vector<DegenerateFamily>& families) {
  std::vector<AbelianCertificate> certificates;
  bool unknown = false;
  const auto gamma_ab = abelianize(gamma);
  for (const auto& family : families) {
    const auto xi = FreeWord::generator(ctx.rank(), family.puncture);
    auto delta = gamma_ab;
    const auto lambda_ab = abelianize(family.lambda);
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = checked_sub(delta[i], lambda_ab[i]);

    const auto sol = abelian_power_solutions(ctx, delta, family.puncture);
    if (!sol) {
      // No power of x_i closes the abelian gap, so every lambda x_i^k is excluded.
      certificates.push_back({family.lambda, gamma, abelian_invariant(ctx, family.lambda), abelian_invariant(ctx, gamma)});
      continue;
    }
    std::vector<std::int64_t> ks;
    if (sol->period == 0) {
      ks.push_back(sol->k0);
    } else {
      for (std::int64_t k = -ctx.bounds().k_max; k <= ctx.bounds().k_max; ++k) {
        if (floor_div(k - sol->k0, sol->period) * sol->period == k - sol->k0) ks.push_back(k);
      }
      unknown = true;  // candidates beyond k_max remain
    }
    for (const auto k : ks) {
      const FreeWord coordinate = concat(family.lambda, word_power(xi, static_cast<int>(k)));
      Decision d = twisted_conj(ctx, coordinate, gamma);
      if (d.is_yes()) {
        return Decision::yes(*d.witness(), "twisted conjugate to lambda_" + std::to_string(family.puncture) +
                                               " x" + std::to_string(family.puncture) + "^" + std::to_string(k));
      }
      if (d.is_unknown()) unknown = true;
    }
  }
  if (unknown) return Decision::unknown("some lambda x_i^k comparison was undecided");
  return Decision::no(std::move(certificates), families.empty() ? "no fixed puncture" : "abelian obstructions");
}

NielsenAnalysis analyze(const FreeEndo& theta, const Bounds& bounds) {
  TwistContext ctx(theta, bounds);
  ReidemeisterTrace trace = merge(ctx, raw_trace(theta));
  std::vector<DegenerateFamily> families = degenerate_families(theta);
  std::vector<ClassReport> classes;
  for (const auto& s : trace.summands) {
    classes.push_back(
        {s.coefficient, s.representative, abelian_invariant(ctx, s.representative), is_degenerate(ctx, s.representative, families)});
  }
  return {std::move(ctx), std::move(trace), std::move(families), std::move(classes)};
}

std::vector<ClassReport> essential_nondegenerate(const BraidWord& beta, int m, const Bounds& bounds) {
  return analyze(iterate_endo(beta, m, bounds), bounds).classes;
}

std::string format_trace(const ReidemeisterTrace& trace) {
  if (trace.summands.empty()) return "0";
  std::string out;
  for (const auto& s : trace.summands) {
    if (!out.empty()) out += ' ';
    out += format_coefficient_term(s.coefficient, s.representative);
  }
  return out;
}

}  // namespace braidforce
