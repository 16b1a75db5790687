#include "braidforce/forcing.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "braidforce/text.hpp"

namespace braidforce {

namespace {

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

}  // namespace

ForcingReport forced_set(const BraidWord& beta, int m, const ForcingOptions& options) {
  const NielsenAnalysis analysis = analyze(iterate_endo(beta, m, options.bounds), options.bounds);
  ForcingReport report{beta, m, options, analysis.classes, analysis.trace.unresolved, {}, analysis.trace.unresolved.empty()};
  const BraidWord base = power(beta, m);
  const FreeWord identity(beta.strands());

  for (const auto& cls : analysis.classes) {
    if (cls.degeneracy.is_yes()) continue;
    if (cls.degeneracy.is_unknown()) {
      report.exact = false;
      if (!options.permissive) continue;
    }
    if (options.boundary_fixed) {
      // Fixed points on the boundary all have coordinate 1.
      const Decision d = twisted_conj(analysis.context, cls.representative, identity);
      if (d.is_yes()) continue;
      if (d.is_unknown()) report.exact = false;
    }
    report.forced.push_back({AugBraid(base, cls.representative), cls.degeneracy.verdict()});
  }
  return report;
}

Decision is_forced(const AugBraid& candidate, const BraidWord& beta, int m, const ForcingOptions& options) {
  if (candidate.strands() != beta.strands()) {
    throw std::invalid_argument("candidate has " + std::to_string(candidate.strands()) + " base strands, beta has " +
                                std::to_string(beta.strands()));
  }
  const BraidWord base = power(beta, m);
  if (!braid_eq(candidate.base, base)) return Decision::no({}, "base differs from beta^m");

  ForcingOptions strict = options;
  strict.permissive = false;
  const ForcingReport report = forced_set(beta, m, strict);
  const TwistContext ctx(iterate_endo(beta, m, options.bounds), options.bounds);

  std::vector<AbelianCertificate> certificates;
  bool unknown = false;
  for (const auto& f : report.forced) {
    Decision d = twisted_conj(ctx, f.braid.tail, candidate.tail);
    if (d.is_yes()) {
      if (!report.exact) return Decision::unknown("matches a forced class, but the class table is not exact");
      return Decision::yes(*d.witness(), "u-equivalent to " + format_aug_braid(f.braid));
    }
    if (d.is_unknown()) {
      unknown = true;
    } else {
      certificates.insert(certificates.end(), d.certificates().begin(), d.certificates().end());
    }
  }
  if (!unknown) return Decision::no(std::move(certificates), "abelian certificates against all forced classes");
  if (report.exact) {
    // Classes are pairwise distinct, so landing in a non-forced one settles it.
    for (const auto& cls : report.classes) {
      bool is_forced_class = false;
      for (const auto& f : report.forced) is_forced_class = is_forced_class || f.braid.tail == cls.representative;
      if (is_forced_class) continue;
      if (twisted_conj(ctx, cls.representative, candidate.tail).is_yes()) {
        return Decision::no({}, "lies in the non-forced class [" + format_free_word(cls.representative) + "]");
      }
    }
  }
  return Decision::unknown("search bounds reached before a verdict");
}

Decision is_forced(const BraidWord& candidate_word, const BraidWord& beta, int m, const ForcingOptions& options) {
  if (candidate_word.strands() != beta.strands() + 1) {
    throw std::invalid_argument("candidate word must have n+1 strands");
  }
  return is_forced(from_word(candidate_word), beta, m, options);
}

nlohmann::ordered_json report_to_json(const ForcingReport& report) {
  nlohmann::ordered_json j;
  j["beta"] = format_braid_word(report.beta);
  j["n"] = report.beta.strands();
  j["m"] = report.m;
  j["bounds"] = {{"radius", report.options.bounds.radius},
                 {"k_max", report.options.bounds.k_max},
                 {"max_word_length", report.options.bounds.max_word_length}};
  j["boundary_fixed"] = report.options.boundary_fixed;
  j["permissive"] = report.options.permissive;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"coefficient", integer_json(c.coefficient)},
                       {"representative", format_free_word(c.representative)},
                       {"degeneracy", to_string(c.degeneracy.verdict())},
                       {"abelian_label", c.label}});
  }
  j["classes"] = std::move(classes);
  auto unresolved = nlohmann::ordered_json::array();
  for (const auto& [a, b] : report.unresolved) unresolved.push_back({format_free_word(a), format_free_word(b)});
  j["unresolved"] = std::move(unresolved);
  auto forced = nlohmann::ordered_json::array();
  for (const auto& f : report.forced) {
    forced.push_back({{"pair", format_aug_braid(f.braid)},
                      {"base", format_braid_word(f.braid.base)},
                      {"tail", format_free_word(f.braid.tail)},
                      {"word", format_braid_word(to_word(f.braid))},
                      {"degeneracy", to_string(f.degeneracy)}});
  }
  j["forced"] = std::move(forced);
  j["exact"] = report.exact;
  return j;
}

std::string format_report(const ForcingReport& report) {
  std::ostringstream out;
  out << "beta = " << format_braid_word(report.beta) << "  (n = " << report.beta.strands() << ", m = " << report.m
      << ")\n";
  out << "classes:\n";
  for (const auto& c : report.classes) {
    out << "  " << format_coefficient_term(c.coefficient, c.representative) << "  label "
        << format_abelian(c.label) << "  degenerate: " << to_string(c.degeneracy.verdict()) << '\n';
  }
  for (const auto& [a, b] : report.unresolved) {
    out << "  unresolved: [" << format_free_word(a) << "] vs [" << format_free_word(b) << "]\n";
  }
  out << "forced braids (" << report.forced.size() << "):\n";
  for (const auto& f : report.forced) {
    out << "  " << format_aug_braid(f.braid) << "  =  " << format_braid_word(to_word(f.braid));
    if (f.degeneracy != Verdict::No) out << "  [degeneracy " << to_string(f.degeneracy) << "]";
    out << '\n';
  }
  out << "exact: " << (report.exact ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace braidforce
