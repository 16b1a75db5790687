#include "braidforce/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidforce/aug_braid.hpp"
#include "braidforce/forcing.hpp"
#include "braidforce/nielsen.hpp"
#include "braidforce/text.hpp"

namespace braidforce {

namespace {

struct Args {
  int n = 0;
  int m = 1;
  std::vector<std::string> braids;
  std::vector<std::string> words;
  std::string aug;
  ForcingOptions options;
  bool json = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

const std::string& single(const std::vector<std::string>& values, const char* flag, std::size_t count = 1,
                          std::size_t index = 0) {
  if (values.size() != count) {
    throw UsageError(std::string("expected exactly ") + std::to_string(count) + " " + flag + " argument(s), got " +
                     std::to_string(values.size()));
  }
  return values[index];
}

BraidWord beta_of(const Args& a) { return parse_braid_word(single(a.braids, "--braid"), a.n, a.options.bounds.max_word_length); }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json decision_json(const Decision& d) {
  Json j;
  j["verdict"] = to_string(d.verdict());
  if (d.witness()) j["witness"] = format_free_word(*d.witness());
  auto certs = Json::array();
  for (const auto& c : d.certificates()) {
    certs.push_back({{"lhs", format_free_word(c.lhs)},
                     {"rhs", format_free_word(c.rhs)},
                     {"lhs_label", c.lhs_label},
                     {"rhs_label", c.rhs_label}});
  }
  j["certificates"] = std::move(certs);
  j["reason"] = d.reason();
  return j;
}

void print_decision(std::ostream& out, const Decision& d) {
  out << to_string(d.verdict());
  if (d.witness()) out << "  witness: " << format_free_word(*d.witness());
  if (!d.reason().empty()) out << "  (" << d.reason() << ")";
  out << '\n';
  for (const auto& c : d.certificates()) {
    out << "  [" << format_free_word(c.lhs) << "] label " << format_abelian(c.lhs_label) << " != ["
        << format_free_word(c.rhs) << "] label " << format_abelian(c.rhs_label) << '\n';
  }
}

int verdict_exit(const Decision& d) { return d.is_unknown() ? 1 : 0; }

int run_action(const Args& a, std::ostream& out) {
  const FreeEndo theta = iterate_endo(beta_of(a), a.m, a.options.bounds);
  if (a.json) {
    Json images = Json::array();
    for (const auto& img : theta.images()) images.push_back(format_free_word(img));
    print_json(out, {{"n", a.n}, {"m", a.m}, {"images", images}});
    return 0;
  }
  for (int i = 1; i <= theta.rank(); ++i) out << "x" << i << " -> " << format_free_word(theta.image(i)) << '\n';
  return 0;
}

int run_perm(const Args& a, std::ostream& out) {
  const Permutation p = perm(power(beta_of(a), a.m));
  if (a.json) {
    print_json(out, {{"n", a.n}, {"m", a.m}, {"images", p.images()}});
    return 0;
  }
  for (int i = 1; i <= p.size(); ++i) out << (i > 1 ? " " : "") << i << "->" << p(i);
  out << '\n';
  return 0;
}

int run_trace(const Args& a, std::ostream& out) {
  const BraidWord beta = beta_of(a);
  const TwistContext ctx(iterate_endo(beta, a.m, a.options.bounds), a.options.bounds);
  const GroupRingElem raw = raw_trace(ctx.theta());
  const ReidemeisterTrace trace = merge(ctx, raw);
  if (a.json) {
    Json summands = Json::array();
    for (const auto& s : trace.summands) {
      summands.push_back({{"coefficient", static_cast<std::int64_t>(s.coefficient)},
                          {"representative", format_free_word(s.representative)},
                          {"abelian_label", abelian_invariant(ctx, s.representative)}});
    }
    Json unresolved = Json::array();
    for (const auto& [x, y] : trace.unresolved) unresolved.push_back({format_free_word(x), format_free_word(y)});
    print_json(out, {{"n", a.n},
                     {"m", a.m},
                     {"raw", format_group_ring(raw)},
                     {"trace", format_trace(trace)},
                     {"summands", summands},
                     {"unresolved", unresolved}});
  } else {
    out << format_trace(trace) << '\n';
    for (const auto& [x, y] : trace.unresolved) {
      out << "unresolved: [" << format_free_word(x) << "] vs [" << format_free_word(y) << "]\n";
    }
  }
  return trace.unresolved.empty() ? 0 : 1;
}

int run_forced(const Args& a, std::ostream& out) {
  const ForcingReport report = forced_set(beta_of(a), a.m, a.options);
  if (a.json) {
    print_json(out, report_to_json(report));
  } else {
    out << format_report(report);
  }
  return report.exact ? 0 : 1;
}

int run_is_forced(const Args& a, std::ostream& out) {
  const BraidWord beta = beta_of(a);
  if (a.aug.empty()) throw UsageError("is-forced needs --aug");
  Decision d = Decision::unknown("");
  if (a.aug.find('(') != std::string::npos) {
    d = is_forced(parse_aug_braid(a.aug, a.n, a.options.bounds.max_word_length), beta, a.m, a.options);
  } else {
    d = is_forced(parse_braid_word(a.aug, a.n + 1, a.options.bounds.max_word_length), beta, a.m, a.options);
  }
  if (a.json) {
    print_json(out, decision_json(d));
  } else {
    print_decision(out, d);
  }
  return verdict_exit(d);
}

int run_degenerate(const Args& a, std::ostream& out) {
  const BraidWord beta = beta_of(a);
  const auto families = degenerate_families(beta, a.m);
  std::optional<Decision> d;
  if (!a.words.empty()) {
    const TwistContext ctx(iterate_endo(beta, a.m, a.options.bounds), a.options.bounds);
    d = is_degenerate(ctx, parse_free_word(single(a.words, "--word"), a.n), families);
  }
  if (a.json) {
    Json fam = Json::array();
    for (const auto& f : families) fam.push_back({{"puncture", f.puncture}, {"lambda", format_free_word(f.lambda)}});
    Json j{{"n", a.n}, {"m", a.m}, {"families", fam}};
    if (d) j["decision"] = decision_json(*d);
    print_json(out, j);
  } else {
    if (families.empty()) out << "no fixed punctures\n";
    for (const auto& f : families) out << "puncture " << f.puncture << ": lambda = " << format_free_word(f.lambda) << '\n';
    if (d) print_decision(out, *d);
  }
  return d ? verdict_exit(*d) : 0;
}

int run_eq(const Args& a, std::ostream& out) {
  const auto& b1 = single(a.braids, "--braid", 2, 0);
  const auto& b2 = single(a.braids, "--braid", 2, 1);
  const bool equal = braid_eq(parse_braid_word(b1, a.n, a.options.bounds.max_word_length),
                              parse_braid_word(b2, a.n, a.options.bounds.max_word_length));
  if (a.json) {
    print_json(out, {{"n", a.n}, {"equal", equal}});
  } else {
    out << (equal ? "equal" : "not equal") << '\n';
  }
  return 0;
}

int run_twisted_conj(const Args& a, std::ostream& out) {
  const TwistContext ctx(iterate_endo(beta_of(a), a.m, a.options.bounds), a.options.bounds);
  const FreeWord u = parse_free_word(single(a.words, "--word", 2, 0), a.n);
  const FreeWord v = parse_free_word(single(a.words, "--word", 2, 1), a.n);
  const Decision d = twisted_conj(ctx, u, v);
  if (a.json) {
    print_json(out, decision_json(d));
  } else {
    print_decision(out, d);
  }
  return verdict_exit(d);
}

int run_decompose(const Args& a, std::ostream& out) {
  AugBraid aug = AugBraid::identity(a.n);
  if (!a.aug.empty()) {
    aug = parse_aug_braid(a.aug, a.n, a.options.bounds.max_word_length);
  } else {
    aug = from_word(parse_braid_word(single(a.braids, "--braid"), a.n + 1, a.options.bounds.max_word_length));
  }
  if (a.json) {
    print_json(out, {{"n", a.n},
                     {"pair", format_aug_braid(aug)},
                     {"base", format_braid_word(aug.base)},
                     {"tail", format_free_word(aug.tail)},
                     {"word", format_braid_word(to_word(aug))}});
  } else {
    out << format_aug_braid(aug) << "  =  " << format_braid_word(to_word(aug)) << '\n';
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braids forced by a braid through Nielsen fixed point classes", "braidforce"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", args.n, "number of strands of beta")->required()->check(CLI::PositiveNumber);
    sub->add_option("-m", args.m, "iterate")->check(CLI::PositiveNumber);
    sub->add_option("--braid", args.braids, "braid word, e.g. \"1 2 -3 -4\"");
    sub->add_option("--word", args.words, "free word, e.g. \"x1 x5^-1\"");
    sub->add_option("--aug", args.aug, "augmented braid \"(<braid> ; <free word>)\" or a word on n+1 strands");
    sub->add_option("--radius", args.options.bounds.radius, "twisted conjugacy search radius")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--k-max", args.options.bounds.k_max, "power bound for degeneracy tests")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-length", args.options.bounds.max_word_length, "cap on braid word length");
    sub->add_flag("--boundary-fixed", args.options.boundary_fixed, "homeomorphisms fixed on the boundary");
    sub->add_flag("--permissive", args.options.permissive, "include classes of undecided degeneracy");
    sub->add_flag("--json", args.json, "structured output");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Args&, std::ostream&);
  };
  const Command commands[] = {
      {"action", "print the images of f_pi^m", run_action},
      {"perm", "print the permutation of beta^m", run_perm},
      {"trace", "Reidemeister trace of f_pi^m", run_trace},
      {"forced", "braids (m,U)-forced by beta", run_forced},
      {"is-forced", "decide whether a candidate is forced", run_is_forced},
      {"degenerate", "degenerate families, optionally test --word", run_degenerate},
      {"eq", "compare two braid words", run_eq},
      {"twisted-conj", "twisted conjugacy of two free words under f_pi^m", run_twisted_conj},
      {"decompose", "split a word on n+1 strands into (base ; tail), or realize --aug", run_decompose},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    for (const auto& [sub, cmd] : subs) {
      if (sub->parsed()) return cmd->run(args, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace braidforce
