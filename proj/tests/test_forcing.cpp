#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidforce/forcing.hpp"
#include "test_support.hpp"

using namespace braidforce;
using testsupport::b;
using testsupport::w;

namespace {

bool has_pair(const ForcingReport& r, const BraidWord& base, const FreeWord& tail) {
  for (const auto& f : r.forced) {
    if (braid_eq(f.braid.base, base) && f.braid.tail == tail) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("forced set of the worked example") {
  const auto beta = testsupport::example_beta();
  const auto r = forced_set(beta, 1);
  CHECK(r.exact);
  CHECK(r.unresolved.empty());
  REQUIRE(r.classes.size() == 3);
  REQUIRE(r.forced.size() == 3);
  CHECK(has_pair(r, beta, w("x1", 5)));
  CHECK(has_pair(r, beta, w("x5^-1", 5)));
  CHECK(has_pair(r, beta, FreeWord(5)));
  for (const auto& f : r.forced) CHECK(f.degeneracy == Verdict::No);

  // the same braids as words on six strands
  std::vector<BraidWord> words;
  for (const auto& f : r.forced) words.push_back(to_word(f.braid));
  const auto iota = section_word(beta);
  auto found = [&](const BraidWord& x) {
    for (const auto& y : words) {
      if (braid_eq(x, y)) return true;
    }
    return false;
  };
  CHECK(found(iota * pure_gen(1, 6, 6)));
  CHECK(found(iota * braid_invert(pure_gen(5, 6, 6))));
  CHECK(found(iota));

  ForcingOptions fixed;
  fixed.boundary_fixed = true;
  const auto rf = forced_set(beta, 1, fixed);
  CHECK(rf.forced.size() == 2);
  CHECK_FALSE(has_pair(rf, beta, FreeWord(5)));
  CHECK(has_pair(rf, beta, w("x1", 5)));
}

TEST_CASE("trivial braid forces nothing") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = forced_set(BraidWord(n), 1);
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0].representative.empty());
    CHECK(r.classes[0].coefficient == 1 - n);
    CHECK(r.classes[0].degeneracy.is_yes());
    CHECK(r.forced.empty());
    CHECK(r.exact);
  }
}

TEST_CASE("single crossing on two strands") {
  const auto r = forced_set(b("1", 2), 1);
  REQUIRE(r.forced.size() == 1);
  CHECK(r.forced[0].braid.tail == w("x1", 2));
  CHECK(braid_eq(to_word(r.forced[0].braid), b("1 2 1 1 -2", 3)));
}

TEST_CASE("is_forced") {
  const auto beta = testsupport::example_beta();
  CHECK(is_forced(AugBraid(beta, w("x1", 5)), beta, 1).is_yes());
  CHECK(is_forced(AugBraid(beta, FreeWord(5)), beta, 1).is_yes());
  // twisted conjugate tail of x5^-1 under artin(beta)
  const auto tail = twisted_conjugate(artin(beta), w("x5^-1", 5), w("x3 x2^-1", 5));
  CHECK(is_forced(AugBraid(beta, tail), beta, 1).is_yes());
  // as a word on six strands
  CHECK(is_forced(section_word(beta) * pure_gen(1, 6, 6), beta, 1).is_yes());
  // wrong base
  CHECK(is_forced(AugBraid(beta * beta, w("x1", 5)), beta, 1).is_no());
  // x3 ~ x2 ~ x1 via alpha = x3 then x2
  CHECK(is_forced(AugBraid(beta, w("x3", 5)), beta, 1).is_yes());
  // exponent sum 2 matches no forced class
  const auto off = is_forced(AugBraid(beta, w("x1 x1", 5)), beta, 1);
  CHECK(off.is_no());
  CHECK_FALSE(off.certificates().empty());

  ForcingOptions fixed;
  fixed.boundary_fixed = true;
  CHECK(is_forced(AugBraid(beta, FreeWord(5)), beta, 1, fixed).is_no());
}

TEST_CASE("forced pairs have the requested base and distinct classes") {
  std::mt19937_64 rng(103);
  Bounds bounds;
  bounds.radius = 3;
  ForcingOptions options;
  options.bounds = bounds;
  options.permissive = true;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto beta = testsupport::random_braid(rng, n, rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 2);
    const auto r = forced_set(beta, m, options);
    const auto base = power(beta, m);
    const TwistContext ctx(artin(base), bounds);
    for (std::size_t i = 0; i < r.forced.size(); ++i) {
      REQUIRE(braid_eq(r.forced[i].braid.base, base));
      REQUIRE(fixes_last_strand(to_word(r.forced[i].braid)));
      REQUIRE(r.forced[i].degeneracy != Verdict::Yes);
      for (std::size_t j = i + 1; j < r.forced.size(); ++j) {
        REQUIRE_FALSE(twisted_conj(ctx, r.forced[i].braid.tail, r.forced[j].braid.tail).is_yes());
      }
    }
    // strict mode only ever drops classes
    ForcingOptions strict = options;
    strict.permissive = false;
    const auto rs = forced_set(beta, m, strict);
    REQUIRE(rs.forced.size() <= r.forced.size());
    for (const auto& f : rs.forced) REQUIRE(f.degeneracy == Verdict::No);
    if (r.exact) REQUIRE(rs.forced.size() == r.forced.size());
  }
}

TEST_CASE("json report is deterministic") {
  const auto beta = testsupport::example_beta();
  const auto j1 = report_to_json(forced_set(beta, 1)).dump(2);
  const auto j2 = report_to_json(forced_set(beta, 1)).dump(2);
  CHECK(j1 == j2);
  const auto j = report_to_json(forced_set(beta, 1));
  CHECK(j["n"] == 5);
  CHECK(j["exact"] == true);
  CHECK(j["forced"].size() == 3);
  CHECK(j["classes"][0]["representative"] == "x1");
  CHECK_FALSE(format_report(forced_set(beta, 1)).empty());
}
