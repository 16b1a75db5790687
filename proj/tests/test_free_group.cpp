#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidforce/braid.hpp"
#include "braidforce/free_group.hpp"
#include "braidforce/text.hpp"
#include "test_support.hpp"

using namespace braidforce;
using testsupport::w;

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(w("x1 x1^-1", 2).empty());
  CHECK(w("x1 x2 x2^-1 x1", 2) == w("x1 x1", 2));
  CHECK(w("1 -2 2 -1 3", 3) == w("x3", 3));
  CHECK_THROWS_AS(FreeWord::reduce(2, std::vector<Letter>{{3, 1}}), std::out_of_range);
  CHECK_THROWS_AS(FreeWord(0), std::invalid_argument);
  CHECK(FreeWord(1).rank() == 1);
}

TEST_CASE("reduce agrees with the naive rescanning reducer") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FreeWord base = testsupport::random_word(rng, n, 20);
    // Insert cancelling pairs at random positions.
    std::vector<Letter> corrupted = base.letters();
    const int inserts = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < inserts; ++k) {
      const Letter l{1 + static_cast<int>(rng() % static_cast<unsigned>(n)), rng() % 2 ? 1 : -1};
      const auto pos = corrupted.begin() + static_cast<std::ptrdiff_t>(rng() % (corrupted.size() + 1));
      corrupted.insert(corrupted.insert(pos, l) + 1, l.inverse());
    }
    const FreeWord reduced = FreeWord::reduce(n, corrupted);
    REQUIRE(reduced == base);
    REQUIRE(reduced.letters() == testsupport::naive_reduce(corrupted));

    const auto raw = testsupport::random_letters(rng, n, 24);
    const FreeWord once = FreeWord::reduce(n, raw);
    REQUIRE(once.letters() == testsupport::naive_reduce(raw));
    REQUIRE(FreeWord::reduce(n, once.letters()) == once);
  }
}

TEST_CASE("concat and invert") {
  CHECK(concat(w("x1", 3), w("x1^-1", 3)).empty());
  CHECK(invert(w("x1 x2", 3)) == w("x2^-1 x1^-1", 3));
  CHECK(concat(w("x1 x2", 3), w("x2^-1 x3", 3)) == w("x1 x3", 3));
  CHECK_THROWS_AS(concat(w("x1", 2), w("x1", 3)), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto a = testsupport::random_word(rng, n, 12);
    const auto b = testsupport::random_word(rng, n, 12);
    const auto c = testsupport::random_word(rng, n, 12);
    REQUIRE(concat(concat(a, b), c) == concat(a, concat(b, c)));
    REQUIRE(concat(a, invert(a)).empty());
  }
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(w("x2 x1 x2^-1", 2));
  CHECK(r.core == w("x1", 2));
  CHECK(r.conj == w("x2", 2));
  r = cyclic_reduce(w("x1", 2));
  CHECK(r.core == w("x1", 2));
  CHECK(r.conj.empty());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    FreeWord u = testsupport::random_reduced_exact(rng, n, 1 + rng() % 8);
    u = cyclic_reduce(u).core;  // make sure u is cyclically reduced
    const FreeWord c = testsupport::random_word(rng, n, 8);
    const FreeWord word = concat(c, u, invert(c));
    const auto [core, conj] = cyclic_reduce(word);
    REQUIRE(concat(conj, core, invert(conj)) == word);
    REQUIRE(core.size() == u.size());
    // core is a cyclic rotation of u
    bool rotation = false;
    for (std::size_t s = 0; s < u.size() && !rotation; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < u.size(); ++i) ok = ok && core[i] == u[(i + s) % u.size()];
      rotation = ok;
    }
    REQUIRE(rotation);
  }
}

TEST_CASE("conjugator finds verified witnesses") {
  CHECK(conjugator(w("x1", 2), w("x2 x1 x2^-1", 2)) == w("x2", 2));
  CHECK_FALSE(conjugator(w("x1", 2), w("x2", 2)).has_value());
  CHECK(conjugator(FreeWord(2), FreeWord(2)) == FreeWord(2));
  CHECK_FALSE(conjugator(FreeWord(2), w("x1", 2)).has_value());

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const FreeWord u = testsupport::random_word(rng, n, 10);
    const FreeWord c = testsupport::random_word(rng, n, 10);
    const FreeWord target = concat(c, u, invert(c));
    const auto found = conjugator(u, target);
    REQUIRE(found.has_value());
    REQUIRE(concat(*found, u, invert(*found)) == target);
  }
}

TEST_CASE("apply and compose on endomorphisms") {
  const FreeEndo f = artin(testsupport::example_beta());
  CHECK(apply(FreeEndo::identity(5), w("x1 x3^-1", 5)) == w("x1 x3^-1", 5));
  CHECK(apply(f, w("x2", 5)) == w("x1", 5));
  CHECK(apply(f, w("x1", 5)) == w("x1 x2 x5 x2^-1 x1^-1", 5));
  CHECK(compose(f, FreeEndo::identity(5)) == f);
  CHECK(endo_power(f, 1) == f);
  CHECK(endo_power(f, 0) == FreeEndo::identity(5));
  // x3 -> x2 -> x1
  CHECK(apply(endo_power(f, 2), w("x3", 5)) == w("x1", 5));
  CHECK(endo_eq(FreeEndo::identity(3), FreeEndo::identity(3)));
  CHECK_FALSE(endo_eq(f, FreeEndo::identity(5)));
  CHECK_THROWS_AS(apply(f, w("x1", 4)), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<FreeWord> imgs;
    for (int i = 0; i < n; ++i) imgs.push_back(testsupport::random_word(rng, n, 5));
    const FreeEndo e(n, imgs);
    const auto a = testsupport::random_word(rng, n, 8);
    const auto b = testsupport::random_word(rng, n, 8);
    REQUIRE(apply(e, concat(a, b)) == concat(apply(e, a), apply(e, b)));
    // apply respects reduction: letterwise image then reduce
    std::vector<Letter> letters;
    for (const auto& l : a.letters()) {
      const auto img = l.sign > 0 ? e.image(l.index) : invert(e.image(l.index));
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
    }
    REQUIRE(apply(e, a).letters() == testsupport::naive_reduce(letters));
    // diagrammatic composition
    std::vector<FreeWord> imgs2;
    for (int i = 0; i < n; ++i) imgs2.push_back(testsupport::random_word(rng, n, 4));
    const FreeEndo e2(n, imgs2);
    REQUIRE(apply(compose(e, e2), a) == apply(e2, apply(e, a)));
  }
}

TEST_CASE("abelianization and endo_matrix") {
  CHECK(abelianize(w("x1 x2 x5 x2^-1 x1^-1", 5)) == AbelianVector{0, 0, 0, 0, 1});
  CHECK(abelianize(FreeWord(5)) == AbelianVector{0, 0, 0, 0, 0});

  const IntMatrix m = endo_matrix(artin(testsupport::example_beta()));
  // column j holds the image slot of x_j: 1->5, 2->1, 3->2, 4->3, 5->4
  const int target[] = {5, 1, 2, 3, 4};
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 5; ++i) CHECK(m[i][j] == (static_cast<int>(i) + 1 == target[j] ? 1 : 0));
  }

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<FreeWord> imgs;
    for (int i = 0; i < n; ++i) imgs.push_back(testsupport::random_word(rng, n, 6));
    const FreeEndo e(n, imgs);
    const auto a = testsupport::random_word(rng, n, 10);
    const auto b = testsupport::random_word(rng, n, 10);
    auto sum = abelianize(a);
    const auto ab = abelianize(b);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += ab[i];
    REQUIRE(abelianize(concat(a, b)) == sum);
    REQUIRE(abelianize(apply(e, a)) == mat_vec(endo_matrix(e), abelianize(a)));
  }
}

TEST_CASE("text round trip of free words") {
  CHECK(format_free_word(w("x1 x5^-1", 5)) == "x1 x5^-1");
  CHECK(format_free_word(FreeWord(3)) == "e");
  CHECK(w("x2^3", 2).size() == 3);
  CHECK_THROWS_AS(parse_free_word("x6", 5), ParseError);
  CHECK_THROWS_AS(parse_free_word("", 5), ParseError);
  CHECK_THROWS_AS(parse_free_word("y1", 5), ParseError);
  CHECK_THROWS_AS(parse_free_word("0", 5), ParseError);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testsupport::random_word(rng, 4, 12);
    REQUIRE(parse_free_word(format_free_word(a), 4) == a);
  }
}
