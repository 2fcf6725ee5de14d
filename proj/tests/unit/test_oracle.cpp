#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("is_trivial examples") {
  const auto free2 = WordProblemOracle::free(f2());
  CHECK_FALSE(is_trivial(w("abAB"), free2));
  CHECK(is_trivial(Word{}, free2));
  const Presentation z7 = pres("< a | a a a a a a a >");
  const auto bfs = WordProblemOracle::bfs_ball(z7, 6);
  CHECK(is_trivial(w("aaaaaaa"), bfs));
  CHECK_FALSE(is_trivial(w("aaa"), bfs));
}

TEST_CASE("geodesic_length examples") {
  CHECK(geodesic_length(w("aa"), WordProblemOracle::free(f2()), 5) == 2);
  CHECK(geodesic_length(w("abABcdCD"), WordProblemOracle::dehn(genus2()), 5) == 0);
  const Presentation z7 = pres("< a | a a a a a a a >");
  CHECK(geodesic_length(w("aaaa"), WordProblemOracle::bfs_ball(z7, 6), 5) == 3);
}

TEST_CASE("geodesic_length raises radius_exceeded past r_max") {
  try {
    geodesic_length(w("aaaa"), WordProblemOracle::free(f2()), 3);
    FAIL("expected radius_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::radius_exceeded);
  }
}

TEST_CASE("automatic oracle selection") {
  CHECK(WordProblemOracle::automatic(f2(), 4).method() == OracleMethod::free);
  CHECK(WordProblemOracle::automatic(genus2(), 4).method() == OracleMethod::dehn);
  CHECK(WordProblemOracle::automatic(pres("< a b | a b A B >"), 4).method() == OracleMethod::bfs_ball);
}

TEST_CASE("dehn oracle throws not_certified on Z2") {
  try {
    WordProblemOracle::dehn(pres("< a b | a b A B >"));
    FAIL("expected not_certified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_certified);
  }
}

TEST_CASE("bfs oracle decides commutation in Z2") {
  const auto o = WordProblemOracle::bfs_ball(pres("< a b | a b A B >"), 8);
  CHECK(o.equal(w("ab"), w("ba")));
  CHECK(o.equal(w("aabab"), w("bbaaa")));
  CHECK_FALSE(o.equal(w("ab"), w("aB")));
  CHECK(o.is_trivial(w("aBAb")));
}

TEST_CASE("bfs oracle refuses words beyond its trusted radius") {
  const auto o = WordProblemOracle::bfs_ball(pres("< a b | a b A B >"), 3);
  try {
    o.is_trivial(w("aaaaaaaaaaaaaaaaaaaa"));
    FAIL("expected radius_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::radius_exceeded);
  }
}

TEST_CASE("Dehn and BFS oracles agree on genus-2 words up to length 4") {
  const Presentation g = genus2();
  const auto dehn = WordProblemOracle::dehn(g);
  // Margin of half a relator keeps the region at depth 6.
  const auto bfs = WordProblemOracle::bfs_ball(g, 2, 4);
  std::size_t trivial = 0;
  for (const auto& s : brute::reduced_words(4, 4)) {
    const Word x = from_seq(s);
    const bool d = dehn.is_trivial(x);
    CHECK(d == bfs.is_trivial(x));
    trivial += d;
  }
  CHECK(trivial == 1);
}

TEST_CASE("keys of equal elements are equal") {
  const auto o = WordProblemOracle::bfs_ball(pres("< a b | a b A B >"), 6);
  CHECK(o.key(w("ab")) == o.key(w("ba")));
  CHECK(o.keys_are_exact());
  const auto d = WordProblemOracle::dehn(genus2());
  CHECK(d.key(w("abABc")) == d.key(w("dcD")));
}

TEST_CASE("CayleyRegion of Z/7") {
  const CayleyRegion region(pres("< a | a a a a a a a >"), 4, 7);
  CHECK(region.vertex_count() == 7);
  const auto v = region.trace(w("aaaa").letters());
  REQUIRE(v.has_value());
  CHECK(region.distance(*v) == 3);
  CHECK(region.canonical_word(*v) == w("AAA"));
}

TEST_CASE("enumerate_ball examples") {
  const Presentation trivial = pres("< a | a >");
  CHECK(enumerate_ball(trivial, WordProblemOracle::automatic(trivial, 6), 3).size() == 1);
  CHECK(enumerate_ball(f2(), WordProblemOracle::free(f2()), 2).size() == 17);
  const Presentation z7 = pres("< a | a a a a a a a >");
  CHECK(enumerate_ball(z7, WordProblemOracle::bfs_ball(z7, 6), 3).size() == 7);
}

TEST_CASE("ball stores ShortLex-least representatives in ShortLex order") {
  const Presentation z2 = pres("< a b | a b A B >");
  const Ball ball = enumerate_ball(z2, WordProblemOracle::bfs_ball(z2, 8), 3);
  CHECK(ball.size() == 25);
  for (std::size_t i = 1; i < ball.size(); ++i) CHECK(shortlex_less(ball.element(i - 1), ball.element(i)));
  const auto idx = ball.find(w("ba"));
  REQUIRE(idx.has_value());
  CHECK(ball.element(*idx) == w("ab"));
  CHECK_FALSE(ball.find(w("aaaa")).has_value());
  CHECK(ball.layer(1).size() == 4);
  CHECK(ball.count_within(2) == 13);
}

TEST_CASE("genus-2 ball sizes match the surface growth series") {
  const Presentation g = genus2();
  const Ball ball = enumerate_ball(g, WordProblemOracle::dehn(g), 4);
  const auto expected = brute::surface_ball_sizes(2, 4);
  CHECK(expected == std::vector<std::uint64_t>{1, 9, 65, 457, 3193});
  for (std::size_t r = 0; r <= 4; ++r) CHECK(ball.count_within(r) == expected[r]);
}

TEST_CASE("BallDistance grows on demand") {
  const Presentation z2 = pres("< a b | a b A B >");
  BallDistance dist(WordProblemOracle::bfs_ball(z2, 10));
  CHECK(dist(w("abAB"), 6) == 0);
  CHECK(dist(w("abab"), 6) == 4);
  CHECK(dist(w("aBAb"), 6) == 0);
}
