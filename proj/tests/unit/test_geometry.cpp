#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  Letters ls(rng() % (max_len + 1));
  for (auto& l : ls) l = Letter::from_code(static_cast<std::uint32_t>(rng() % 4));
  return free_reduce(ls);
}

Letters raw(const Word& a, const Word& b, const Word& c) { return concat({a.letters(), b.letters(), c.letters()}); }

}  // namespace

TEST_CASE("gromov_product examples") {
  const auto d = free_distance();
  CHECK(gromov_product(w("aaa"), w("bbb"), d) == 0);
  CHECK(gromov_product(w("ab"), w("ac"), d) == 1);
  CHECK(gromov_product(w("abab"), w("aba"), d) == 3);
}

TEST_CASE("gromov product is symmetric, bounded, and equals the common prefix in F2") {
  const auto d = free_distance();
  std::mt19937_64 rng(71);
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(rng, 10);
    const Word v = random_word(rng, 10);
    const Rational p = gromov_product(u, v, d);
    CHECK(p == gromov_product(v, u, d));
    CHECK(p >= 0);
    CHECK(p <= Rational(static_cast<std::int64_t>(std::min(u.size(), v.size()))));
    CHECK(p == Rational(static_cast<std::int64_t>(brute::common_prefix(to_seq(u), to_seq(v)))));
  }
}

TEST_CASE("gromov product in Z2 through the oracle distance") {
  const Presentation z2 = pres("< a b | a b A B >");
  const auto d = oracle_distance(WordProblemOracle::bfs_ball(z2, 12), 10);
  // d(1,ab) = 2, d(1,ba) = 2, d(ab,ba) = 0.
  CHECK(gromov_product(w("ab"), w("ba"), d) == 2);
  CHECK(gromov_product(w("a"), w("A"), d) == 0);
  CHECK(gromov_product(w("aab"), w("ab"), d) == 2);
}

TEST_CASE("is_quasigeodesic examples") {
  const auto d = free_distance();
  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    const Word x = random_word(rng, 12);
    CHECK(is_quasigeodesic(x.letters(), QuasiParams{}, d));
  }
  const Letters aA{pos(0), neg(0)};
  CHECK_FALSE(is_quasigeodesic(aA, QuasiParams{}, d));
  CHECK(is_quasigeodesic(aA, QuasiParams(Rational(1), Rational(2)), d));
}

TEST_CASE("find_quasi_violation reports the first failing subword") {
  const auto d = free_distance();
  const Letters x{pos(1), pos(0), neg(0), pos(1)};
  const auto v = find_quasi_violation(x, QuasiParams{}, d);
  REQUIRE(v.has_value());
  CHECK(v->begin == 0);
  CHECK(v->end == 3);
  CHECK(v->distance == 1);
}

TEST_CASE("quasigeodesic check agrees with a direct subword scan") {
  const auto d = free_distance();
  std::mt19937_64 rng(79);
  const QuasiParams q(Rational(3, 2), Rational(2));
  for (int i = 0; i < 300; ++i) {
    Letters ls(rng() % 14);
    for (auto& l : ls) l = Letter::from_code(static_cast<std::uint32_t>(rng() % 4));
    bool ok = true;
    for (std::size_t a = 0; a < ls.size(); ++a) {
      for (std::size_t b = a + 1; b <= ls.size(); ++b) {
        brute::Seq s;
        for (std::size_t k = a; k < b; ++k) s.push_back(ls[k].code());
        const auto dist = static_cast<std::int64_t>(brute::reduce(s).size());
        if (Rational(static_cast<std::int64_t>(b - a)) > q.epsilon * dist + q.eta) ok = false;
      }
    }
    CHECK(is_quasigeodesic(ls, q, d) == ok);
  }
}

TEST_CASE("QuasiParams validation") {
  CHECK_THROWS_AS(QuasiParams(Rational(1, 2), Rational(0)), Error);
  CHECK_THROWS_AS(QuasiParams(Rational(1), Rational(-1)), Error);
  CHECK_NOTHROW(QuasiParams(Rational(2), Rational(5)));
}

TEST_CASE("find_separators follows ShortLex order of pairs") {
  const auto d = free_distance();
  const SeparatorPair s3 = find_separators(f2(), d, 3, Rational(0));
  CHECK(s3.x == w("aaa"));
  CHECK(s3.y == w("bab"));
  CHECK(s3.product_table.size() == 12);
  for (const auto& e : s3.product_table) CHECK(e.value == 0);

  const SeparatorPair s1 = find_separators(f2(), d, 1, Rational(0));
  CHECK(s1.x == w("a"));
  CHECK(s1.y == w("b"));
}

TEST_CASE("a^3, b^3 also satisfies every separator invariant") {
  const SeparatorPair s = make_separator_pair(w("aaa"), w("bbb"), 3, Rational(0), free_distance());
  CHECK(s.product_table.size() == 12);
  for (const auto& e : s.product_table) CHECK(e.value == 0);
  CHECK(s.words()[1] == w("AAA"));
  CHECK(s.words()[3] == w("BBB"));
}

TEST_CASE("make_separator_pair rejects pairs that break the invariants") {
  const auto d = free_distance();
  CHECK_THROWS_AS(make_separator_pair(w("aaa"), w("aab"), 3, Rational(0), d), Error);
  CHECK_THROWS_AS(make_separator_pair(w("aa"), w("bb"), 3, Rational(0), d), Error);
}

TEST_CASE("find_separators fails in an elementary group") {
  try {
    find_separators(pres("< a | >"), free_distance(), 1, Rational(0));
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_found);
  }
}

TEST_CASE("calibrated parameters") {
  const SeparatorPair s = make_separator_pair(w("aaa"), w("bbb"), 3, Rational(0), free_distance());
  const QuasiParams q = calibrated_params(s);
  CHECK(q.epsilon == 1);
  CHECK(q.eta == 12);
}

TEST_CASE("select_connector examples") {
  const auto d = free_distance();
  const SeparatorPair s = make_separator_pair(w("aaa"), w("bbb"), 3, Rational(0), d);
  const QuasiParams q;
  const Word u = w("ba");
  const Word v = w("Ab");
  CHECK(select_connector(u.letters(), v.letters(), s, q, d) == w("bbb"));
  CHECK(select_connector({}, {}, s, q, d) == w("aaa"));
  const Word a5 = w("aaaaa");
  CHECK(select_connector(a5.letters(), a5.letters(), s, q, d) == w("aaa"));
}

TEST_CASE("select_connector reports every candidate on failure") {
  const auto d = free_distance();
  const SeparatorPair s = make_separator_pair(w("a"), w("b"), 1, Rational(0), d);
  // Every candidate z makes a A z a A non-geodesic at q = (1, 0).
  const Letters u{pos(0), neg(0)};
  try {
    select_connector(u, {}, s, QuasiParams{}, d);
    FAIL("expected none_qualify");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::none_qualify);
    const std::string what = e.what();
    CHECK(what.find("x^-1") != std::string::npos);
    CHECK(what.find("y^-1") != std::string::npos);
  }
}

TEST_CASE("connector succeeds on random pairs and exclusivity holds") {
  const auto d = free_distance();
  const SeparatorPair s = find_separators(f2(), d, 3, Rational(0));
  const QuasiParams q = calibrated_params(s);
  std::mt19937_64 rng(83);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 12);
    const Word v = random_word(rng, 12);
    const Word z = select_connector(u.letters(), v.letters(), s, q, d);
    CHECK(is_quasigeodesic(raw(u, z, v), q, d));
    CHECK(count_large_products(u, s, s.beta_bound, d) <= 1);
  }
}

TEST_CASE("oracle_distance matches geodesic_length") {
  const Presentation g = genus2();
  const auto o = WordProblemOracle::dehn(g);
  const auto d = oracle_distance(o, 5);
  for (const char* t : {"abAB", "abABc", "cdCDb", "aa", "dcD"}) CHECK(d(w(t)) == geodesic_length(w(t), o, 5));
  CHECK(d(w("abABc")) == 3);
}
