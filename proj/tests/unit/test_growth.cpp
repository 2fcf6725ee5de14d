#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<Word> random_gens(std::mt19937_64& rng, std::size_t count, std::size_t max_len) {
  std::vector<Word> out;
  while (out.size() < count) {
    Letters ls(1 + rng() % max_len);
    for (auto& l : ls) l = Letter::from_code(static_cast<std::uint32_t>(rng() % 4));
    Word x = free_reduce(ls);
    if (!x.empty()) out.push_back(x);
  }
  return out;
}

// Reduced words in F2 with no a^{+-1} prefix and no b^{+-1} suffix, by length.
std::vector<std::uint64_t> constrained_end_counts(std::size_t radius) {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r <= radius; ++r) {
    std::uint64_t total = 0;
    for (const auto& s : brute::reduced_words(2, r)) {
      if (!s.empty() && (s.front() >> 1) == 0) continue;
      if (!s.empty() && (s.back() >> 1) == 1) continue;
      ++total;
    }
    out.push_back(total);
  }
  return out;
}

GrowthSeries series_of(std::vector<std::uint64_t> counts) {
  GrowthSeries s;
  s.counts = std::move(counts);
  s.exact.assign(s.counts.size(), true);
  return s;
}

}  // namespace

TEST_CASE("growth_function examples") {
  const Presentation z = pres("< x | >");
  const auto fz = growth_function(z, WordProblemOracle::free(z), 5);
  CHECK(fz.counts == std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11});

  const Presentation z2 = pres("< x y | x y X Y >");
  const auto fz2 = growth_function(z2, WordProblemOracle::bfs_ball(z2, 8), 4);
  CHECK(fz2.counts == std::vector<std::uint64_t>{1, 5, 13, 25, 41});
  for (std::size_t r = 0; r <= 4; ++r) CHECK(fz2.counts[r] == 2 * r * r + 2 * r + 1);

  const auto ff2 = growth_function(f2(), WordProblemOracle::free(f2()), 3);
  CHECK(ff2.counts == std::vector<std::uint64_t>{1, 5, 17, 53});
}

TEST_CASE("free_group_ball_size closed form") {
  for (std::size_t r = 0; r <= 10; ++r) CHECK(free_group_ball_size(2, r) == 2 * static_cast<std::uint64_t>(std::pow(3, r)) - 1);
  CHECK(free_group_ball_size(1, 4) == 9);
  CHECK(free_group_ball_size(3, 2) == 1 + 6 + 30);
}

TEST_CASE("free_group_ball_size refuses to wrap around") {
  std::uint64_t p39 = 1;
  for (int i = 0; i < 39; ++i) p39 *= 3;
  CHECK(free_group_ball_size(2, 39) == 2 * p39 - 1);
  CHECK_THROWS_AS(free_group_ball_size(2, 40), Error);
}

TEST_CASE("double_coset_growth_free examples") {
  const CoreGraph triv = fold_core(std::vector<Word>{}, 2);
  const auto same = double_coset_growth_free(2, triv, triv, 5);
  for (std::size_t r = 0; r <= 5; ++r) CHECK(same.counts[r] == free_group_ball_size(2, r));

  const auto ab = double_coset_growth_free(2, fold_core(ws({"a"}), 2), fold_core(ws({"b"}), 2), 3);
  CHECK(ab.counts == std::vector<std::uint64_t>{1, 1, 5, 13});

  const CoreGraph whole = fold_core(ws({"a", "b"}), 2);
  const auto one = double_coset_growth_free(2, whole, whole, 5);
  CHECK(one.counts == std::vector<std::uint64_t>(6, 1));
}

TEST_CASE("gr(F2, <a>, <b>) through r = 6 agrees across three independent computations") {
  const std::vector<std::uint64_t> expected{1, 1, 5, 13, 41, 121, 365};
  CHECK(constrained_end_counts(6) == expected);
  CHECK(brute::double_coset_counts(2, {to_seq(w("a"))}, {to_seq(w("b"))}, 6, 3) == expected);
  CHECK(double_coset_growth_free(2, fold_core(ws({"a"}), 2), fold_core(ws({"b"}), 2), 6).counts == expected);
}

TEST_CASE("double_coset_growth_free agrees with brute union-find on random pairs") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 15; ++i) {
    const auto ga = random_gens(rng, 1 + rng() % 2, 3);
    const auto gb = random_gens(rng, 1 + rng() % 2, 3);
    const auto exact = double_coset_growth_free(2, fold_core(ga, 2), fold_core(gb, 2), 4);
    const auto brute4 = brute::double_coset_counts(2, to_seqs(ga), to_seqs(gb), 4, 4);
    for (std::size_t r = 0; r <= 4; ++r) CHECK(brute4[r] >= exact.counts[r]);
    // The buffer is large enough for generators this short whenever the two
    // largest buffers agree.
    const auto brute5 = brute::double_coset_counts(2, to_seqs(ga), to_seqs(gb), 4, 5);
    if (brute4 == brute5) CHECK(brute5 == exact.counts);
  }
}

TEST_CASE("buffered backend examples") {
  const auto free2 = WordProblemOracle::free(f2());
  const auto trivial = double_coset_growth_buffered(f2(), free2, {}, {}, 4, kDefaultBuffers);
  CHECK(trivial.series.counts == std::vector<std::uint64_t>{1, 5, 17, 53, 161});
  for (bool e : trivial.series.exact) CHECK(e);

  const auto ga = ws({"a"});
  const auto gb = ws({"b"});
  const auto out = double_coset_growth_buffered(f2(), free2, ga, gb, 5, kDefaultBuffers);
  const auto exact = double_coset_growth_free(2, fold_core(ga, 2), fold_core(gb, 2), 5);
  for (std::size_t r = 0; r <= 5; ++r) {
    if (out.series.exact[r]) CHECK(out.series.counts[r] == exact.counts[r]);
  }
  CHECK(out.series.counts == exact.counts);
}

TEST_CASE("buffered counts are upper bounds and nonincreasing in the buffer") {
  std::mt19937_64 rng(67);
  const auto free2 = WordProblemOracle::free(f2());
  for (int i = 0; i < 10; ++i) {
    const auto ga = random_gens(rng, 1 + rng() % 2, 4);
    const auto gb = random_gens(rng, 1 + rng() % 2, 4);
    const auto out = double_coset_growth_buffered(f2(), free2, ga, gb, 4, kDefaultBuffers);
    const auto exact = double_coset_growth_free(2, fold_core(ga, 2), fold_core(gb, 2), 4);
    for (std::size_t k = 0; k < out.per_buffer.size(); ++k) {
      for (std::size_t r = 0; r <= 4; ++r) {
        CHECK(out.per_buffer[k][r] >= exact.counts[r]);
        if (k > 0) CHECK(out.per_buffer[k][r] <= out.per_buffer[k - 1][r]);
      }
    }
  }
}

TEST_CASE("buffered backend on Z2 with A = <a>, B = <b> counts one class") {
  const Presentation z2 = pres("< a b | a b A B >");
  const auto o = WordProblemOracle::bfs_ball(z2, 10);
  const auto out = double_coset_growth_buffered(z2, o, ws({"a"}), ws({"b"}), 3, kDefaultBuffers);
  CHECK(out.series.counts == std::vector<std::uint64_t>{1, 1, 1, 1});
}

TEST_CASE("fit_rate examples") {
  std::vector<std::uint64_t> f;
  for (std::size_t r = 0; r <= 8; ++r) f.push_back(free_group_ball_size(2, r));
  CHECK(fit_rate(series_of(f), 3) == doctest::Approx(3.0).epsilon(0.01));
  CHECK(fit_rate(series_of(std::vector<std::uint64_t>(8, 4)), 3) == doctest::Approx(1.0));
  std::vector<std::uint64_t> z;
  for (std::uint64_t r = 0; r <= 30; ++r) z.push_back(2 * r + 1);
  const double rz = fit_rate(series_of(z), 3);
  CHECK(rz > 1.0);
  CHECK(rz < 1.05);
}

TEST_CASE("fit_rate errors") {
  try {
    fit_rate(series_of({1, 2, 3}), 3);
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  try {
    fit_rate(series_of({1, 2, 0, 3}), 3);
    FAIL("expected degenerate_series");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_series);
  }
}

TEST_CASE("growth of the genus-2 group matches the surface series through radius 5") {
  const Presentation g = genus2();
  const auto s = growth_function(g, WordProblemOracle::dehn(g), 5);
  CHECK(s.counts == brute::surface_ball_sizes(2, 5));
  CHECK(s.counts == std::vector<std::uint64_t>{1, 9, 65, 457, 3193, 22289});
}
