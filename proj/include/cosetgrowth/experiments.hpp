#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cosetgrowth/geometry.hpp"
#include "cosetgrowth/growth.hpp"
#include "cosetgrowth/oracle.hpp"
#include "cosetgrowth/rips.hpp"

namespace cosetgrowth {

// ---- Rips harness: gr(H, N, N) against f_G ----

struct Theorem1Options {
  RipsOptions rips;
  std::vector<std::size_t> buffers{std::begin(kDefaultBuffers), std::end(kDefaultBuffers)};
  bool run_buffered = true;
};

struct Theorem1Row {
  std::size_t r = 0;
  std::uint64_t gr_exact = 0;   // distinct beta-images of the H-ball
  std::uint64_t f_g = 0;
  std::uint64_t buffered = 0;   // 0 when the buffered run is skipped
  bool buffered_stable = false;
};

struct Theorem1Report {
  RipsData rips;
  std::size_t radius = 0;
  OracleMethod oracle_g = OracleMethod::free;
  OracleMethod oracle_h = OracleMethod::dehn;
  std::vector<std::size_t> buffers;
  std::vector<Theorem1Row> rows;
  std::size_t h_ball_size = 0;
  std::uint64_t beta_checked = 0;
  std::uint64_t beta_violations = 0;
  bool equality_holds = false;
  bool chain_holds = false;  // buffered >= exact at every radius

  bool pass() const { return equality_holds && chain_holds && beta_violations == 0; }
};

Theorem1Report theorem1_check(const Presentation& g, const WordProblemOracle& oracle_g, std::size_t radius,
                              const Theorem1Options& options = {});

// ---- free-group harness for the exponential lower bound ----

struct Theorem2Config {
  std::size_t rank = 2;
  std::vector<Word> a_generators;
  std::vector<Word> b_generators;
  Word c;
  Word d;
  std::size_t n_exp = 2;
  std::optional<Word> x;  // separators; searched for when absent
  std::optional<Word> y;
  std::size_t c0 = 3;
  Rational beta_bound{0};
  std::size_t t_min = 4;
  std::size_t t_max = 6;
  std::size_t radius = 8;
  std::optional<QuasiParams> q;  // calibrated from the separators when absent
};

// Throws Error(config_invalid) naming the first failed precondition.
void validate(const Theorem2Config& cfg);

struct Theorem2Sample {
  Word t;
  Word z;
  Word w;
  Word s;          // reduced
  Word canonical;  // ShortLex-least element of A s B
};

struct Theorem2Report {
  Theorem2Config config;
  GrowthSeries series;
  std::vector<std::uint64_t> free_counts;
  std::size_t window_begin = 0;  // first radius of the tail window
  Rational lambda_hat{0};
  SeparatorPair separators;
  QuasiParams q;
  std::size_t m = 0;
  std::size_t distinct_words = 0;
  std::size_t distinct_cosets = 0;
  std::size_t quasigeodesic_words = 0;  // raw s words passing at q
  std::vector<Theorem2Sample> samples;  // every s_i, in ShortLex order of t

  Rational collision_factor() const {
    return distinct_cosets == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(m),
                                                         static_cast<std::int64_t>(distinct_cosets));
  }
  bool lambda_positive() const { return lambda_hat > 0; }
  bool collisions_bounded() const { return distinct_cosets * 16 >= m; }
  bool pass() const { return lambda_positive() && collisions_bounded() && m > 0; }
};

Theorem2Report theorem2_experiment(const Theorem2Config& cfg);

}  // namespace cosetgrowth
