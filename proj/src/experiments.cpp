#include "cosetgrowth/experiments.hpp"

#include <algorithm>
#include <unordered_set>

#include "cosetgrowth/ball.hpp"
#include "cosetgrowth/deadline.hpp"
#include "cosetgrowth/error.hpp"
#include "cosetgrowth/stallings.hpp"

namespace cosetgrowth {

Theorem1Report theorem1_check(const Presentation& g, const WordProblemOracle& oracle_g, std::size_t radius,
                              const Theorem1Options& options) {
  if (!(oracle_g.presentation() == g)) {
    throw Error(ErrorCode::invalid_argument, "theorem1_check: oracle belongs to another presentation");
  }
  Theorem1Report report;
  report.rips = build_rips(g, options.rips);
  report.radius = radius;
  report.oracle_g = oracle_g.method();
  const Presentation& h = report.rips.result;
  const auto oracle_h = WordProblemOracle::dehn(h);
  report.oracle_h = oracle_h.method();

  const Ball h_ball = enumerate_ball(h, oracle_h, radius);
  Ball g_ball(oracle_g);
  g_ball.expand_to(radius);
  report.h_ball_size = h_ball.size();

  // N = ker(beta), so N h1 N = N h2 N exactly when beta(h1) = beta(h2).
  std::vector<std::uint64_t> per_length(radius + 1, 0);
  std::unordered_set<std::size_t> images;
  for (std::size_t i = 0; i < h_ball.size(); ++i) {
    if ((i & 1023) == 0) check_deadline();
    const Word& elem = h_ball.element(i);
    const Word image = beta_image(elem, g.rank());
    const auto idx = g_ball.find(image);
    ++report.beta_checked;
    if (!idx || g_ball.element(*idx).size() > elem.size()) {
      ++report.beta_violations;
      continue;
    }
    if (images.insert(*idx).second) ++per_length[elem.size()];
  }

  std::vector<std::uint64_t> buffered;
  std::vector<bool> stable;
  if (options.run_buffered) {
    const auto n = n_generators(report.rips);
    const auto out = double_coset_growth_buffered(h, oracle_h, n, n, radius, options.buffers);
    buffered = out.series.counts;
    stable = out.series.exact;
    report.buffers = out.buffers;
  }

  report.equality_holds = true;
  report.chain_holds = true;
  std::uint64_t running = 0;
  for (std::size_t r = 0; r <= radius; ++r) {
    running += per_length[r];
    Theorem1Row row;
    row.r = r;
    row.gr_exact = running;
    row.f_g = g_ball.count_within(r);
    if (options.run_buffered) {
      row.buffered = buffered[r];
      row.buffered_stable = stable[r];
      if (row.buffered < row.gr_exact) report.chain_holds = false;
    }
    if (row.gr_exact != row.f_g) report.equality_holds = false;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

bool over_rank(const Word& w, std::size_t rank) {
  return std::all_of(w.begin(), w.end(), [rank](Letter l) { return l.generator() < rank; });
}

[[noreturn]] void invalid(const std::string& detail) { throw Error(ErrorCode::config_invalid, detail); }

void for_each_reduced(std::size_t rank, std::size_t length, Letters& prefix,
                      const std::function<void(const Letters&)>& visit) {
  if (prefix.size() == length) {
    visit(prefix);
    return;
  }
  for (std::uint32_t code = 0; code < 2 * rank; ++code) {
    const Letter l = Letter::from_code(code);
    if (!prefix.empty() && prefix.back().cancels(l)) continue;
    prefix.push_back(l);
    for_each_reduced(rank, length, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void validate(const Theorem2Config& cfg) {
  if (cfg.rank < 1) invalid("rank must be >= 1");
  for (const auto* gens : {&cfg.a_generators, &cfg.b_generators}) {
    for (const Word& w : *gens) {
      if (!over_rank(w, cfg.rank)) invalid("subgroup generator uses a letter outside the rank");
    }
  }
  if (cfg.c.empty() || cfg.d.empty()) invalid("c and d must be nontrivial");
  if (!over_rank(cfg.c, cfg.rank) || !over_rank(cfg.d, cfg.rank)) invalid("c or d uses a letter outside the rank");
  if (cfg.x.has_value() != cfg.y.has_value()) invalid("give both separators or neither");
  if (cfg.x && (!over_rank(*cfg.x, cfg.rank) || !over_rank(*cfg.y, cfg.rank))) {
    invalid("separator uses a letter outside the rank");
  }
  if (cfg.n_exp < 1) invalid("N_exp must be >= 1");
  if (cfg.t_min > cfg.t_max) invalid("t-band is empty");
  if (cfg.radius < 2) invalid("radius must be >= 2");

  const CoreGraph a = fold_core(cfg.a_generators, cfg.rank);
  const CoreGraph b = fold_core(cfg.b_generators, cfg.rank);
  if (is_finite_index(a)) invalid("A has finite index");
  if (is_finite_index(b)) invalid("B has finite index");
  const CoreGraph c = fold_core(std::vector<Word>{cfg.c}, cfg.rank);
  const CoreGraph d = fold_core(std::vector<Word>{cfg.d}, cfg.rank);
  if (!is_trivial_subgroup(intersection_pullback(c, a))) invalid("<c> meets A nontrivially");
  if (!is_trivial_subgroup(intersection_pullback(d, b))) invalid("<d> meets B nontrivially");
}

Theorem2Report theorem2_experiment(const Theorem2Config& cfg) {
  validate(cfg);
  Theorem2Report report;
  report.config = cfg;
  const CoreGraph a = fold_core(cfg.a_generators, cfg.rank);
  const CoreGraph b = fold_core(cfg.b_generators, cfg.rank);
  const DoubleCosetSpace space(a, b);
  const DistanceOracle dist = free_distance();

  report.series = double_coset_growth_free(cfg.rank, a, b, cfg.radius);
  for (std::size_t r = 0; r <= cfg.radius; ++r) report.free_counts.push_back(free_group_ball_size(cfg.rank, r));

  // Tail window: the last ceil(R/2) radii.
  const std::size_t window = (cfg.radius + 1) / 2;
  report.window_begin = cfg.radius + 1 - window;
  bool first = true;
  for (std::size_t r = report.window_begin; r <= cfg.radius; ++r) {
    const Rational ratio(static_cast<std::int64_t>(report.series.counts[r]),
                         static_cast<std::int64_t>(report.free_counts[r]));
    if (first || ratio < report.lambda_hat) report.lambda_hat = ratio;
    first = false;
  }

  const Presentation free = Presentation::free_group(cfg.rank);
  try {
    report.separators = cfg.x ? make_separator_pair(*cfg.x, *cfg.y, cfg.c0, cfg.beta_bound, dist)
                              : find_separators(free, dist, cfg.c0, cfg.beta_bound);
  } catch (const Error& e) {
    throw Error(ErrorCode::separator_failure, std::string("separators: ") + e.what());
  }
  report.q = cfg.q ? *cfg.q : calibrated_params(report.separators);

  const Word cn = cfg.c.pow(static_cast<int>(cfg.n_exp));
  const Word dn = cfg.d.pow(static_cast<int>(cfg.n_exp));
  std::unordered_set<Word, WordHash> words, cosets;
  for (std::size_t len = cfg.t_min; len <= cfg.t_max; ++len) {
    Letters prefix;
    for_each_reduced(cfg.rank, len, prefix, [&](const Letters& t) {
      check_deadline();
      Theorem2Sample sample;
      sample.t = Word(t);
      try {
        sample.z = select_connector(cn.letters(), t, report.separators, report.q, dist);
        const Letters head = concat({cn.letters(), sample.z.letters(), t});
        sample.w = select_connector(head, dn.letters(), report.separators, report.q, dist);
      } catch (const Error& e) {
        throw Error(ErrorCode::separator_failure, "t = " + free.format(sample.t) + ": " + e.what());
      }
      const Letters raw = concat({cn.letters(), sample.z.letters(), t, sample.w.letters(), dn.letters()});
      if (is_quasigeodesic(raw, report.q, dist)) ++report.quasigeodesic_words;
      sample.s = free_reduce(raw);
      sample.canonical = space.canonical(sample.s);
      words.insert(sample.s);
      cosets.insert(sample.canonical);
      report.samples.push_back(std::move(sample));
    });
  }
  report.m = report.samples.size();
  report.distinct_words = words.size();
  report.distinct_cosets = cosets.size();
  return report;
}

}  // namespace cosetgrowth
