#include "cosetgrowth/rips.hpp"

#include <algorithm>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {
namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += '_';
  return name;
}

void append_run(Letters& out, const ExponentRun& run, Letter t1, Letter t2) {
  for (std::int64_t e = run.first; e <= run.last; ++e) {
    out.push_back(t1);
    for (std::int64_t k = 0; k < e; ++k) out.push_back(t2);
  }
}

}  // namespace

RipsData assemble_rips(const Presentation& g, std::size_t run_length) {
  const std::size_t m = g.rank();
  std::vector<std::string> names = g.generator_names();
  names.push_back(fresh_name(names, "t1"));
  names.push_back(fresh_name(names, "t2"));

  const Letter t1 = pos(static_cast<std::uint32_t>(m));
  const Letter t2 = pos(static_cast<std::uint32_t>(m + 1));
  const Letter t[2] = {t1, t2};

  RipsData data;
  data.source = g;
  data.run_length = run_length;

  // Runs are handed out in a fixed global order, separated by one unused
  // exponent, so no two relators share an exponent value.
  std::int64_t next_start = 1;
  auto next_run = [&] {
    ExponentRun run{next_start, next_start + static_cast<std::int64_t>(run_length)};
    next_start = run.last + 2;
    return run;
  };

  std::vector<Word> relators;
  for (std::size_t i = 0; i < g.relators().size(); ++i) {
    RipsRelator info{RipsFamily::relator, i, 0, next_run()};
    Letters w(g.relators()[i].begin(), g.relators()[i].end());
    append_run(w, info.run, t1, t2);
    relators.push_back(free_reduce(w));
    data.relators.push_back(info);
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      RipsRelator info{RipsFamily::conjugate_left, i, j, next_run()};
      Letters w{neg(i), t[j], pos(i)};
      append_run(w, info.run, t1, t2);
      relators.push_back(free_reduce(w));
      data.relators.push_back(info);
    }
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      RipsRelator info{RipsFamily::conjugate_right, i, j, next_run()};
      Letters w{pos(i), t[j], neg(i)};
      append_run(w, info.run, t1, t2);
      relators.push_back(free_reduce(w));
      data.relators.push_back(info);
    }
  }
  data.result = Presentation(std::move(names), std::move(relators));
  return data;
}

RipsData build_rips(const Presentation& g, const RipsOptions& options) {
  if (options.lambda <= 0 || options.lambda > Rational(1, 6)) {
    throw Error(ErrorCode::invalid_argument, "build_rips: lambda must lie in (0, 1/6]");
  }
  if (options.initial_run_length < 1) {
    throw Error(ErrorCode::invalid_argument, "build_rips: initial run length must be >= 1");
  }
  PieceReport last;
  for (std::size_t run = options.initial_run_length; run <= options.max_run_length; run *= 2) {
    RipsData data = assemble_rips(g, run);
    const SymmetrizedSet sym(data.result);
    if (check_metric_condition(sym, options.lambda)) {
      data.lambda = options.lambda;
      data.certificate = max_piece(sym);
      return data;
    }
    last = max_piece(sym);
  }
  std::string detail = "no run length up to " + std::to_string(options.max_run_length) +
                       " certifies C'(" + to_string(options.lambda) + ")";
  if (last.witness) detail += "; last max piece " + std::to_string(last.max_piece_length);
  throw Error(ErrorCode::budget_exhausted, detail);
}

Word beta_image(const Word& w, std::size_t source_rank) {
  Letters kept;
  kept.reserve(w.size());
  for (Letter l : w) {
    if (l.generator() < source_rank) kept.push_back(l);
  }
  return free_reduce(kept);
}

std::vector<Word> n_generators(const RipsData& r) {
  return {Word{pos(static_cast<std::uint32_t>(r.t1()))}, Word{pos(static_cast<std::uint32_t>(r.t2()))}};
}

}  // namespace cosetgrowth
