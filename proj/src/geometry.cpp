#include "cosetgrowth/geometry.hpp"

#include <algorithm>

#include "cosetgrowth/ball.hpp"
#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

DistanceOracle free_distance() {
  return [](const Word& w) { return w.size(); };
}

DistanceOracle oracle_distance(const WordProblemOracle& o, std::size_t r_max) {
  if (o.method() == OracleMethod::free) return free_distance();
  auto memo = std::make_shared<BallDistance>(o);
  return [memo, r_max](const Word& w) { return (*memo)(w, r_max); };
}

QuasiParams::QuasiParams(Rational epsilon_, Rational eta_) : epsilon(epsilon_), eta(eta_) {
  if (epsilon < 1) throw Error(ErrorCode::invalid_argument, "quasigeodesic epsilon must be >= 1");
  if (eta < 0) throw Error(ErrorCode::invalid_argument, "quasigeodesic eta must be >= 0");
}

Rational gromov_product(const Word& u, const Word& v, const DistanceOracle& dist) {
  const auto du = static_cast<std::int64_t>(dist(u));
  const auto dv = static_cast<std::int64_t>(dist(v));
  const auto duv = static_cast<std::int64_t>(dist(invert(u) * v));
  return Rational(du + dv - duv, 2);
}

std::optional<QuasiViolation> find_quasi_violation(std::span<const Letter> w, const QuasiParams& q,
                                                   const DistanceOracle& dist) {
  Letters stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    stack.clear();
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      const Letter l = w[j - 1];
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
      const auto len = static_cast<std::int64_t>(j - i);
      if (Rational(len) <= q.eta) continue;  // holds for any distance
      const std::size_t d = dist(Word(stack));
      if (Rational(len) > q.epsilon * static_cast<std::int64_t>(d) + q.eta) {
        return QuasiViolation{i, j, d};
      }
    }
  }
  return std::nullopt;
}

bool is_quasigeodesic(std::span<const Letter> w, const QuasiParams& q, const DistanceOracle& dist) {
  return !find_quasi_violation(w, q, dist);
}

std::array<Word, 4> SeparatorPair::words() const { return {x, invert(x), y, invert(y)}; }

namespace {

// Product table, or nullopt as soon as one entry exceeds the bound.
std::optional<std::vector<ProductEntry>> product_table(const std::array<Word, 4>& w, const Rational& bound,
                                                       const DistanceOracle& dist) {
  std::vector<ProductEntry> table;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      Rational value = gromov_product(w[i], w[j], dist);
      if (value > bound) return std::nullopt;
      table.push_back({i, j, value});
    }
  }
  return table;
}

void reduced_words_of_length(std::size_t rank, std::size_t length, Letters& prefix, std::vector<Word>& out,
                             std::size_t limit) {
  if (out.size() >= limit) return;
  if (prefix.size() == length) {
    out.push_back(Word(prefix));
    return;
  }
  for (std::uint32_t code = 0; code < 2 * rank; ++code) {
    const Letter l = Letter::from_code(code);
    if (!prefix.empty() && prefix.back().cancels(l)) continue;
    prefix.push_back(l);
    reduced_words_of_length(rank, length, prefix, out, limit);
    prefix.pop_back();
  }
}

}  // namespace

SeparatorPair make_separator_pair(Word x, Word y, std::size_t c0, Rational beta_bound,
                                  const DistanceOracle& dist) {
  if (x.size() < c0 || y.size() < c0 || x.empty() || y.empty()) {
    throw Error(ErrorCode::invalid_argument, "separator words must be nonempty and of length >= C0");
  }
  if (dist(x) != x.size() || dist(y) != y.size()) {
    throw Error(ErrorCode::invalid_argument, "separator words must be geodesic");
  }
  SeparatorPair sep{std::move(x), std::move(y), c0, beta_bound, {}};
  auto table = product_table(sep.words(), beta_bound, dist);
  if (!table) throw Error(ErrorCode::invalid_argument, "a Gromov product among the separators exceeds beta");
  sep.product_table = std::move(*table);
  return sep;
}

SeparatorPair find_separators(const Presentation& p, const DistanceOracle& dist, std::size_t c0,
                              Rational beta_bound, const SeparatorSearch& search) {
  std::vector<Word> candidates;
  bool truncated = false;
  for (std::size_t len = std::max<std::size_t>(c0, 1); len <= c0 + search.slack; ++len) {
    std::vector<Word> layer;
    Letters prefix;
    reduced_words_of_length(p.rank(), len, prefix, layer, search.max_candidates + 1);
    for (Word& w : layer) {
      if (candidates.size() >= search.max_candidates) {
        truncated = true;
        break;
      }
      if (dist(w) == w.size()) candidates.push_back(std::move(w));
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const std::array<Word, 4> w{candidates[i], invert(candidates[i]), candidates[j], invert(candidates[j])};
      if (auto table = product_table(w, beta_bound, dist)) {
        return SeparatorPair{candidates[i], candidates[j], c0, beta_bound, std::move(*table)};
      }
    }
  }
  std::string detail = "no separator pair among " + std::to_string(candidates.size()) +
                       " geodesic words of length " + std::to_string(c0) + ".." +
                       std::to_string(c0 + search.slack);
  if (truncated) detail += " (candidate list truncated)";
  throw Error(ErrorCode::not_found, detail);
}

QuasiParams calibrated_params(const SeparatorPair& sep) {
  const auto longest = static_cast<std::int64_t>(std::max(sep.x.size(), sep.y.size()));
  return QuasiParams(Rational(1), Rational(4 * longest));
}

Word select_connector(std::span<const Letter> u, std::span<const Letter> v, const SeparatorPair& sep,
                      const QuasiParams& q, const DistanceOracle& dist) {
  static constexpr const char* kNames[] = {"x", "x^-1", "y", "y^-1"};
  const auto candidates = sep.words();
  std::string certificates;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Letters whole = concat({u, candidates[k].letters(), v});
    const auto violation = find_quasi_violation(whole, q, dist);
    if (!violation) return candidates[k];
    if (!certificates.empty()) certificates += "; ";
    certificates += std::string(kNames[k]) + ": subword [" + std::to_string(violation->begin) + "," +
                    std::to_string(violation->end) + ") has endpoint distance " +
                    std::to_string(violation->distance);
  }
  throw Error(ErrorCode::none_qualify, "no connector gives a quasigeodesic: " + certificates);
}

std::size_t count_large_products(const Word& u, const SeparatorPair& sep, const Rational& threshold,
                                 const DistanceOracle& dist) {
  std::size_t count = 0;
  for (const Word& z : sep.words()) {
    if (gromov_product(u, z, dist) > threshold) ++count;
  }
  return count;
}

}  // namespace cosetgrowth
