#include "cosetgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cosetgrowth/deadline.hpp"
#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

GrowthSeries growth_function(const Ball& ball, std::size_t radius) {
  if (ball.radius() < radius) throw Error(ErrorCode::invalid_argument, "ball smaller than requested radius");
  GrowthSeries s;
  for (std::size_t r = 0; r <= radius; ++r) {
    s.counts.push_back(ball.count_within(r));
    s.exact.push_back(true);
  }
  return s;
}

GrowthSeries growth_function(const Presentation& p, const WordProblemOracle& o, std::size_t radius) {
  GrowthSeries s = growth_function(enumerate_ball(p, o, radius), radius);
  s.meta = serialize(p);
  return s;
}

std::uint64_t free_group_ball_size(std::size_t rank, std::size_t radius) {
  if (rank == 0) return 1;
  if (rank == 1) return 2 * radius + 1;
  std::uint64_t total = 1, sphere = 2 * rank;
  for (std::size_t r = 1; r <= radius; ++r) {
    if (__builtin_add_overflow(total, sphere, &total) ||
        (r < radius && __builtin_mul_overflow(sphere, 2 * rank - 1, &sphere))) {
      throw Error(ErrorCode::invalid_argument, "free_group_ball_size: count exceeds 64 bits");
    }
  }
  return total;
}

GrowthSeries double_coset_growth_free(std::size_t rank, const CoreGraph& a, const CoreGraph& b,
                                      std::size_t radius) {
  if (a.rank() != rank || b.rank() != rank) {
    throw Error(ErrorCode::invalid_argument, "subgroup rank differs from the ambient rank");
  }
  const DoubleCosetSpace space(a, b);
  // A class meets the radius-r ball iff its ShortLex-least element has length
  // <= r, and that element is its own canonical form.
  GrowthSeries s;
  s.counts.assign(radius + 1, 0);
  s.exact.assign(radius + 1, true);
  Ball ball(WordProblemOracle::free(Presentation::free_group(rank)));
  ball.expand_to(radius);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if ((i & 1023) == 0) check_deadline();
    const Word& h = ball.element(i);
    if (space.canonical(h) == h) ++s.counts[h.size()];
  }
  std::partial_sum(s.counts.begin(), s.counts.end(), s.counts.begin());
  return s;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BufferedGrowth double_coset_growth_buffered(const Presentation& p, const WordProblemOracle& o,
                                            std::span<const Word> a_generators,
                                            std::span<const Word> b_generators, std::size_t radius,
                                            std::span<const std::size_t> buffers) {
  if (buffers.empty()) throw Error(ErrorCode::invalid_argument, "at least one buffer is required");
  BufferedGrowth out;
  out.buffers.assign(buffers.begin(), buffers.end());
  std::sort(out.buffers.begin(), out.buffers.end());
  out.buffers.erase(std::unique(out.buffers.begin(), out.buffers.end()), out.buffers.end());

  const Ball ball = enumerate_ball(p, o, radius + out.buffers.back());

  std::vector<Word> left, right;
  for (const Word& g : a_generators) {
    if (g.empty()) continue;
    left.push_back(g);
    left.push_back(invert(g));
  }
  for (const Word& g : b_generators) {
    if (g.empty()) continue;
    right.push_back(g);
    right.push_back(invert(g));
  }

  // Every merge is a genuine equality in the group, so the counts can only
  // overestimate the number of double cosets.
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if ((i & 1023) == 0) check_deadline();
    const Word& v = ball.element(i);
    for (const Word& g : left) {
      if (auto j = ball.find(g * v)) links.emplace_back(i, *j);
    }
    for (const Word& g : right) {
      if (auto j = ball.find(v * g)) links.emplace_back(i, *j);
    }
  }

  for (std::size_t buffer : out.buffers) {
    const std::size_t limit = ball.count_within(radius + buffer);
    UnionFind uf(limit);
    for (auto [i, j] : links) {
      if (i < limit && j < limit) uf.unite(i, j);
    }
    // Elements are in ShortLex order, so the first member seen of each class
    // is its shortest.
    std::vector<std::uint64_t> counts(radius + 1, 0);
    std::vector<bool> seen(limit, false);
    for (std::size_t i = 0; i < limit; ++i) {
      const std::size_t root = uf.find(i);
      if (seen[root]) continue;
      seen[root] = true;
      const std::size_t len = ball.element(i).size();
      if (len <= radius) ++counts[len];
    }
    std::partial_sum(counts.begin(), counts.end(), counts.begin());
    out.per_buffer.push_back(std::move(counts));
  }

  out.series.counts = out.per_buffer.back();
  out.series.exact.assign(radius + 1, false);
  if (out.per_buffer.size() >= 2) {
    const auto& prev = out.per_buffer[out.per_buffer.size() - 2];
    for (std::size_t r = 0; r <= radius; ++r) out.series.exact[r] = prev[r] == out.series.counts[r];
  }
  out.series.meta = serialize(p);
  return out;
}

double fit_rate(const GrowthSeries& series, std::size_t window) {
  if (window < 2) throw Error(ErrorCode::invalid_argument, "fit_rate: window must be >= 2");
  if (series.counts.size() < window + 1) {
    throw Error(ErrorCode::invalid_argument, "fit_rate: series shorter than window + 1");
  }
  const std::size_t last = series.counts.size() - 1;
  double log_sum = 0;
  for (std::size_t r = last - window; r < last; ++r) {
    if (series.counts[r] == 0 || series.counts[r + 1] == 0) {
      throw Error(ErrorCode::degenerate_series, "fit_rate: zero count in window");
    }
    log_sum += std::log(static_cast<double>(series.counts[r + 1]) / static_cast<double>(series.counts[r]));
  }
  return std::exp(log_sum / static_cast<double>(window));
}

}  // namespace cosetgrowth
