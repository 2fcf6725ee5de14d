#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cosetgrowth/ball.hpp"
#include "cosetgrowth/oracle.hpp"
#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/stallings.hpp"

namespace cosetgrowth {

// counts[r] for r = 0..R, each with an exactness flag.
struct GrowthSeries {
  std::vector<std::uint64_t> counts;
  std::vector<bool> exact;
  std::string meta;

  std::size_t radius() const { return counts.empty() ? 0 : counts.size() - 1; }
};

// f(r) = |{g : |g| <= r}|.
GrowthSeries growth_function(const Presentation& p, const WordProblemOracle& o, std::size_t radius);
GrowthSeries growth_function(const Ball& ball, std::size_t radius);

// f for the free group of the given rank, by the closed form 1 + 2k((2k-1)^r - 1)/(2k-2).
std::uint64_t free_group_ball_size(std::size_t rank, std::size_t radius);

// Double cosets A h B meeting the radius-r ball of F_rank, counted exactly
// through ShortLex-least representatives.
GrowthSeries double_coset_growth_free(std::size_t rank, const CoreGraph& a, const CoreGraph& b,
                                      std::size_t radius);

struct BufferedGrowth {
  GrowthSeries series;  // counts from the largest buffer; exact = last two buffers agree
  std::vector<std::size_t> buffers;
  std::vector<std::vector<std::uint64_t>> per_buffer;
};

// Upper bounds on gr(G, A, B)(r): merge ball elements v ~ g v (g in A^{+-1})
// and v ~ v g (g in B^{+-1}) inside the ball of radius R + buffer, then count
// classes meeting the radius-r ball.
BufferedGrowth double_coset_growth_buffered(const Presentation& p, const WordProblemOracle& o,
                                            std::span<const Word> a_generators,
                                            std::span<const Word> b_generators, std::size_t radius,
                                            std::span<const std::size_t> buffers);

inline constexpr std::size_t kDefaultBuffers[] = {0, 1, 2, 3};

// Geometric mean of counts[r+1]/counts[r] over the last `window` steps.
double fit_rate(const GrowthSeries& series, std::size_t window);

}  // namespace cosetgrowth
