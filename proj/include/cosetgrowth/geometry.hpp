#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosetgrowth/oracle.hpp"
#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/rational.hpp"
#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// d(1, w) in the Cayley graph. May throw Error(radius_exceeded).
using DistanceOracle = std::function<std::size_t(const Word&)>;

// Reduced length: exact in a free group.
DistanceOracle free_distance();
// Memoized ball search through the oracle, capped at r_max.
DistanceOracle oracle_distance(const WordProblemOracle& o, std::size_t r_max);

struct QuasiParams {
  Rational epsilon{1};
  Rational eta{0};

  QuasiParams() = default;
  QuasiParams(Rational epsilon, Rational eta);  // throws invalid_argument unless epsilon >= 1, eta >= 0
};

// (u, v)_1 = (d(1,u) + d(1,v) - d(u,v)) / 2.
Rational gromov_product(const Word& u, const Word& v, const DistanceOracle& dist);

struct QuasiViolation {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t distance = 0;
};

// First subword w[i..j) (in order of i, then j) with j - i > epsilon * d + eta.
std::optional<QuasiViolation> find_quasi_violation(std::span<const Letter> w, const QuasiParams& q,
                                                   const DistanceOracle& dist);
bool is_quasigeodesic(std::span<const Letter> w, const QuasiParams& q, const DistanceOracle& dist);

struct ProductEntry {
  std::size_t first;   // index into SeparatorPair::words()
  std::size_t second;
  Rational value;
};

struct SeparatorPair {
  Word x;
  Word y;
  std::size_t c0 = 0;
  Rational beta_bound{0};
  std::vector<ProductEntry> product_table;  // all 12 ordered pairs of distinct slots

  // {x, x^-1, y, y^-1}: the fixed candidate order.
  std::array<Word, 4> words() const;
};

// Fills the product table; throws invalid_argument if the pair breaks an invariant.
SeparatorPair make_separator_pair(Word x, Word y, std::size_t c0, Rational beta_bound,
                                  const DistanceOracle& dist);

struct SeparatorSearch {
  std::size_t slack = 2;
  std::size_t max_candidates = 4096;
};

// First pair (x, y), x before y in ShortLex, among geodesic words of length
// c0..c0+slack. Throws Error(not_found).
SeparatorPair find_separators(const Presentation& p, const DistanceOracle& dist, std::size_t c0,
                              Rational beta_bound, const SeparatorSearch& search = {});

// epsilon = 1, eta = 4 max(|x|, |y|).
QuasiParams calibrated_params(const SeparatorPair& sep);

// First z in (x, x^-1, y, y^-1) with u z v quasigeodesic at q, where u z v is
// the raw concatenation. Throws Error(none_qualify) listing each failure.
Word select_connector(std::span<const Letter> u, std::span<const Letter> v, const SeparatorPair& sep,
                      const QuasiParams& q, const DistanceOracle& dist);

// How many of (u,x)_1, (u,x^-1)_1, (u,y)_1, (u,y^-1)_1 exceed the threshold.
std::size_t count_large_products(const Word& u, const SeparatorPair& sep, const Rational& threshold,
                                 const DistanceOracle& dist);

}  // namespace cosetgrowth
