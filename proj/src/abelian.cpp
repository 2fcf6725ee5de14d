#include "cosetgrowth/detail/abelian.hpp"

#include <algorithm>
#include <cstdlib>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth::detail {
namespace {

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  // a - q * b
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Error(ErrorCode::invalid_argument, "abelian invariant: integer overflow");
  }
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

AbelianInvariant::AbelianInvariant(const Presentation& p) : rank_(p.rank()) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const Word& r : p.relators()) {
    std::vector<std::int64_t> v(rank_, 0);
    for (Letter l : r) v[l.generator()] += l.sign();
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(std::move(v));
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < rank_ && top < rows.size(); ++col) {
    // Euclid on column `col` over rows[top..] until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[top][col];
        for (std::size_t c = col; c < rank_; ++c) rows[i][c] = checked_mul_sub(rows[i][c], q, rows[top][c]);
        others |= rows[i][col] != 0;
      }
      if (!others) {
        if (rows[top][col] < 0) {
          for (auto& x : rows[top]) x = -x;
        }
        pivots_.push_back({col, rows[top]});
        ++top;
        break;
      }
    }
  }
}

std::vector<std::int64_t> AbelianInvariant::image(std::span<const Letter> letters) const {
  std::vector<std::int64_t> v(rank_, 0);
  for (Letter l : letters) v[l.generator()] += l.sign();
  for (const Pivot& pv : pivots_) {
    const std::int64_t q = floor_div(v[pv.column], pv.row[pv.column]);
    if (q == 0) continue;
    for (std::size_t c = pv.column; c < rank_; ++c) v[c] = checked_mul_sub(v[c], q, pv.row[c]);
  }
  return v;
}

}  // namespace cosetgrowth::detail
