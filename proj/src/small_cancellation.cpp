#include "cosetgrowth/small_cancellation.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

SymmetrizedSet::SymmetrizedSet(const Presentation& p) : source_(p) {
  for (const Word& r : p.relators()) {
    bases_.emplace_back(r.begin(), r.end());
    bases_.push_back(invert(r.letters()));
  }
  for (std::uint32_t b = 0; b < bases_.size(); ++b) {
    for (std::uint32_t off = 0; off < bases_[b].size(); ++off) elements_.push_back({b, off});
  }

  auto compare = [this](const Rotation& a, const Rotation& b) {
    const std::size_t la = bases_[a.base].size(), lb = bases_[b.base].size();
    const std::size_t k = common_prefix(a, b);
    if (k == std::min(la, lb)) return la < lb;
    const auto& ba = bases_[a.base];
    const auto& bb = bases_[b.base];
    return ba[(a.offset + k) % la] < bb[(b.offset + k) % lb];
  };
  std::sort(elements_.begin(), elements_.end(), compare);

  // Drop rotations that spell the same word as their predecessor.
  std::vector<Rotation> unique;
  unique.reserve(elements_.size());
  lcp_.reserve(elements_.size());
  for (const Rotation& r : elements_) {
    if (!unique.empty()) {
      const std::size_t k = common_prefix(unique.back(), r);
      const std::size_t lr = bases_[r.base].size();
      if (k == lr && bases_[unique.back().base].size() == lr) continue;
      lcp_.push_back(static_cast<std::uint32_t>(k));
    } else {
      lcp_.push_back(0);
    }
    unique.push_back(r);
  }
  elements_ = std::move(unique);
}

std::size_t SymmetrizedSet::common_prefix(const Rotation& a, const Rotation& b) const {
  const Letters& ba = bases_[a.base];
  const Letters& bb = bases_[b.base];
  const std::size_t la = ba.size(), lb = bb.size();
  const std::size_t limit = std::min(la, lb);
  std::size_t ia = a.offset, ib = b.offset;
  std::size_t k = 0;
  while (k < limit && ba[ia] == bb[ib]) {
    ++k;
    if (++ia == la) ia = 0;
    if (++ib == lb) ib = 0;
  }
  return k;
}

Letter SymmetrizedSet::letter(std::size_t i, std::size_t k) const {
  const Rotation& r = elements_[i];
  const Letters& base = bases_[r.base];
  return base[(r.offset + k) % base.size()];
}

Word SymmetrizedSet::element(std::size_t i) const {
  const Rotation& r = elements_[i];
  const Letters& base = bases_[r.base];
  Letters out(base.begin() + r.offset, base.end());
  out.insert(out.end(), base.begin(), base.begin() + r.offset);
  return free_reduce(out);
}

std::vector<Word> SymmetrizedSet::elements() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

bool SymmetrizedSet::contains(const Word& w) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (length(i) == w.size() && element(i) == w) return true;
  }
  return false;
}

SymmetrizedSet symmetrize(const Presentation& p) { return SymmetrizedSet(p); }

namespace {

// Longest piece that is a prefix of each sorted element.
std::vector<std::size_t> prefix_pieces(const SymmetrizedSet& s) {
  std::vector<std::size_t> piece(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    piece[i - 1] = std::max(piece[i - 1], s.lcp(i));
    piece[i] = std::max(piece[i], s.lcp(i));
  }
  return piece;
}

}  // namespace

PieceReport max_piece(const SymmetrizedSet& s) {
  PieceReport report;
  report.per_relator.assign(s.source().relators().size(), 0);
  const auto piece = prefix_pieces(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto& slot = report.per_relator[s.relator_of(i)];
    slot = std::max(slot, piece[i]);
  }
  std::size_t best_at = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.lcp(i) > report.max_piece_length) {
      report.max_piece_length = s.lcp(i);
      best_at = i;
    }
  }
  if (report.max_piece_length > 0) {
    report.witness = std::make_pair(s.element(best_at - 1), s.element(best_at));
  }
  return report;
}

bool check_metric_condition(const SymmetrizedSet& s, const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) {
    throw Error(ErrorCode::invalid_argument, "metric condition needs 0 < lambda <= 1");
  }
  const auto piece = prefix_pieces(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // |p| < (num/den) |r|  <=>  |p| * den < num * |r|
    const auto lhs = static_cast<std::int64_t>(piece[i]) * lambda.denominator();
    const auto rhs = lambda.numerator() * static_cast<std::int64_t>(s.length(i));
    if (lhs >= rhs) return false;
  }
  return true;
}

DehnSolver::DehnSolver(const Presentation& p)
    : DehnSolver(std::make_shared<const SymmetrizedSet>(p)) {}

DehnSolver::DehnSolver(std::shared_ptr<const SymmetrizedSet> set) : set_(std::move(set)) {
  if (!check_metric_condition(*set_, Rational(1, 6))) {
    throw Error(ErrorCode::not_certified, "presentation does not satisfy C'(1/6)");
  }
  const std::size_t n = set_->size();
  min_replaceable_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    lengths[i] = static_cast<std::uint32_t>(set_->length(i));
    min_replaceable_ = std::min(min_replaceable_, set_->length(i) / 2 + 1);
  }
  sparse_min_.push_back(std::move(lengths));
  for (std::size_t width = 2; width <= n; width *= 2) {
    const auto& prev = sparse_min_.back();
    std::vector<std::uint32_t> next(n - width + 1);
    for (std::size_t i = 0; i + width <= n; ++i) {
      next[i] = std::min(prev[i], prev[i + width / 2]);
    }
    sparse_min_.push_back(std::move(next));
  }
}

std::size_t DehnSolver::range_min_length(std::size_t lo, std::size_t hi) const {
  const std::size_t level = std::bit_width(hi - lo) - 1;
  const auto& row = sparse_min_[level];
  return std::min(row[lo], row[hi - (std::size_t{1} << level)]);
}

std::optional<DehnSolver::Match> DehnSolver::find_leftmost(const Word& w) const {
  const SymmetrizedSet& s = *set_;
  const std::size_t n = w.size();
  if (s.size() == 0) return std::nullopt;
  for (std::size_t start = 0; start < n && n - start >= min_replaceable_; ++start) {
    std::size_t lo = 0, hi = s.size();
    std::size_t best_k = 0, best_lo = 0, best_hi = 0;
    for (std::size_t k = 0; start + k < n; ++k) {
      // Elements in [lo, hi) share the prefix w[start, start + k); order them
      // by "ended" first, then by letter k.
      const auto key = [&](std::size_t i) -> std::int64_t {
        return s.length(i) == k ? -1 : static_cast<std::int64_t>(s.letter(i, k).code());
      };
      const std::int64_t target = w[start + k].code();
      std::size_t a = lo, b = hi;
      while (a < b) {
        const std::size_t mid = (a + b) / 2;
        if (key(mid) < target) a = mid + 1; else b = mid;
      }
      std::size_t c = a, d = hi;
      while (c < d) {
        const std::size_t mid = (c + d) / 2;
        if (key(mid) <= target) c = mid + 1; else d = mid;
      }
      lo = a;
      hi = c;
      if (lo == hi) break;
      const std::size_t shortest = range_min_length(lo, hi);
      if (shortest >= 2 * (n - start)) break;  // no element here can qualify later
      if (shortest < 2 * (k + 1)) {
        best_k = k + 1;
        best_lo = lo;
        best_hi = hi;
      }
    }
    if (best_k == 0) continue;
    Match m;
    m.start = start;
    m.length = best_k;
    bool have = false;
    for (std::size_t i = best_lo; i < best_hi; ++i) {
      const std::size_t len = s.length(i);
      if (len >= 2 * best_k) continue;
      Letters rest;
      for (std::size_t k = best_k; k < len; ++k) rest.push_back(s.letter(i, k));
      Word replacement = free_reduce(invert(rest));
      if (!have || shortlex_less(replacement, m.replacement)) {
        m.replacement = std::move(replacement);
        have = true;
      }
    }
    return m;
  }
  return std::nullopt;
}

Word DehnSolver::reduce(const Word& w) const {
  Word current = w;
  while (auto m = find_leftmost(current)) {
    Letters next(current.begin(), current.begin() + m->start);
    next.insert(next.end(), m->replacement.begin(), m->replacement.end());
    next.insert(next.end(), current.begin() + m->start + m->length, current.end());
    current = free_reduce(next);
  }
  return current;
}

Word dehn_reduce(const Word& w, const SymmetrizedSet& s) {
  return DehnSolver(std::make_shared<const SymmetrizedSet>(s)).reduce(w);
}

}  // namespace cosetgrowth
