#include "cosetgrowth/cayley_region.hpp"

#include <algorithm>
#include <deque>

#include "cosetgrowth/deadline.hpp"
#include "cosetgrowth/small_cancellation.hpp"

namespace cosetgrowth {
namespace {

constexpr std::int32_t kNone = CayleyRegion::kUndefined;

// Coset table for the trivial subgroup with HLT-style relator scanning.
class Enumerator {
 public:
  Enumerator(std::size_t letters, std::size_t max_depth)
      : letters_(letters), max_depth_(max_depth) {
    new_vertex(0);
  }

  std::int32_t& at(std::int32_t v, std::uint32_t l) { return table_[static_cast<std::size_t>(v) * letters_ + l]; }

  std::int32_t new_vertex(std::uint32_t depth) {
    const auto v = static_cast<std::int32_t>(parent_.size());
    table_.resize(table_.size() + letters_, kNone);
    parent_.push_back(v);
    depth_.push_back(depth);
    return v;
  }

  std::size_t size() const { return parent_.size(); }
  bool live(std::int32_t v) const { return parent_[v] == v; }
  std::uint32_t depth(std::int32_t v) const { return depth_[v]; }

  std::int32_t rep(std::int32_t v) {
    std::int32_t r = v;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[v] != r) {
      const std::int32_t next = parent_[v];
      parent_[v] = r;
      v = next;
    }
    return r;
  }

  // Returns the new vertex, or kNone if it would lie beyond the depth cap.
  std::int32_t define(std::int32_t v, std::uint32_t l) {
    if (depth_[v] + 1 > max_depth_) return kNone;
    const std::int32_t w = new_vertex(depth_[v] + 1);
    at(v, l) = w;
    at(w, l ^ 1u) = v;
    return w;
  }

  // Traces the cyclic word `r` at v; fills the gap when `allow_define`.
  // Returns true if the table changed.
  bool scan(std::int32_t v, const std::vector<std::uint32_t>& r, bool allow_define) {
    bool changed = false;
    std::int32_t f = v, b = v;
    std::size_t i = 0;
    std::size_t j = r.size();  // next backward letter is r[j - 1]
    for (;;) {
      while (i < j && at(f, r[i]) != kNone) f = at(f, r[i++]);
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
          return true;
        }
        return changed;
      }
      while (j > i && at(b, r[j - 1] ^ 1u) != kNone) b = at(b, r[--j] ^ 1u);
      if (j == i) {
        if (f != b) {
          coincidence(f, b);
          return true;
        }
        return changed;
      }
      if (j == i + 1) {
        at(f, r[i]) = b;
        at(b, r[i] ^ 1u) = f;
        depth_[b] = std::min(depth_[b], depth_[f] + 1);
        depth_[f] = std::min(depth_[f], depth_[b] + 1);
        return true;
      }
      if (!allow_define) return changed;
      const std::int32_t w = define(f, r[i]);
      if (w == kNone) return changed;
      changed = true;
    }
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::int32_t g = queue.front();
      queue.pop_front();
      for (std::uint32_t x = 0; x < letters_; ++x) {
        const std::int32_t d = at(g, x);
        if (d == kNone) continue;
        if (at(d, x ^ 1u) == g) at(d, x ^ 1u) = kNone;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1u) != kNone) {
          merge(mu, at(nu, x ^ 1u), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1u) = mu;
        }
      }
    }
  }

 private:
  void merge(std::int32_t k, std::int32_t l, std::deque<std::int32_t>& queue) {
    const std::int32_t phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const std::int32_t mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    depth_[mu] = std::min(depth_[mu], depth_[nu]);
    queue.push_back(nu);
  }

  std::size_t letters_;
  std::size_t max_depth_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint32_t> depth_;
};

}  // namespace

CayleyRegion::CayleyRegion(const Presentation& p, std::size_t trusted_radius, std::size_t margin)
    : letters_(2 * p.rank()), trusted_radius_(trusted_radius), depth_(trusted_radius + margin) {
  std::vector<std::vector<std::uint32_t>> cycles;
  if (!p.relators().empty()) {
    const SymmetrizedSet sym(p);
    for (std::size_t i = 0; i < sym.size(); ++i) {
      std::vector<std::uint32_t> codes;
      for (std::size_t k = 0; k < sym.length(i); ++k) codes.push_back(sym.letter(i, k).code());
      cycles.push_back(std::move(codes));
    }
  }

  Enumerator e(letters_, depth_);
  for (std::int32_t v = 0; static_cast<std::size_t>(v) < e.size(); ++v) {
    if ((v & 1023) == 0) check_deadline();
    for (const auto& r : cycles) {
      if (!e.live(v)) break;
      e.scan(v, r, true);
    }
    if (!e.live(v)) continue;
    for (std::uint32_t l = 0; l < letters_; ++l) {
      if (e.at(v, l) == kNone) e.define(v, l);
    }
  }
  // Deductions found late can close cells near the cap; rescan without
  // defining until nothing changes.
  for (int pass = 0; pass < 8; ++pass) {
    bool changed = false;
    for (std::int32_t v = 0; static_cast<std::size_t>(v) < e.size(); ++v) {
      for (const auto& r : cycles) {
        if (!e.live(v)) break;
        changed |= e.scan(v, r, false);
      }
    }
    if (!changed) break;
  }

  // Breadth-first renumbering from the identity in letter order; the first
  // path found to each vertex spells its ShortLex-least word.
  std::vector<std::int32_t> index(e.size(), kNone);
  std::vector<std::int32_t> old_of;
  index[0] = 0;
  old_of.push_back(0);
  distance_.push_back(0);
  parent_.push_back(kNone);
  parent_letter_.push_back(Letter());
  for (std::size_t head = 0; head < old_of.size(); ++head) {
    const std::int32_t v = old_of[head];
    for (std::uint32_t l = 0; l < letters_; ++l) {
      std::int32_t w = e.at(v, l);
      if (w == kNone) continue;
      w = e.rep(w);
      if (index[w] != kNone) continue;
      index[w] = static_cast<std::int32_t>(old_of.size());
      old_of.push_back(w);
      distance_.push_back(distance_[head] + 1);
      parent_.push_back(static_cast<std::int32_t>(head));
      parent_letter_.push_back(Letter::from_code(l));
    }
  }
  table_.assign(old_of.size() * letters_, kNone);
  for (std::size_t nv = 0; nv < old_of.size(); ++nv) {
    for (std::uint32_t l = 0; l < letters_; ++l) {
      const std::int32_t w = e.at(old_of[nv], l);
      if (w != kNone) table_[nv * letters_ + l] = index[e.rep(w)];
    }
  }
  order_.resize(old_of.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
}

std::optional<std::uint32_t> CayleyRegion::trace(std::span<const Letter> letters) const {
  std::int32_t v = 0;
  for (Letter l : letters) {
    v = table_[static_cast<std::size_t>(v) * letters_ + l.code()];
    if (v == kUndefined) return std::nullopt;
  }
  return static_cast<std::uint32_t>(v);
}

Word CayleyRegion::canonical_word(std::uint32_t v) const {
  Letters out;
  for (std::int32_t cur = static_cast<std::int32_t>(v); parent_[cur] != kUndefined; cur = parent_[cur]) {
    out.push_back(parent_letter_[cur]);
  }
  std::reverse(out.begin(), out.end());
  return free_reduce(out);
}

}  // namespace cosetgrowth
