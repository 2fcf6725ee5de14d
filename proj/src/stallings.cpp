#include "cosetgrowth/stallings.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {
namespace {

constexpr std::int32_t kNone = CoreGraph::kNone;

// Labeled graph under construction; edges carry positive generator labels and
// vertices are merged through a union-find forest while folding.
class Folder {
 public:
  explicit Folder(std::size_t rank) : rank_(rank) {}

  std::size_t add_vertex() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  void add_edge(std::size_t u, Letter l, std::size_t v) {
    if (l.generator() >= rank_) throw Error(ErrorCode::invalid_argument, "letter outside the free basis");
    if (l.sign() > 0) {
      edges_.push_back({u, l.generator(), v});
    } else {
      edges_.push_back({v, l.generator(), u});
    }
  }

  // Path spelling `letters` from `from`; ends at `to` when given.
  std::size_t add_path(std::size_t from, std::span<const Letter> letters, std::optional<std::size_t> to) {
    std::size_t cur = from;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const bool last = i + 1 == letters.size();
      const std::size_t next = (last && to) ? *to : add_vertex();
      add_edge(cur, letters[i], next);
      cur = next;
    }
    if (letters.empty() && to) merge(from, *to);
    return cur;
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void fold(std::optional<std::uint64_t> shuffle_seed) {
    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    if (shuffle_seed) {
      std::mt19937_64 rng(*shuffle_seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    const std::size_t width = 2 * rank_;
    std::vector<std::int64_t> slot;
    for (bool changed = true; changed;) {
      changed = false;
      slot.assign(parent_.size() * width, -1);
      for (std::size_t idx : order) {
        const Edge& e = edges_[idx];
        std::size_t u = find(e.from), v = find(e.to);
        auto& out = slot[u * width + 2 * e.gen];
        if (out < 0) {
          out = static_cast<std::int64_t>(v);
        } else if (find(static_cast<std::size_t>(out)) != v) {
          merge(static_cast<std::size_t>(out), v);
          changed = true;
          u = find(u);
          v = find(v);
        }
        auto& in = slot[v * width + 2 * e.gen + 1];
        if (in < 0) {
          in = static_cast<std::int64_t>(u);
        } else if (find(static_cast<std::size_t>(in)) != u) {
          merge(static_cast<std::size_t>(in), u);
          changed = true;
        }
      }
    }
  }

  // Transition table over union-find representatives (indexed by original id).
  std::vector<std::int32_t> table() {
    const std::size_t width = 2 * rank_;
    std::vector<std::int32_t> next(parent_.size() * width, kNone);
    for (const Edge& e : edges_) {
      const std::size_t u = find(e.from), v = find(e.to);
      next[u * width + 2 * e.gen] = static_cast<std::int32_t>(v);
      next[v * width + 2 * e.gen + 1] = static_cast<std::int32_t>(u);
    }
    return next;
  }

  std::size_t rank() const { return rank_; }

 private:
  struct Edge {
    std::size_t from;
    std::uint32_t gen;
    std::size_t to;
  };

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  std::size_t rank_;
  std::vector<std::size_t> parent_;
  std::vector<Edge> edges_;
};

// Drops hanging trees (keeping `root`) and renumbers breadth-first from it.
CoreGraph finish_core(std::size_t rank, std::vector<std::int32_t> next, std::size_t root) {
  const std::size_t width = 2 * rank;
  const std::size_t n = next.size() / std::max<std::size_t>(width, 1);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < width; ++c) degree[v] += next[v * width + c] != kNone;
  }
  std::deque<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != root && degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const std::size_t v = leaves.front();
    leaves.pop_front();
    if (degree[v] != 1) continue;
    for (std::size_t c = 0; c < width; ++c) {
      const std::int32_t w = next[v * width + c];
      if (w == kNone) continue;
      next[v * width + c] = kNone;
      next[static_cast<std::size_t>(w) * width + (c ^ 1u)] = kNone;
      degree[v] = 0;
      if (--degree[w] == 1 && static_cast<std::size_t>(w) != root) leaves.push_back(w);
    }
  }

  std::vector<std::int32_t> index(n, kNone);
  std::vector<std::size_t> old_of{root};
  index[root] = 0;
  for (std::size_t head = 0; head < old_of.size(); ++head) {
    for (std::size_t c = 0; c < width; ++c) {
      const std::int32_t w = next[old_of[head] * width + c];
      if (w != kNone && index[w] == kNone) {
        index[w] = static_cast<std::int32_t>(old_of.size());
        old_of.push_back(static_cast<std::size_t>(w));
      }
    }
  }
  std::vector<std::int32_t> out(old_of.size() * width, kNone);
  for (std::size_t nv = 0; nv < old_of.size(); ++nv) {
    for (std::size_t c = 0; c < width; ++c) {
      const std::int32_t w = next[old_of[nv] * width + c];
      if (w != kNone) out[nv * width + c] = index[w];
    }
  }
  return CoreGraph(rank, old_of.size(), std::move(out));
}

// Automaton for A h B: the core graph of A, then the path spelling h, then
// the core graph of B. The path is one-way, so accepted words are exactly the
// products a h b. Saturating with empty moves for every cancelling pair x x^-1
// makes the automaton accept the reduced form of each accepted word.
class DoubleCosetAutomaton {
 public:
  DoubleCosetAutomaton(const CoreGraph& a, const CoreGraph& b, const Word& h) : width_(2 * a.rank()) {
    const std::size_t na = a.vertex_count();
    const std::size_t inner = h.empty() ? 0 : h.size() - 1;
    n_ = na + inner + b.vertex_count();
    accept_ = na + inner;
    for (std::size_t v = 0; v < na; ++v) {
      for (std::uint32_t c = 0; c < width_; ++c) {
        if (auto w = a.follow(v, Letter::from_code(c))) arcs_.push_back({v, c, *w});
      }
    }
    for (std::size_t v = 0; v < b.vertex_count(); ++v) {
      for (std::uint32_t c = 0; c < width_; ++c) {
        if (auto w = b.follow(v, Letter::from_code(c))) arcs_.push_back({accept_ + v, c, accept_ + *w});
      }
    }
    eps_.assign(n_ * n_, false);
    for (std::size_t v = 0; v < n_; ++v) eps_[v * n_ + v] = true;
    if (h.empty()) {
      eps_[0 * n_ + accept_] = true;
    } else {
      for (std::size_t i = 0; i < h.size(); ++i) {
        const std::size_t from = i == 0 ? 0 : na + i - 1;
        const std::size_t to = i + 1 == h.size() ? accept_ : na + i;
        arcs_.push_back({from, h[i].code(), to});
      }
    }
    saturate();
  }

  bool accepts(std::span<const Letter> word) const {
    std::vector<bool> cur = closure_of({0});
    for (Letter l : word) {
      std::vector<std::size_t> next;
      for (const Arc& arc : arcs_) {
        if (arc.code == l.code() && cur[arc.from]) next.push_back(arc.to);
      }
      if (next.empty()) return false;
      cur = closure_of(next);
    }
    return cur[accept_];
  }

  // ShortLex-least accepted word. Every shortest accepted word is reduced,
  // since its reduction is accepted too.
  Word shortlex_least() const {
    // Letters still needed from each state (empty moves are free).
    std::vector<std::size_t> need(n_, kUnreachable);
    need[accept_] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = 0; p < n_; ++p) {
        for (std::size_t q = 0; q < n_; ++q) {
          if (eps_[p * n_ + q] && need[q] < need[p]) need[p] = need[q], changed = true;
        }
      }
      for (const Arc& arc : arcs_) {
        if (need[arc.to] != kUnreachable && need[arc.to] + 1 < need[arc.from]) {
          need[arc.from] = need[arc.to] + 1;
          changed = true;
        }
      }
    }
    std::vector<bool> cur = closure_of({0});
    std::size_t remaining = kUnreachable;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cur[v]) remaining = std::min(remaining, need[v]);
    }
    Letters out;
    while (remaining > 0) {
      bool advanced = false;
      for (std::uint32_t c = 0; c < width_ && !advanced; ++c) {
        std::vector<std::size_t> next;
        for (const Arc& arc : arcs_) {
          if (arc.code == c && cur[arc.from] && need[arc.to] == remaining - 1) next.push_back(arc.to);
        }
        if (next.empty()) continue;
        cur = closure_of(next);
        out.push_back(Letter::from_code(c));
        --remaining;
        advanced = true;
      }
      if (!advanced) throw Error(ErrorCode::invalid_argument, "double coset automaton has no accepted word");
    }
    return free_reduce(out);
  }

 private:
  struct Arc {
    std::size_t from;
    std::uint32_t code;
    std::size_t to;
  };
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max() / 2;

  void close_transitively() {
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!eps_[i * n_ + k]) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (eps_[k * n_ + j]) eps_[i * n_ + j] = true;
        }
      }
    }
  }

  void saturate() {
    close_transitively();
    for (bool changed = true; changed;) {
      changed = false;
      for (const Arc& x : arcs_) {
        for (const Arc& y : arcs_) {
          if ((x.code ^ 1u) != y.code || !eps_[x.to * n_ + y.from] || eps_[x.from * n_ + y.to]) continue;
          eps_[x.from * n_ + y.to] = true;
          changed = true;
        }
      }
      if (changed) close_transitively();
    }
  }

  std::vector<bool> closure_of(const std::vector<std::size_t>& states) const {
    std::vector<bool> out(n_, false);
    for (std::size_t s : states) {
      for (std::size_t q = 0; q < n_; ++q) {
        if (eps_[s * n_ + q]) out[q] = true;
      }
    }
    return out;
  }

  std::uint32_t width_;
  std::size_t n_ = 0;
  std::size_t accept_ = 0;
  std::vector<Arc> arcs_;
  std::vector<bool> eps_;  // reflexive, transitive
};

}  // namespace

CoreGraph::CoreGraph(std::size_t rank, std::size_t vertex_count, std::vector<std::int32_t> next)
    : rank_(rank), vertex_count_(vertex_count), next_(std::move(next)) {}

std::size_t CoreGraph::edge_count() const {
  return static_cast<std::size_t>(std::count_if(next_.begin(), next_.end(), [](std::int32_t w) { return w != kNone; })) / 2;
}

std::optional<std::size_t> CoreGraph::follow(std::size_t v, Letter l) const {
  if (l.generator() >= rank_) return std::nullopt;
  const std::int32_t w = next_[v * 2 * rank_ + l.code()];
  if (w == kNone) return std::nullopt;
  return static_cast<std::size_t>(w);
}

std::optional<std::size_t> CoreGraph::read(std::size_t from, std::span<const Letter> letters) const {
  std::optional<std::size_t> cur = from;
  for (Letter l : letters) {
    cur = follow(*cur, l);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::size_t CoreGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t c = 0; c < 2 * rank_; ++c) d += next_[v * 2 * rank_ + c] != kNone;
  return d;
}

std::vector<Word> CoreGraph::basis() const {
  // Vertices are already numbered breadth-first, so the tree path to v is
  // recovered from the first edge discovering it.
  std::vector<Word> path(vertex_count_);
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::pair<std::size_t, std::uint32_t>> tree_edge(vertex_count_, {0, ~0u});
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t c = 0; c < 2 * rank_; ++c) {
      const std::int32_t w = next_[v * 2 * rank_ + c];
      if (w == kNone || seen[w]) continue;
      seen[w] = true;
      path[w] = path[v] * Word{Letter::from_code(c)};
      tree_edge[w] = {v, c};
      queue.push_back(static_cast<std::size_t>(w));
    }
  }
  std::vector<Word> out;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    for (std::uint32_t gen = 0; gen < rank_; ++gen) {
      const std::int32_t w = next_[v * 2 * rank_ + 2 * gen];
      if (w == kNone) continue;
      const bool is_tree = (tree_edge[w] == std::make_pair(v, 2 * gen)) ||
                           (tree_edge[v] == std::make_pair(static_cast<std::size_t>(w), 2 * gen + 1));
      if (is_tree) continue;
      out.push_back(path[v] * Word{pos(gen)} * invert(path[w]));
    }
  }
  return out;
}

CoreGraph fold_core(std::span<const Word> generators, std::size_t rank,
                    std::optional<std::uint64_t> shuffle_seed) {
  Folder f(rank);
  const std::size_t base = f.add_vertex();
  for (const Word& g : generators) {
    if (g.empty()) continue;
    f.add_path(base, g.letters(), base);
  }
  f.fold(shuffle_seed);
  return finish_core(rank, f.table(), f.find(base));
}

bool membership(const CoreGraph& g, const Word& w) {
  auto end = g.read(CoreGraph::basepoint(), w.letters());
  return end && *end == CoreGraph::basepoint();
}

bool is_finite_index(const CoreGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2 * g.rank()) return false;
  }
  return true;
}

bool is_trivial_subgroup(const CoreGraph& g) { return g.edge_count() == 0; }

CoreGraph intersection_pullback(const CoreGraph& g1, const CoreGraph& g2) {
  if (g1.rank() != g2.rank()) throw Error(ErrorCode::invalid_argument, "subgroups of different rank");
  const std::size_t width = 2 * g1.rank();
  std::vector<std::int32_t> id(g1.vertex_count() * g2.vertex_count(), kNone);
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
  id[0] = 0;
  std::vector<std::int32_t> next;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    next.resize((head + 1) * width, kNone);
    const auto [u1, u2] = pairs[head];
    for (std::uint32_t c = 0; c < width; ++c) {
      auto w1 = g1.follow(u1, Letter::from_code(c));
      auto w2 = g2.follow(u2, Letter::from_code(c));
      if (!w1 || !w2) continue;
      auto& slot = id[*w1 * g2.vertex_count() + *w2];
      if (slot == kNone) {
        slot = static_cast<std::int32_t>(pairs.size());
        pairs.emplace_back(*w1, *w2);
      }
      next[head * width + c] = slot;
    }
  }
  next.resize(pairs.size() * width, kNone);
  return finish_core(g1.rank(), std::move(next), 0);
}

DoubleCosetSpace::DoubleCosetSpace(CoreGraph a, CoreGraph b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rank() != b_.rank()) throw Error(ErrorCode::invalid_argument, "subgroups of different rank");
}

bool DoubleCosetSpace::equal(const Word& h1, const Word& h2) const {
  return DoubleCosetAutomaton(a_, b_, h1).accepts(h2.letters());
}

Word DoubleCosetSpace::canonical(const Word& h) const { return DoubleCosetAutomaton(a_, b_, h).shortlex_least(); }

bool double_coset_equal_free(const CoreGraph& a, const CoreGraph& b, const Word& h1, const Word& h2) {
  return DoubleCosetSpace(a, b).equal(h1, h2);
}

Word double_coset_canonical_free(const CoreGraph& a, const CoreGraph& b, const Word& h) {
  return DoubleCosetSpace(a, b).canonical(h);
}

std::vector<Word> parse_subgroup(std::string_view text, const Presentation& p) {
  std::vector<Word> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    try {
      gens.push_back(p.parse_word(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return gens;
}

}  // namespace cosetgrowth
