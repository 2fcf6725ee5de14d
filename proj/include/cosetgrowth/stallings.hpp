#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// Folded Stallings core graph of a finitely generated subgroup of the free
// group of rank k. Vertex 0 is the basepoint; vertices are numbered in
// breadth-first order from it (letters in ShortLex order), so two graphs of
// the same subgroup compare equal.
class CoreGraph {
 public:
  static constexpr std::int32_t kNone = -1;

  CoreGraph() = default;
  CoreGraph(std::size_t rank, std::size_t vertex_count, std::vector<std::int32_t> next);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;
  static constexpr std::size_t basepoint() { return 0; }

  // Endpoint of the edge leaving v with label l (inverse letters follow edges backwards).
  std::optional<std::size_t> follow(std::size_t v, Letter l) const;
  std::optional<std::size_t> read(std::size_t from, std::span<const Letter> letters) const;
  std::size_t degree(std::size_t v) const;

  // Free basis read off a breadth-first spanning tree.
  std::vector<Word> basis() const;

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

 private:
  std::size_t rank_ = 0;
  std::size_t vertex_count_ = 1;
  std::vector<std::int32_t> next_;  // vertex * 2k + letter code
};

// `shuffle_seed` randomizes the order in which folds are applied; the result
// does not depend on it.
CoreGraph fold_core(std::span<const Word> generators, std::size_t rank,
                    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

bool membership(const CoreGraph& g, const Word& w);
bool is_finite_index(const CoreGraph& g);
bool is_trivial_subgroup(const CoreGraph& g);

// Core of the basepoint component of the fiber product: the intersection.
CoreGraph intersection_pullback(const CoreGraph& g1, const CoreGraph& g2);

// True iff h2 = a h1 b for some a in A, b in B.
bool double_coset_equal_free(const CoreGraph& a, const CoreGraph& b, const Word& h1, const Word& h2);

// ShortLex-least element of A h B.
Word double_coset_canonical_free(const CoreGraph& a, const CoreGraph& b, const Word& h);

// Reusable form of the two operations above for a fixed pair (A, B).
class DoubleCosetSpace {
 public:
  DoubleCosetSpace(CoreGraph a, CoreGraph b);

  bool equal(const Word& h1, const Word& h2) const;
  Word canonical(const Word& h) const;

  const CoreGraph& a() const { return a_; }
  const CoreGraph& b() const { return b_; }

 private:
  CoreGraph a_;
  CoreGraph b_;
};

// Subgroup file: one generator word per line, '#' starts a comment.
std::vector<Word> parse_subgroup(std::string_view text, const Presentation& p);

}  // namespace cosetgrowth
