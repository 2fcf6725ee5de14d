#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/rational.hpp"
#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// Closure of the relators under cyclic permutation and inversion.
//
// Elements are kept implicitly as (relator, inverted, offset) rotations and
// sorted lexicographically (a proper prefix sorts before its extensions), so
// the longest common prefix of any two elements is the minimum over the
// adjacent LCPs between them. Identical rotations are stored once.
class SymmetrizedSet {
 public:
  explicit SymmetrizedSet(const Presentation& p);

  const Presentation& source() const { return source_; }

  std::size_t size() const { return elements_.size(); }
  std::size_t length(std::size_t i) const { return bases_[elements_[i].base].size(); }
  Letter letter(std::size_t i, std::size_t k) const;
  Word element(std::size_t i) const;
  // Index of the source relator that element i is a rotation of (or of its inverse).
  std::size_t relator_of(std::size_t i) const { return elements_[i].base / 2; }

  // LCP of elements i-1 and i in sorted order; lcp(0) == 0.
  std::size_t lcp(std::size_t i) const { return lcp_[i]; }

  std::vector<Word> elements() const;
  bool contains(const Word& w) const;

 private:
  struct Rotation {
    std::uint32_t base;
    std::uint32_t offset;
  };
  std::size_t common_prefix(const Rotation& a, const Rotation& b) const;

  Presentation source_;
  std::vector<Letters> bases_;  // relator r at 2r, its inverse at 2r + 1
  std::vector<Rotation> elements_;
  std::vector<std::uint32_t> lcp_;
};

SymmetrizedSet symmetrize(const Presentation& p);

struct PieceReport {
  std::size_t max_piece_length = 0;
  // Longest piece occurring in each source relator.
  std::vector<std::size_t> per_relator;
  // Two distinct symmetrized elements whose common prefix has max length.
  std::optional<std::pair<Word, Word>> witness;
};

PieceReport max_piece(const SymmetrizedSet& s);

// True iff every piece p of every element r has |p| < lambda * |r|.
bool check_metric_condition(const SymmetrizedSet& s, const Rational& lambda);

// Dehn's algorithm over a set certified C'(1/6) at construction.
class DehnSolver {
 public:
  // Throws Error(not_certified) unless the set satisfies C'(1/6).
  explicit DehnSolver(std::shared_ptr<const SymmetrizedSet> set);
  explicit DehnSolver(const Presentation& p);

  const SymmetrizedSet& set() const { return *set_; }

  // Repeatedly replaces the leftmost (then longest) subword u with u a prefix
  // of a symmetrized element r = u v^-1 and |u| > |r|/2 by v. Ties between
  // elements are broken by the ShortLex-least replacement.
  Word reduce(const Word& w) const;

  // Length below which no freely reduced word contains a replaceable subword.
  std::size_t min_replaceable_length() const { return min_replaceable_; }

 private:
  struct Match {
    std::size_t start = 0;
    std::size_t length = 0;
    Word replacement;
  };
  std::optional<Match> find_leftmost(const Word& w) const;
  std::size_t range_min_length(std::size_t lo, std::size_t hi) const;

  std::shared_ptr<const SymmetrizedSet> set_;
  std::vector<std::vector<std::uint32_t>> sparse_min_;  // range-min over element lengths
  std::size_t min_replaceable_ = 0;
};

Word dehn_reduce(const Word& w, const SymmetrizedSet& s);

}  // namespace cosetgrowth
