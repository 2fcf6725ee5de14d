#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// A finite piece of the Cayley graph around the identity, built by a
// depth-capped Todd-Coxeter enumeration of the trivial subgroup.
//
// Vertices are only created at (upper-bound) distance <= depth from the
// identity. Every identification made is a consequence of the relators, so
// two words reaching different vertices may still be equal if the equality
// needs cells beyond the cap; words reaching the same vertex are always equal.
// Answers are trusted for vertices within `trusted_radius` of the identity.
class CayleyRegion {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CayleyRegion(const Presentation& p, std::size_t trusted_radius, std::size_t margin);

  std::size_t trusted_radius() const { return trusted_radius_; }
  std::size_t depth() const { return depth_; }
  std::size_t vertex_count() const { return distance_.size(); }

  // Vertex reached from the identity by reading `letters`, if inside the region.
  std::optional<std::uint32_t> trace(std::span<const Letter> letters) const;

  std::uint32_t distance(std::uint32_t v) const { return distance_[v]; }
  // ShortLex-least word reaching v.
  Word canonical_word(std::uint32_t v) const;
  // Vertices sorted by ShortLex order of their canonical words.
  const std::vector<std::uint32_t>& shortlex_order() const { return order_; }

 private:
  std::size_t letters_;
  std::size_t trusted_radius_;
  std::size_t depth_;
  std::vector<std::int32_t> table_;     // vertex * letters_ + letter -> vertex
  std::vector<std::uint32_t> distance_;
  std::vector<std::int32_t> parent_;    // BFS tree
  std::vector<Letter> parent_letter_;
  std::vector<std::uint32_t> order_;
};

}  // namespace cosetgrowth
