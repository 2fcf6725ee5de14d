#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cosetgrowth/oracle.hpp"
#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// Group elements of length <= radius, each stored as its ShortLex-least word.
//
// Elements are kept in ShortLex order, so layer r is a contiguous slice.
// Expansion is single-writer; a ball that is no longer expanded may be read
// from any number of threads.
class Ball {
 public:
  explicit Ball(WordProblemOracle oracle);

  void expand_to(std::size_t radius);

  std::size_t radius() const { return layer_end_.size() - 1; }
  std::size_t size() const { return elements_.size(); }
  const Word& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Word>& elements() const { return elements_; }
  std::span<const Word> layer(std::size_t r) const;
  // Number of elements of length <= r (r capped at the radius).
  std::size_t count_within(std::size_t r) const;

  // Index of the element equal to w, or nullopt if w is longer than radius().
  std::optional<std::size_t> find(const Word& w) const;

  const WordProblemOracle& oracle() const { return oracle_; }

 private:
  bool is_new(const Word& candidate, std::size_t limit_length) const;
  void insert(Word w);

  WordProblemOracle oracle_;
  std::vector<Word> elements_;
  std::vector<std::size_t> layer_end_;
  std::unordered_map<Word, std::size_t, WordHash> by_word_;
  std::unordered_map<ElementKey, std::vector<std::size_t>, ElementKeyHash> by_key_;
};

Ball enumerate_ball(const Presentation& p, const WordProblemOracle& o, std::size_t r);

// Memoized geodesic length: keeps one ball and grows it on demand.
class BallDistance {
 public:
  explicit BallDistance(WordProblemOracle oracle) : ball_(std::move(oracle)) {}

  // Throws Error(radius_exceeded) if the length exceeds r_max.
  std::size_t operator()(const Word& w, std::size_t r_max);

  const Ball& ball() const { return ball_; }

 private:
  Ball ball_;
};

}  // namespace cosetgrowth
