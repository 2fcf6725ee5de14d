#include "cosetgrowth/ball.hpp"

#include <algorithm>

#include "cosetgrowth/deadline.hpp"
#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

Ball::Ball(WordProblemOracle oracle) : oracle_(std::move(oracle)) {
  layer_end_.push_back(0);
  insert(Word());
  layer_end_[0] = 1;
}

std::span<const Word> Ball::layer(std::size_t r) const {
  if (r > radius()) return {};
  const std::size_t begin = r == 0 ? 0 : layer_end_[r - 1];
  return std::span<const Word>(elements_).subspan(begin, layer_end_[r] - begin);
}

std::size_t Ball::count_within(std::size_t r) const { return layer_end_[std::min(r, radius())]; }

void Ball::insert(Word w) {
  const std::size_t idx = elements_.size();
  if (oracle_.method() != OracleMethod::free) by_key_[oracle_.key(w)].push_back(idx);
  by_word_.emplace(w, idx);
  elements_.push_back(std::move(w));
}

bool Ball::is_new(const Word& candidate, std::size_t limit_length) const {
  switch (oracle_.method()) {
    case OracleMethod::free:
      return true;
    case OracleMethod::bfs_ball:
      return !by_key_.contains(oracle_.key(candidate));
    case OracleMethod::dehn: {
      if (oracle_.shorten(candidate).size() < candidate.size()) return false;
      if (candidate.size() + limit_length < oracle_.free_below()) return true;
      auto it = by_key_.find(oracle_.key(candidate));
      if (it == by_key_.end()) return true;
      for (std::size_t idx : it->second) {
        if (oracle_.equal(candidate, elements_[idx])) return false;
      }
      return true;
    }
  }
  return true;
}

void Ball::expand_to(std::size_t target) {
  if (const CayleyRegion* region = oracle_.region(); region && target > region->trusted_radius()) {
    throw Error(ErrorCode::radius_exceeded, "ball radius " + std::to_string(target) +
                                                " exceeds the oracle radius " +
                                                std::to_string(region->trusted_radius()));
  }
  const std::size_t letters = 2 * oracle_.presentation().rank();
  while (radius() < target) {
    const std::size_t k = radius();
    const std::size_t begin = k == 0 ? 0 : layer_end_[k - 1];
    const std::size_t end = layer_end_[k];
    for (std::size_t i = begin; i < end; ++i) {
      if ((i & 4095) == 0) check_deadline();
      for (std::uint32_t code = 0; code < letters; ++code) {
        const Letter l = Letter::from_code(code);
        const Word& v = elements_[i];
        if (!v.empty() && v.back().cancels(l)) continue;
        Letters next(v.begin(), v.end());
        next.push_back(l);
        Word u = free_reduce(next);
        if (is_new(u, k + 1)) insert(std::move(u));
      }
    }
    layer_end_.push_back(elements_.size());
  }
}

std::optional<std::size_t> Ball::find(const Word& w) const {
  const Word s = oracle_.shorten(w);
  if (auto it = by_word_.find(s); it != by_word_.end()) return it->second;
  switch (oracle_.method()) {
    case OracleMethod::free:
      return std::nullopt;
    case OracleMethod::bfs_ball: {
      auto it = by_key_.find(oracle_.key(s));
      if (it == by_key_.end()) return std::nullopt;
      return it->second.front();
    }
    case OracleMethod::dehn: {
      if (s.size() + radius() < oracle_.free_below()) return std::nullopt;
      auto it = by_key_.find(oracle_.key(s));
      if (it == by_key_.end()) return std::nullopt;
      for (std::size_t idx : it->second) {
        if (oracle_.equal(s, elements_[idx])) return idx;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Ball enumerate_ball(const Presentation& p, const WordProblemOracle& o, std::size_t r) {
  if (!(o.presentation() == p)) {
    throw Error(ErrorCode::invalid_argument, "enumerate_ball: oracle built for a different presentation");
  }
  Ball ball(o);
  ball.expand_to(r);
  return ball;
}

std::size_t BallDistance::operator()(const Word& w, std::size_t r_max) {
  const Word s = ball_.oracle().shorten(w);
  const std::size_t upper = std::min(s.size(), r_max);
  for (std::size_t r = 0; r <= upper; ++r) {
    if (ball_.radius() < r) ball_.expand_to(r);
    if (auto idx = ball_.find(s); idx && ball_.element(*idx).size() <= r) {
      return ball_.element(*idx).size();
    }
  }
  throw Error(ErrorCode::radius_exceeded, "geodesic length exceeds r_max = " + std::to_string(r_max));
}

}  // namespace cosetgrowth
