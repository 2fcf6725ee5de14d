#include "cosetgrowth/oracle.hpp"

#include <limits>

#include "cosetgrowth/ball.hpp"
#include "cosetgrowth/detail/abelian.hpp"
#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

std::string_view to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::dehn: return "dehn";
    case OracleMethod::bfs_ball: return "bfs_ball";
    case OracleMethod::free: return "free";
  }
  return "unknown";
}

std::size_t ElementKeyHash::operator()(const ElementKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : k.values) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

struct WordProblemOracle::Impl {
  OracleMethod method;
  Presentation presentation;
  std::optional<DehnSolver> dehn;
  std::optional<detail::AbelianInvariant> abelian;
  std::optional<CayleyRegion> region;
};

WordProblemOracle WordProblemOracle::free(const Presentation& p) {
  if (!p.relators().empty()) {
    throw Error(ErrorCode::invalid_argument, "free oracle requires a presentation without relators");
  }
  auto impl = std::make_shared<Impl>();
  impl->method = OracleMethod::free;
  impl->presentation = p;
  return WordProblemOracle(std::move(impl));
}

WordProblemOracle WordProblemOracle::dehn(const Presentation& p) {
  auto impl = std::make_shared<Impl>();
  impl->method = OracleMethod::dehn;
  impl->presentation = p;
  impl->dehn.emplace(p);
  impl->abelian.emplace(p);
  return WordProblemOracle(std::move(impl));
}

WordProblemOracle WordProblemOracle::bfs_ball(const Presentation& p, std::size_t radius,
                                              std::optional<std::size_t> margin) {
  auto impl = std::make_shared<Impl>();
  impl->method = OracleMethod::bfs_ball;
  impl->presentation = p;
  impl->region.emplace(p, radius, margin.value_or(p.max_relator_length()));
  return WordProblemOracle(std::move(impl));
}

WordProblemOracle WordProblemOracle::automatic(const Presentation& p, std::size_t radius) {
  if (p.relators().empty()) return free(p);
  if (check_metric_condition(SymmetrizedSet(p), Rational(1, 6))) return dehn(p);
  return bfs_ball(p, radius);
}

OracleMethod WordProblemOracle::method() const { return impl_->method; }
const Presentation& WordProblemOracle::presentation() const { return impl_->presentation; }
const CayleyRegion* WordProblemOracle::region() const {
  return impl_->region ? &*impl_->region : nullptr;
}

std::size_t WordProblemOracle::free_below() const {
  switch (impl_->method) {
    case OracleMethod::free: return std::numeric_limits<std::size_t>::max();
    case OracleMethod::dehn: return impl_->dehn->min_replaceable_length();
    case OracleMethod::bfs_ball: return 0;
  }
  return 0;
}

namespace {

std::uint32_t trace_or_throw(const CayleyRegion& region, std::span<const Letter> letters) {
  auto v = region.trace(letters);
  if (!v) {
    throw Error(ErrorCode::radius_exceeded,
                "word leaves the enumerated Cayley region (depth " + std::to_string(region.depth()) + ")");
  }
  return *v;
}

}  // namespace

bool WordProblemOracle::is_trivial(const Word& w) const {
  switch (impl_->method) {
    case OracleMethod::free:
      return w.empty();
    case OracleMethod::dehn:
      return impl_->dehn->reduce(w).empty();
    case OracleMethod::bfs_ball: {
      // Compare the vertices reached by the two halves so that only
      // distances up to ceil(|w|/2) are needed.
      const CayleyRegion& region = *impl_->region;
      const std::size_t half = (w.size() + 1) / 2;
      if (half > region.trusted_radius()) {
        throw Error(ErrorCode::radius_exceeded,
                    "word of length " + std::to_string(w.size()) + " exceeds the oracle radius " +
                        std::to_string(region.trusted_radius()));
      }
      const Letters back = invert(w.letters().subspan(half));
      return trace_or_throw(region, w.letters().first(half)) == trace_or_throw(region, back);
    }
  }
  return false;
}

ElementKey WordProblemOracle::key(const Word& w) const {
  ElementKey k;
  switch (impl_->method) {
    case OracleMethod::free:
      k.values.reserve(w.size());
      for (Letter l : w) k.values.push_back(l.code());
      break;
    case OracleMethod::dehn:
      k.values = impl_->abelian->image(w.letters());
      break;
    case OracleMethod::bfs_ball:
      k.values.push_back(trace_or_throw(*impl_->region, w.letters()));
      break;
  }
  return k;
}

Word WordProblemOracle::shorten(const Word& w) const {
  if (impl_->method == OracleMethod::dehn) return impl_->dehn->reduce(w);
  if (impl_->method == OracleMethod::bfs_ball) {
    if (auto v = impl_->region->trace(w.letters())) {
      Word c = impl_->region->canonical_word(*v);
      if (c.size() <= w.size()) return c;
    }
  }
  return w;
}

bool is_trivial(const Word& w, const WordProblemOracle& o) { return o.is_trivial(w); }

std::size_t geodesic_length(const Word& w, const WordProblemOracle& o, std::size_t r_max) {
  auto exceeded = [&] {
    return Error(ErrorCode::radius_exceeded,
                 "geodesic length exceeds r_max = " + std::to_string(r_max));
  };
  switch (o.method()) {
    case OracleMethod::free:
      if (w.size() > r_max) throw exceeded();
      return w.size();
    case OracleMethod::bfs_ball: {
      const CayleyRegion& region = *o.region();
      const std::size_t d = region.distance(trace_or_throw(region, w.letters()));
      if (d > r_max) throw exceeded();
      return d;
    }
    case OracleMethod::dehn: {
      BallDistance distance(o);
      return distance(w, r_max);
    }
  }
  return 0;
}

}  // namespace cosetgrowth
