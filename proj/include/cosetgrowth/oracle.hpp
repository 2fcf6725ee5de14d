#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "cosetgrowth/cayley_region.hpp"
#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/small_cancellation.hpp"

namespace cosetgrowth {

enum class OracleMethod { dehn, bfs_ball, free };

std::string_view to_string(OracleMethod m);

// Group invariant of a word: equal elements always have equal keys; when the
// oracle reports exact keys, equal keys also mean equal elements.
struct ElementKey {
  std::vector<std::int64_t> values;
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept;
};

// Word-problem solver for a presentation. Cheap to copy; copies share state.
class WordProblemOracle {
 public:
  // No relators: reduced words are normal forms.
  static WordProblemOracle free(const Presentation& p);
  // Dehn's algorithm; throws Error(not_certified) unless C'(1/6) holds.
  static WordProblemOracle dehn(const Presentation& p);
  // Depth-capped Cayley graph region. Words whose halves stay within
  // `radius` of the identity are decided; longer ones raise radius_exceeded.
  // `margin` defaults to the longest relator length.
  static WordProblemOracle bfs_ball(const Presentation& p, std::size_t radius,
                                    std::optional<std::size_t> margin = std::nullopt);
  // free if there are no relators, dehn if certified, else bfs_ball(radius).
  static WordProblemOracle automatic(const Presentation& p, std::size_t radius);

  OracleMethod method() const;
  const Presentation& presentation() const;

  bool is_trivial(const Word& w) const;
  bool equal(const Word& u, const Word& v) const { return is_trivial(u * invert(v)); }

  ElementKey key(const Word& w) const;
  bool keys_are_exact() const { return method() != OracleMethod::dehn; }

  // Representative of w that is no longer than w (Dehn-reduced for dehn).
  Word shorten(const Word& w) const;

  // Nonzero when words u, v with |u| + |v| below it are equal only if they are
  // equal as reduced words.
  std::size_t free_below() const;

  const CayleyRegion* region() const;

 private:
  struct Impl;
  explicit WordProblemOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_trivial(const Word& w, const WordProblemOracle& o);

// min{|u| : u = w in the group}; throws Error(radius_exceeded) above r_max.
std::size_t geodesic_length(const Word& w, const WordProblemOracle& o, std::size_t r_max);

}  // namespace cosetgrowth
