#pragma once

#include <cstdint>
#include <vector>

#include "cosetgrowth/presentation.hpp"

namespace cosetgrowth::detail {

// Image of a word in the abelianization Z^m / <relator exponent vectors>,
// reduced to a canonical coset representative with an echelon (Hermite) basis
// of the relation lattice. Equal group elements get equal images.
class AbelianInvariant {
 public:
  explicit AbelianInvariant(const Presentation& p);

  std::vector<std::int64_t> image(std::span<const Letter> letters) const;

 private:
  struct Pivot {
    std::size_t column;
    std::vector<std::int64_t> row;
  };
  std::size_t rank_;
  std::vector<Pivot> pivots_;
};

}  // namespace cosetgrowth::detail
