#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosetgrowth/word.hpp"

namespace cosetgrowth {

// Finite presentation < g1 ... gm | r1, ..., rn >.
//
// Relators are stored cyclically reduced and nonempty. Single-character
// generator names must be lowercase ASCII letters so that the uppercase letter
// can spell the inverse; longer names use a trailing '-' for the inverse.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  // Free group on `rank` generators named a, b, c, ...
  static Presentation free_group(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t max_relator_length() const;

  std::optional<std::size_t> generator_index(std::string_view name) const;

  // Parses a whitespace/juxtaposition word in this presentation's alphabet.
  // "1" and the empty string denote the identity.
  Word parse_word(std::string_view text) const;
  Letters parse_letters(std::string_view text) const;

  // Tokens separated by single spaces; empty word prints as "1".
  std::string format(std::span<const Letter> letters) const;
  std::string format(const Word& w) const { return format(w.letters()); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& p);

}  // namespace cosetgrowth
