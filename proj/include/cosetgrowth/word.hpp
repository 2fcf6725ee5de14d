#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cosetgrowth {

// A signed generator. The packed code 2*generator + (sign < 0) orders letters
// by generator index first and puts the positive letter before its inverse,
// which is the letter order used by ShortLex throughout the library.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, int sign)
      : code_(2 * generator + (sign < 0 ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1u) ? -1 : 1; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr bool cancels(Letter other) const { return (code_ ^ 1u) == other.code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

constexpr Letter pos(std::uint32_t generator) { return Letter(generator, +1); }
constexpr Letter neg(std::uint32_t generator) { return Letter(generator, -1); }

// Raw letter sequence; may contain cancelling pairs.
using Letters = std::vector<Letter>;

// A freely reduced word. The only ways to build one go through free reduction,
// so the invariant holds for every live value.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  // Subword [from, from + count); subwords of a reduced word are reduced.
  Word subword(std::size_t from, std::size_t count) const;
  Word prefix(std::size_t count) const { return subword(0, count); }
  Word suffix(std::size_t from) const { return subword(from, size() - from); }

  // Reduced product.
  friend Word operator*(const Word& lhs, const Word& rhs);
  Word pow(int exponent) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(Trusted, Letters letters) : letters_(std::move(letters)) {}
  friend Word free_reduce(std::span<const Letter>);
  Letters letters_;
};

Word free_reduce(std::span<const Letter> letters);
inline Word free_reduce(std::initializer_list<Letter> letters) {
  return free_reduce(std::span<const Letter>(letters.begin(), letters.size()));
}

struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicDecomposition cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word invert(const Word& w);
Letters invert(std::span<const Letter> letters);

// Rotation by `offset` letters: w[offset..] w[..offset].
Word rotate(const Word& w, std::size_t offset);

bool shortlex_less(std::span<const Letter> u, std::span<const Letter> v);
inline bool shortlex_less(const Word& u, const Word& v) {
  return shortlex_less(u.letters(), v.letters());
}

struct ShortLexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

Letters concat(std::initializer_list<std::span<const Letter>> parts);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace cosetgrowth

template <>
struct std::hash<cosetgrowth::Word> : cosetgrowth::WordHash {};
