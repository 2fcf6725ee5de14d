#include "cosetgrowth/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::unknown_generator: return "unknown_generator";
    case ErrorCode::empty_relator: return "empty_relator";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_certified: return "not_certified";
    case ErrorCode::radius_exceeded: return "radius_exceeded";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::none_qualify: return "none_qualify";
    case ErrorCode::separator_failure: return "separator_failure";
    case ErrorCode::config_invalid: return "config_invalid";
    case ErrorCode::degenerate_series: return "degenerate_series";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

Word free_reduce(std::span<const Letter> letters) {
  Letters out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(Word::Trusted{}, std::move(out));
}

Word::Word(std::span<const Letter> letters) : Word(free_reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::subword(std::size_t from, std::size_t count) const {
  if (from > size() || count > size() - from) {
    throw std::out_of_range("Word::subword");
  }
  return Word(Trusted{}, Letters(letters_.begin() + from, letters_.begin() + from + count));
}

Word operator*(const Word& lhs, const Word& rhs) {
  // Cancellation only happens at the junction.
  std::size_t k = 0;
  const std::size_t limit = std::min(lhs.size(), rhs.size());
  while (k < limit && lhs.letters_[lhs.size() - 1 - k].cancels(rhs.letters_[k])) {
    ++k;
  }
  Letters out;
  out.reserve(lhs.size() + rhs.size() - 2 * k);
  out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end() - k);
  out.insert(out.end(), rhs.letters_.begin() + k, rhs.letters_.end());
  return Word(Word::Trusted{}, std::move(out));
}

Word Word::pow(int exponent) const {
  const Word base = exponent < 0 ? invert(*this) : *this;
  Word out;
  for (int i = 0; i < std::abs(exponent); ++i) {
    out = out * base;
  }
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  while (2 * k + 1 < w.size() && w[k].cancels(w[w.size() - 1 - k])) {
    ++k;
  }
  return {w.prefix(k), w.subword(k, w.size() - 2 * k)};
}

Letters invert(std::span<const Letter> letters) {
  Letters out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word invert(const Word& w) { return free_reduce(invert(w.letters())); }

Word rotate(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.size();
  Letters out(w.begin() + offset, w.end());
  out.insert(out.end(), w.begin(), w.begin() + offset);
  return free_reduce(out);
}

bool shortlex_less(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

Letters concat(std::initializer_list<std::span<const Letter>> parts) {
  Letters out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter codes.
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.code() + 1;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cosetgrowth
