#pragma once

#include <string>
#include <vector>

#include "brute_force.hpp"
#include "cosetgrowth/cosetgrowth.hpp"
#include "doctest.h"

// Readable failure messages for rationals.
template <>
struct doctest::StringMaker<cosetgrowth::Rational> {
  static String convert(const cosetgrowth::Rational& r) { return cosetgrowth::to_string(r).c_str(); }
};

namespace testing {

using namespace cosetgrowth;

inline brute::Seq to_seq(const Word& w) {
  brute::Seq s;
  for (Letter l : w) s.push_back(l.code());
  return s;
}

inline Word from_seq(const brute::Seq& s) {
  Letters ls;
  for (auto c : s) ls.push_back(Letter::from_code(c));
  return free_reduce(ls);
}

inline std::vector<brute::Seq> to_seqs(const std::vector<Word>& ws) {
  std::vector<brute::Seq> out;
  for (const Word& w : ws) out.push_back(to_seq(w));
  return out;
}

inline const Presentation& f2() {
  static const Presentation p = Presentation::free_group(2);
  return p;
}

// Word over a, b, c, ... with uppercase inverses.
inline Word w(const std::string& text) {
  static const Presentation p = Presentation::free_group(8);
  return p.parse_word(text);
}

inline std::vector<Word> ws(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(w(t));
  return out;
}

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline Presentation genus2() { return pres("< a b c d | a b A B c d C D >"); }

inline std::string data_path(const std::string& name) { return std::string(COSETGROWTH_DATA_DIR) + "/" + name; }

}  // namespace testing
