#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << text);
  return ErrorCode::io_error;
}

}  // namespace

TEST_CASE("parse_presentation examples") {
  const Presentation p = pres("< a b | a b A B >");
  CHECK(p.generator_names() == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == w("abAB"));

  const Presentation f = pres("< a | >");
  CHECK(f.rank() == 1);
  CHECK(f.relators().empty());

  const Presentation r = pres("< a | a a A >");
  REQUIRE(r.relators().size() == 1);
  CHECK(r.relators()[0] == w("a"));
}

TEST_CASE("relators are stored cyclically reduced") {
  const Presentation p = pres("< a b | b a a B >");
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == w("aa"));
}

TEST_CASE("multi-character generator names") {
  const Presentation p = pres("< x1 x2 | x1 x2 x1- x2- >");
  CHECK(p.rank() == 2);
  CHECK(p.relators()[0] == Word{pos(0), pos(1), neg(0), neg(1)});
  CHECK(p.format(p.relators()[0]) == "x1 x2 x1- x2-");
  CHECK(p.generator_index("x2") == 1u);
}

TEST_CASE("parse errors") {
  CHECK(code_of("< a b | a c >") == ErrorCode::unknown_generator);
  CHECK(code_of("< a | a A >") == ErrorCode::empty_relator);
  CHECK(code_of("a b | a") == ErrorCode::syntax_error);
  CHECK(code_of("< a b | a b") == ErrorCode::syntax_error);
}

TEST_CASE("parse_word accepts identity spellings") {
  const Presentation p = Presentation::free_group(2);
  CHECK(p.parse_word("1").empty());
  CHECK(p.parse_word("").empty());
  CHECK(p.parse_word("a b B").size() == 1);
  CHECK(p.format(Word{}) == "1");
  CHECK(p.parse_letters("a A").size() == 2);
}

TEST_CASE("parse and serialize round trip on random presentations") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rank = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t g = 0; g < rank; ++g) names.push_back(std::string(1, char('a' + g)));
    std::vector<Word> relators;
    const std::size_t n = rng() % 4;
    while (relators.size() < n) {
      Letters ls(1 + rng() % 10);
      for (auto& l : ls) l = Letter::from_code(static_cast<std::uint32_t>(rng() % (2 * rank)));
      const Word core = cyclic_reduce(free_reduce(ls)).core;
      if (!core.empty()) relators.push_back(core);
    }
    const Presentation p(names, relators);
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("shipped data files parse") {
  for (const char* name : {"trivial.pres", "Z.pres", "Z2.pres", "F2.pres", "genus2.pres", "commutator.pres", "Z7.pres"}) {
    std::ifstream in(data_path(name));
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_NOTHROW(parse_presentation(buf.str()));
  }
}
