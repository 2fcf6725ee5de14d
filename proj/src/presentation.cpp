#include "cosetgrowth/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void validate_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char)) {
      throw Error(ErrorCode::syntax_error, "invalid generator name '" + name + "'");
    }
    if (name.size() == 1 && !std::islower(static_cast<unsigned char>(name[0]))) {
      throw Error(ErrorCode::syntax_error,
                  "single-letter generator '" + name + "' must be lowercase");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::syntax_error, "duplicate generator '" + name + "'");
    }
  }
}

// Cursor over the input that knows its line/column for error messages.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  // Identifier with an optional trailing '-', or the literal "1".
  std::string token() {
    std::size_t start = pos_;
    if (peek() == '1') {
      advance();
      return "1";
    }
    if (!is_ident_start(peek())) fail("expected generator token");
    while (is_ident_char(peek())) advance();
    if (peek() == '-') advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::syntax_error) const {
    std::ostringstream msg;
    msg << what << " at line " << line_ << ", column " << column_;
    throw Error(code, msg.str());
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Appends the letters spelled by one token; returns false if it names nothing.
bool append_token(const Presentation& p, std::string_view tok, Letters& out) {
  if (tok == "1") return true;
  if (auto idx = p.generator_index(tok)) {
    out.push_back(pos(static_cast<std::uint32_t>(*idx)));
    return true;
  }
  if (tok.size() > 1 && tok.back() == '-') {
    if (auto idx = p.generator_index(tok.substr(0, tok.size() - 1))) {
      out.push_back(neg(static_cast<std::uint32_t>(*idx)));
      return true;
    }
  }
  // Juxtaposed single-letter generators, uppercase for inverses.
  Letters letters;
  for (char c : tok) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto idx = p.generator_index(std::string_view(&lower, 1));
    if (!idx) return false;
    letters.push_back(Letter(static_cast<std::uint32_t>(*idx), std::isupper(static_cast<unsigned char>(c)) ? -1 : 1));
  }
  out.insert(out.end(), letters.begin(), letters.end());
  return true;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  validate_names(names_);
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (Letter l : r) {
      if (l.generator() >= names_.size()) {
        throw Error(ErrorCode::unknown_generator, "relator letter outside the alphabet");
      }
    }
    Word core = cyclic_reduce(r).core;
    if (core.empty()) throw Error(ErrorCode::empty_relator, "relator reduces to the empty word");
    relators_.push_back(std::move(core));
  }
}

Presentation Presentation::free_group(std::size_t rank) {
  if (rank > 26) throw Error(ErrorCode::invalid_argument, "free_group: rank above 26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Presentation(std::move(names), {});
}

std::size_t Presentation::max_relator_length() const {
  std::size_t best = 0;
  for (const auto& r : relators_) best = std::max(best, r.size());
  return best;
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Letters Presentation::parse_letters(std::string_view text) const {
  Letters out;
  Scanner sc(text);
  for (;;) {
    sc.skip_space();
    if (sc.at_end()) break;
    const std::size_t line = sc.line(), col = sc.column();
    std::string tok = sc.token();
    if (!append_token(*this, tok, out)) {
      throw Error(ErrorCode::unknown_generator, "unknown generator '" + tok + "' at line " +
                                                    std::to_string(line) + ", column " +
                                                    std::to_string(col));
    }
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const { return free_reduce(parse_letters(text)); }

std::string Presentation::format(std::span<const Letter> letters) const {
  if (letters.empty()) return "1";
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    const std::string& name = names_.at(l.generator());
    if (l.sign() > 0) {
      out += name;
    } else if (name.size() == 1) {
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    } else {
      out += name;
      out += '-';
    }
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Scanner sc(text);
  sc.expect('<');
  std::vector<std::string> names;
  for (;;) {
    sc.skip_space();
    if (sc.peek() == '|') break;
    if (sc.at_end()) sc.fail("unexpected end of input in generator list");
    if (!is_ident_start(sc.peek())) sc.fail("expected generator name");
    std::string tok = sc.token();
    if (tok.back() == '-') sc.fail("generator name may not end with '-'");
    names.push_back(std::move(tok));
  }
  sc.expect('|');
  validate_names(names);
  const Presentation alphabet(names, {});

  std::vector<Word> relators;
  Letters current;
  bool pending = false;  // saw tokens or a comma since the last relator
  bool any_token = false;
  for (;;) {
    sc.skip_space();
    const char c = sc.peek();
    if (c == '>' || c == ',') {
      if (c == ',' || pending) {
        if (!any_token) sc.fail("empty relator");
        Word core = cyclic_reduce(free_reduce(current)).core;
        if (core.empty()) sc.fail("relator reduces to the empty word", ErrorCode::empty_relator);
        relators.push_back(std::move(core));
      }
      current.clear();
      any_token = false;
      pending = (c == ',');
      sc.expect(c);
      if (c == '>') break;
      continue;
    }
    if (sc.at_end()) sc.fail("unexpected end of input in relator list");
    const std::size_t line = sc.line(), col = sc.column();
    std::string tok = sc.token();
    if (!append_token(alphabet, tok, current)) {
      throw Error(ErrorCode::unknown_generator, "unknown generator '" + tok + "' at line " +
                                                    std::to_string(line) + ", column " +
                                                    std::to_string(col));
    }
    any_token = true;
    pending = true;
  }
  sc.skip_space();
  if (!sc.at_end()) sc.fail("trailing input after '>'");
  return Presentation(std::move(names), std::move(relators));
}

std::string serialize(const Presentation& p) {
  std::string out = "<";
  for (const auto& name : p.generator_names()) out += " " + name;
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i == 0 ? " " : " , ";
    out += p.format(p.relators()[i]);
  }
  out += " >";
  return out;
}

}  // namespace cosetgrowth
