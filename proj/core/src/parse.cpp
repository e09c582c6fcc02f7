#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "json.hpp"

#include "brcov/errors.hpp"
#include "brcov/words.hpp"

namespace brcov {
namespace {

constexpr long kMaxExponent = 1'000'000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    skip_space();
    const std::size_t kw_pos = pos_;
    const std::string kw = identifier("expected 'gens'");
    if (kw != "gens" && kw != "generators") fail("expected 'gens' clause first", kw_pos);
    generator_list();
    end_clause();

    std::vector<Word> relators;
    std::vector<Meridian> meridians;
    bool have_rels = false;
    bool have_meridians = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const std::size_t pos = pos_;
      const std::string clause = identifier("expected 'rels' or 'meridians'");
      if (clause == "rels" || clause == "relators" || clause == "relations") {
        if (have_rels) fail("duplicate 'rels' clause", pos);
        have_rels = true;
        relators = relator_list();
      } else if (clause == "meridians") {
        if (have_meridians) fail("duplicate 'meridians' clause", pos);
        have_meridians = true;
        meridians = meridian_list();
      } else {
        fail("unknown clause '" + clause + "'", pos);
      }
      end_clause();
    }
    return Presentation(generators_, std::move(relators), std::move(meridians));
  }

  void set_generators(const std::vector<std::string>& names) { generators_ = names; }

  Word single_word() {
    Word w = word();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return w;
  }

  std::vector<Word> word_list() {
    std::vector<Word> words;
    skip_space();
    if (at_end()) return words;
    words.push_back(word());
    while (accept(',')) words.push_back(word());
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return words;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
  }

  std::string identifier(const char* what) {
    skip_space();
    if (!is_ident_start(peek())) fail(what, pos_);
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void end_clause() {
    skip_space();
    if (at_end()) return;
    expect(';');
  }

  bool clause_ends() {
    skip_space();
    return at_end() || peek() == ';';
  }

  void generator_list() {
    std::set<std::string> seen;
    if (clause_ends()) return;
    do {
      skip_space();
      const std::size_t pos = pos_;
      std::string name = identifier("expected generator name");
      if (!seen.insert(name).second) fail("duplicate generator name '" + name + "'", pos);
      generators_.push_back(std::move(name));
    } while (accept(','));
  }

  std::vector<Word> relator_list() {
    std::vector<Word> relators;
    if (clause_ends()) return relators;
    do {
      Word lhs = word();
      if (accept('=')) lhs = word_concat(lhs, word_inverse(word()));
      relators.push_back(std::move(lhs));
    } while (accept(','));
    return relators;
  }

  std::vector<Meridian> meridian_list() {
    std::vector<Meridian> meridians;
    std::set<std::string> seen;
    if (clause_ends()) return meridians;
    do {
      skip_space();
      const std::size_t pos = pos_;
      std::string name = identifier("expected meridian name");
      if (!seen.insert(name).second) fail("duplicate meridian name '" + name + "'", pos);
      expect('=');
      meridians.push_back({std::move(name), word()});
    } while (accept(','));
    return meridians;
  }

  Word word() {
    const std::size_t rank = generators_.size();
    Word out(rank);
    bool any = false;
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '*' || c == '.') {
        if (!any) fail("expected a word", pos_);
        ++pos_;
        continue;
      }
      if (!(is_ident_start(c) || c == '(' || c == '[' || c == '1')) break;
      out = word_concat(out, factor());
      any = true;
    }
    if (!any) fail("expected a word", pos_);
    return out;
  }

  Word factor() {
    auto [head, base] = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t pos = pos_;
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent", pos);
      long value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (peek() - '0');
        if (value > kMaxExponent) fail("exponent too large", pos);
        ++pos_;
      }
      base = word_power(base, negative ? -value : value);
    }
    return word_concat(head, base);
  }

  // An exponent binds to `tail` only; `head` is non-empty for juxtaposed
  // letters such as "ab^2" = a b b.
  struct Atom {
    Word head;
    Word tail;
  };

  Atom atom() {
    const std::size_t rank = generators_.size();
    skip_space();
    const std::size_t pos = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = word();
      expect(')');
      return {Word(rank), std::move(inner)};
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return {Word(rank), commutator(u, v)};
    }
    if (c == '1') {
      ++pos_;
      if (is_ident_char(peek())) fail("unexpected character after identity '1'", pos_);
      return {Word(rank), Word(rank)};
    }
    const std::string name = identifier("expected a generator");
    if (auto letter = resolve(name)) return {Word(rank), Word(rank, std::span<const Letter>(&*letter, 1))};
    // Juxtaposed single-character generators, e.g. "abAB".
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < name.size(); ++i) {
      auto letter = resolve(std::string(1, name[i]));
      if (!letter) fail("unknown generator '" + name + "'", pos);
      letters.push_back(*letter);
    }
    const Letter last = letters.back();
    letters.pop_back();
    return {Word(rank, letters), Word(rank, std::span<const Letter>(&last, 1))};
  }

  std::optional<Letter> resolve(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) return Letter{static_cast<std::uint32_t>(i), 1};
    }
    // Uppercase single letter is the inverse of its lowercase generator,
    // unless it is itself a generator name.
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
      const std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0]))));
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == lower) return Letter{static_cast<std::uint32_t>(i), -1};
      }
    }
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> generators_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Word json_word(const std::vector<std::string>& generators, const nlohmann::ordered_json& value,
               const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a word string", 1, 1);
  Parser parser(value.get_ref<const std::string&>());
  parser.set_generators(generators);
  try {
    return parser.single_word();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.line(), e.column());
  }
}

Presentation from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("JSON presentation needs a 'generators' array", 1, 1);
  }
  std::vector<std::string> generators;
  std::set<std::string> seen;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings", 1, 1);
    const auto& name = g.get_ref<const std::string&>();
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char)) {
      throw ParseError("invalid generator name '" + name + "'", 1, 1);
    }
    if (!seen.insert(name).second) throw ParseError("duplicate generator name '" + name + "'", 1, 1);
    generators.push_back(name);
  }
  std::vector<Word> relators;
  if (doc.contains("relators")) {
    if (!doc["relators"].is_array()) throw ParseError("'relators' must be an array", 1, 1);
    std::size_t i = 0;
    for (const auto& r : doc["relators"]) {
      relators.push_back(json_word(generators, r, "relators[" + std::to_string(i++) + "]"));
    }
  }
  std::vector<Meridian> meridians;
  std::set<std::string> seen_meridians;
  auto add_meridian = [&](const std::string& name, const nlohmann::ordered_json& w) {
    if (!seen_meridians.insert(name).second) throw ParseError("duplicate meridian name '" + name + "'", 1, 1);
    meridians.push_back({name, json_word(generators, w, "meridians." + name)});
  };
  if (doc.contains("meridians")) {
    const auto& m = doc["meridians"];
    if (m.is_object()) {
      for (const auto& [name, w] : m.items()) add_meridian(name, w);
    } else if (m.is_array()) {
      for (const auto& entry : m) {
        if (entry.is_object() && entry.contains("name") && entry["name"].is_string() && entry.contains("word")) {
          add_meridian(entry["name"].get<std::string>(), entry["word"]);
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string()) {
          add_meridian(entry[0].get<std::string>(), entry[1]);
        } else {
          throw ParseError("meridian entries must be {\"name\",\"word\"} objects or [name, word] pairs", 1, 1);
        }
      }
    } else {
      throw ParseError("'meridians' must be an object or an array", 1, 1);
    }
  }
  return Presentation(std::move(generators), std::move(relators), std::move(meridians));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return from_json(text);
  return Parser(text).presentation();
}

Word parse_word(const Presentation& p, std::string_view text) {
  Parser parser(text);
  parser.set_generators(p.generator_names());
  return parser.single_word();
}

std::vector<Word> parse_word_list(const Presentation& p, std::string_view text) {
  Parser parser(text);
  parser.set_generators(p.generator_names());
  return parser.word_list();
}

}  // namespace brcov
