#include <random>

#include "doctest.h"

#include "brcov/errors.hpp"
#include "brcov/words.hpp"

using namespace brcov;

namespace {

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = Letter{gen(rng), static_cast<std::int8_t>(neg(rng) ? -1 : 1)};
  return free_reduce(rank, letters);
}

bool is_reduced(const Word& w) {
  const auto l = w.letters();
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] == l[i - 1].inverse()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse the standard presentations") {
  const Presentation z2 = parse_presentation("gens a,b; rels [a,b]; meridians m1=a, m2=b");
  CHECK(z2.rank() == 2);
  REQUIRE(z2.relators().size() == 1);
  CHECK(z2.relators()[0] == commutator(Word::generator(2, 0), Word::generator(2, 1)));
  REQUIRE(z2.meridians().size() == 2);
  CHECK(z2.meridians()[1].name == "m2");
  CHECK(z2.meridians()[1].word == Word::generator(2, 1));
  CHECK(z2 == Presentation::free_abelian(2));
  CHECK(z2.standard_abelian_rank() == 2);

  const Presentation z = parse_presentation("gens a; rels ; meridians m=a");
  CHECK(z.rank() == 1);
  CHECK(z.relators().empty());
  CHECK(z.find_meridian("m") != nullptr);
  CHECK(z.find_meridian("m1") == nullptr);

  const Presentation no_rels = parse_presentation("gens a; meridians m=a");
  CHECK(no_rels.relators().empty());
  CHECK(no_rels.meridians().size() == 1);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS((void)parse_presentation("gens a; rels b"), ParseError);
  try {
    (void)parse_presentation("gens a;\nrels a b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS((void)parse_presentation(""), ParseError);
  CHECK_THROWS_AS((void)parse_presentation("gens a,a"), ParseError);
  CHECK_THROWS_AS((void)parse_presentation("gens a; rels a^"), ParseError);
  CHECK_THROWS_AS((void)parse_presentation("gens a; rels (a"), ParseError);
  CHECK_THROWS_AS((void)parse_presentation("gens a; meridians m=a, m=a"), ParseError);
  CHECK_THROWS_AS((void)parse_presentation("gens a; frobnicate"), ParseError);
}

TEST_CASE("word syntax") {
  const Presentation f = Presentation::free_group(3);
  const Word a = Word::generator(3, 0), b = Word::generator(3, 1), c = Word::generator(3, 2);
  CHECK(parse_word(f, "a b^-1") == word_concat(a, word_inverse(b)));
  CHECK(parse_word(f, "a*b.c") == word_concat(word_concat(a, b), c));
  CHECK(parse_word(f, "(a b)^2") == word_power(word_concat(a, b), 2));
  CHECK(parse_word(f, "a^3") == Word::generator(3, 0, 3));
  CHECK(parse_word(f, "A") == word_inverse(a));
  CHECK(parse_word(f, "1").empty());
  CHECK(parse_word(f, "[a,b]^-1") == word_inverse(commutator(a, b)));
  CHECK(parse_word_list(f, "a^2, b, [a,c]").size() == 3);

  const Presentation rel = parse_presentation("gens a,b; rels a b = b a");
  REQUIRE(rel.relators().size() == 1);
  CHECK(rel.relators()[0].length() == 4);
  CHECK(f.format_word(parse_word(f, "a b^-1")) == "a b^-1");
  CHECK(f.format_word(Word(3)) == "1");
}

TEST_CASE("JSON presentations") {
  const Presentation p = parse_presentation(
      R"({"generators": ["a", "b"], "relators": ["[a,b]"], "meridians": {"m1": "a", "m2": "b"}})");
  CHECK(p == Presentation::free_abelian(2));
  const Presentation q = parse_presentation(R"({"generators": ["x"], "meridians": [["m", "x^2"]]})");
  CHECK(q.meridians()[0].word == Word::generator(1, 0, 2));
  CHECK_THROWS((void)parse_presentation(R"({"generators": 3})"));
}

TEST_CASE("DSL round trip") {
  const char* inputs[] = {
      "gens a,b; rels [a,b]; meridians m1=a, m2=b",
      "gens a; rels a^2; meridians m=a",
      "gens x,y,z; rels x y x^-1 y, z^3",
      "gens a; rels ; meridians ;",
  };
  for (const char* in : inputs) {
    const Presentation p = parse_presentation(in);
    CHECK(parse_presentation(p.to_dsl()) == p);
  }
}

TEST_CASE("free reduction examples") {
  const std::size_t r = 3;
  const Letter a{0, 1}, A{0, -1}, b{1, 1}, B{1, -1}, c{2, 1};
  CHECK(free_reduce(r, std::vector<Letter>{a, A, b}) == Word(r, std::vector<Letter>{b}));
  CHECK(free_reduce(r, std::vector<Letter>{}).empty());
  CHECK(free_reduce(r, std::vector<Letter>{a, b, B, a}) == Word::generator(r, 0, 2));
  CHECK(word_inverse(Word(r, std::vector<Letter>{a, b})) == Word(r, std::vector<Letter>{B, A}));
  CHECK(word_concat(Word(r, std::vector<Letter>{a}), Word(r, std::vector<Letter>{A})).empty());
  CHECK(word_concat(Word(r, std::vector<Letter>{a, b}), Word(r, std::vector<Letter>{B, c})) ==
        Word(r, std::vector<Letter>{a, c}));
  CHECK(cyclically_reduce(Word(r, std::vector<Letter>{A, b, a})) == Word(r, std::vector<Letter>{b}));
  CHECK(word_power(Word::generator(r, 0), -3) == Word::generator(r, 0, -3));
  CHECK_THROWS_AS((void)word_concat(Word(2), Word(3)), InvalidInput);
  CHECK_THROWS_AS(Word(2, std::vector<Letter>{Letter{2, 1}}), InvalidInput);
}

TEST_CASE("reduction properties on random words") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const Word u = random_word(rng, rank, 12), v = random_word(rng, rank, 12), w = random_word(rng, rank, 12);
    CHECK(is_reduced(u));
    CHECK(free_reduce(rank, u.letters()) == u);
    CHECK(word_concat(u, word_concat(v, w)) == word_concat(word_concat(u, v), w));
    CHECK(word_inverse(word_inverse(u)) == u);
    CHECK(word_concat(u, word_inverse(u)).empty());
    CHECK(is_reduced(word_concat(u, v)));
  }
}
