#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "brcov/cosets.hpp"
#include "brcov/errors.hpp"

using namespace brcov;

namespace {

CosetTable cyclic(std::size_t k) {
  std::vector<Coset> shift(k);
  for (std::size_t i = 0; i < k; ++i) shift[i] = static_cast<Coset>((i + 1) % k);
  const std::vector<std::vector<Coset>> action{shift};
  return CosetTable::from_action(k, action);
}

// Relabels an action by the bijection sigma: new action g' = sigma g sigma^-1.
std::vector<std::vector<Coset>> relabel(const std::vector<std::vector<Coset>>& action, const std::vector<Coset>& sigma) {
  std::vector<std::vector<Coset>> out;
  for (const auto& g : action) {
    std::vector<Coset> h(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) h[sigma[x]] = sigma[g[x]];
    out.push_back(h);
  }
  return out;
}

void check_table(const CosetTable& t, const Presentation& p) {
  for (std::size_t g = 0; g < t.rank(); ++g) {
    for (Coset c = 0; c < t.degree(); ++c) {
      CHECK(t.at(t.at(c, g), g + t.rank()) == c);
    }
  }
  for (const auto& r : p.relators()) {
    for (Coset c = 0; c < t.degree(); ++c) CHECK(trace_word(t, c, r) == c);
  }
}

}  // namespace

TEST_CASE("Todd-Coxeter examples") {
  const Presentation z = parse_presentation("gens a; rels ; meridians m=a");
  const CosetTable t3 = todd_coxeter(z, std::vector<Word>{Word::generator(1, 0, 3)}, 100);
  CHECK(t3.degree() == 3);
  CHECK(cycle_notation(t3.generator_permutation(0)) == "(0 1 2)");

  const Presentation z2 = Presentation::free_abelian(2);
  const CosetTable h = todd_coxeter(z2, parse_word_list(z2, "a^2, b"), 100);
  CHECK(h.degree() == 2);
  CHECK(cycle_notation(h.generator_permutation(0)) == "(0 1)");
  CHECK(cycle_notation(h.generator_permutation(1)) == "()");

  const CosetTable t16 = todd_coxeter(z2, parse_word_list(z2, "a^4, b^4"), 100);
  CHECK(t16.degree() == 16);  // |det diag(4,4)|
  check_table(t16, z2);

  const Presentation klein = parse_presentation("gens a,b; rels a b a^-1 b");
  const CosetTable kt = todd_coxeter(klein, parse_word_list(klein, "a^2, b^2"), 1000);
  CHECK(kt.degree() == 4);
  check_table(kt, klein);

  const Presentation s3 = parse_presentation("gens a,b; rels a^2, b^3, (a b)^2");
  CHECK(todd_coxeter(s3, std::vector<Word>{}, 1000).degree() == 6);
  CHECK(todd_coxeter(s3, parse_word_list(s3, "a"), 1000).degree() == 3);
}

TEST_CASE("Todd-Coxeter on cyclic quotients of Z") {
  const Presentation z = Presentation::free_group(1);
  for (std::size_t k = 1; k <= 50; ++k) {
    const CosetTable t = todd_coxeter(z, std::vector<Word>{Word::generator(1, 0, static_cast<long>(k))});
    CHECK(t.degree() == k);
    CHECK(cycle_type(t.generator_permutation(0)) == std::vector<std::size_t>{k});
    CHECK(t.is_standardized());
  }
}

TEST_CASE("Todd-Coxeter stops at the coset limit") {
  const Presentation z = Presentation::free_group(1);
  CHECK_THROWS_AS((void)todd_coxeter(z, std::vector<Word>{}, 1000), ResourceExhausted);
  const Presentation z2 = Presentation::free_abelian(2);
  CHECK_THROWS_AS((void)todd_coxeter(z2, parse_word_list(z2, "a^4, b^4"), 10), ResourceExhausted);
}

TEST_CASE("trace_word and membership") {
  const CosetTable t = cyclic(3);
  const Word a = Word::generator(1, 0);
  CHECK(trace_word(t, 0, a) == 1);
  for (Coset c = 0; c < 3; ++c) CHECK(trace_word(t, c, Word(1)) == c);
  CHECK(trace_word(t, 0, Word::generator(1, 0, 3)) == 0);
  CHECK(trace_word(t, 2, Word::generator(1, 0, -1)) == 1);

  const Presentation z2 = Presentation::free_abelian(2);
  const CosetTable h = todd_coxeter(z2, parse_word_list(z2, "a^3, b a"), 100);
  for (const char* in : {"a^3", "a b", "b^3", "a^-1 b^2"}) CHECK(trace_word(h, 0, parse_word(z2, in)) == 0);
  for (const char* in : {"a", "b", "a^2 b"}) CHECK(trace_word(h, 0, parse_word(z2, in)) != 0);
}

TEST_CASE("table construction validates its input") {
  CHECK_THROWS_AS(CosetTable::from_entries(1, 2, {1, 1, 0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(CosetTable::from_entries(1, 2, {0, 1, 1, 0}), InvalidInput);  // intransitive
  CHECK_THROWS_AS(CosetTable::from_entries(1, 2, {1, 0, 0, 0}), InvalidInput);  // not inverse
  const std::vector<std::vector<Coset>> bad{{0, 0}};
  CHECK_THROWS_AS(CosetTable::from_action(2, bad), InvalidInput);
}

TEST_CASE("canonical form is a conjugacy invariant") {
  const Presentation z2 = Presentation::free_abelian(2);
  const CosetTable h = todd_coxeter(z2, parse_word_list(z2, "a^2, b"), 100);
  CHECK(canonical_form(standardize(h, 0)) == canonical_form(standardize(h, 1)));

  // A degree-3 action of F2: a = (0 1), b = (1 2). Stabilizers of 0 and 1 are
  // conjugate by any element that moves 0 to 1, for example a.
  const std::vector<std::vector<Coset>> action{{1, 0, 2}, {0, 2, 1}};
  const CosetTable t = CosetTable::from_action(3, action);
  const CosetTable at0 = standardize(t, 0), at1 = standardize(t, 1);
  CHECK(at0 != at1);
  CHECK(trace_word(t, 0, Word::generator(2, 0)) == 1);
  CHECK(canonical_form(at0) == canonical_form(at1));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + trial % 7;
    std::vector<std::vector<Coset>> act(2, std::vector<Coset>(k));
    std::vector<Coset> shift(k);
    std::iota(shift.begin(), shift.end(), 1);
    shift.back() = 0;
    act[0] = shift;
    std::iota(act[1].begin(), act[1].end(), 0);
    std::shuffle(act[1].begin(), act[1].end(), rng);
    std::vector<Coset> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const CosetTable x = CosetTable::from_action(k, act);
    const CosetTable y = CosetTable::from_action(k, relabel(act, sigma));
    const CosetTable cx = canonical_form(x);
    CHECK(cx == canonical_form(y));
    CHECK(cx.is_standardized());
    for (Coset base = 0; base < k; ++base) CHECK(canonical_form(standardize(x, base)) == cx);
    CHECK(cx <= standardize(x, static_cast<Coset>(trial % k)));
  }
}

TEST_CASE("Schreier data") {
  const Presentation f = Presentation::free_group(2);
  const std::vector<std::vector<Coset>> action{{1, 0, 2}, {0, 2, 1}};
  const CosetTable t = standardize(CosetTable::from_action(3, action), 0);
  const auto reps = coset_representatives(t);
  REQUIRE(reps.size() == 3);
  for (Coset c = 0; c < 3; ++c) CHECK(trace_word(t, 0, reps[c]) == c);
  const auto gens = schreier_generators(t);
  CHECK(gens.size() == 4);  // rank 1 + k (r - 1)
  for (const auto& w : gens) CHECK(trace_word(t, 0, w) == 0);
  CHECK(normalizing_cosets(t) == std::vector<Coset>{0});

  // The table is recovered by enumerating the subgroup its Schreier generators span.
  CHECK(todd_coxeter(f, gens, 100) == t);
}

TEST_CASE("cycle helpers") {
  const std::vector<Coset> p{1, 2, 0, 4, 3, 5};
  CHECK(cycle_notation(p) == "(0 1 2)(3 4)");
  CHECK(cycle_type(p) == std::vector<std::size_t>{3, 2, 1});
  const std::vector<Coset> id{0, 1};
  CHECK(cycle_notation(id) == "()");
  const std::vector<std::vector<Coset>> split{{1, 0, 3, 2}};
  CHECK_FALSE(is_transitive(4, split));
  CHECK(satisfies_relators(cyclic(4), parse_presentation("gens a; rels a^4")));
  CHECK_FALSE(satisfies_relators(cyclic(4), parse_presentation("gens a; rels a^2")));
}
