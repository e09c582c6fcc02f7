#include "brcov/cosets.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "brcov/errors.hpp"

namespace brcov {
namespace {

constexpr Coset kUnset = std::numeric_limits<Coset>::max();

// Relabelling of `t` from `base` in first-visit scan order: order[i] is the
// old coset given new number i.
std::vector<Coset> visit_order(const CosetTable& t, Coset base) {
  const std::size_t k = t.degree();
  std::vector<Coset> label(k, kUnset);
  std::vector<Coset> order;
  order.reserve(k);
  label[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t col = 0; col < t.columns(); ++col) {
      const Coset e = t.at(order[i], col);
      if (label[e] == kUnset) {
        label[e] = static_cast<Coset>(order.size());
        order.push_back(e);
      }
    }
  }
  return order;
}

}  // namespace

CosetTable CosetTable::from_action(std::size_t degree, std::span<const std::vector<Coset>> action) {
  const std::size_t rank = action.size();
  std::vector<Coset> entries(degree * 2 * rank, kUnset);
  for (std::size_t g = 0; g < rank; ++g) {
    if (action[g].size() != degree) throw InvalidInput("generator action has the wrong length");
    for (std::size_t c = 0; c < degree; ++c) {
      const Coset d = action[g][c];
      if (d >= degree) throw InvalidInput("coset index out of range");
      if (entries[d * 2 * rank + rank + g] != kUnset) throw InvalidInput("generator action is not a permutation");
      entries[c * 2 * rank + g] = d;
      entries[d * 2 * rank + rank + g] = static_cast<Coset>(c);
    }
  }
  return from_entries(rank, degree, std::move(entries));
}

CosetTable CosetTable::from_entries(std::size_t rank, std::size_t degree, std::vector<Coset> entries) {
  if (degree == 0) throw InvalidInput("coset table needs at least one coset");
  if (entries.size() != degree * 2 * rank) throw InvalidInput("coset table has the wrong number of entries");
  for (std::size_t c = 0; c < degree; ++c) {
    for (std::size_t col = 0; col < 2 * rank; ++col) {
      const Coset d = entries[c * 2 * rank + col];
      if (d >= degree) throw InvalidInput("coset table is incomplete");
      if (entries[d * 2 * rank + inverse_column(col, rank)] != c) {
        throw InvalidInput("coset table inverse columns are inconsistent");
      }
    }
  }
  CosetTable t(rank, degree, std::move(entries));
  if (visit_order(t, 0).size() != degree) throw InvalidInput("coset table action is not transitive");
  return t;
}

std::vector<Coset> CosetTable::generator_permutation(std::size_t g) const {
  std::vector<Coset> perm(degree_);
  for (std::size_t c = 0; c < degree_; ++c) perm[c] = at(static_cast<Coset>(c), g);
  return perm;
}

bool CosetTable::is_standardized() const {
  Coset next = 1;
  for (Coset e : entries_) {
    if (e > next) return false;
    if (e == next) ++next;
  }
  return true;
}

Coset trace_word(const CosetTable& t, Coset start, const Word& w) {
  if (start >= t.degree()) throw InvalidInput("start coset out of range");
  if (w.rank() != t.rank()) throw InvalidInput("word over the wrong alphabet");
  Coset c = start;
  for (Letter l : w.letters()) c = t.image(c, l);
  return c;
}

std::vector<Coset> word_permutation(const CosetTable& t, const Word& w) {
  std::vector<Coset> perm(t.degree());
  for (std::size_t c = 0; c < t.degree(); ++c) perm[c] = trace_word(t, static_cast<Coset>(c), w);
  return perm;
}

bool satisfies_relators(const CosetTable& t, const Presentation& p) {
  if (t.rank() != p.rank()) return false;
  for (const auto& r : p.relators()) {
    for (std::size_t c = 0; c < t.degree(); ++c) {
      if (trace_word(t, static_cast<Coset>(c), r) != c) return false;
    }
  }
  return true;
}

CosetTable standardize(const CosetTable& t, Coset base) {
  if (base >= t.degree()) throw InvalidInput("base coset out of range");
  const std::vector<Coset> order = visit_order(t, base);
  std::vector<Coset> label(t.degree());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<Coset>(i);
  std::vector<Coset> entries(t.entries().size());
  const std::size_t cols = t.columns();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t col = 0; col < cols; ++col) entries[i * cols + col] = label[t.at(order[i], col)];
  }
  return CosetTable::from_entries(t.rank(), t.degree(), std::move(entries));
}

CosetTable canonical_form(const CosetTable& t) {
  CosetTable best = standardize(t, 0);
  for (std::size_t b = 1; b < t.degree(); ++b) {
    CosetTable candidate = standardize(t, static_cast<Coset>(b));
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<Coset> normalizing_cosets(const CosetTable& t) {
  const CosetTable base = standardize(t, 0);
  std::vector<Coset> out;
  for (std::size_t b = 0; b < t.degree(); ++b) {
    if (standardize(t, static_cast<Coset>(b)) == base) out.push_back(static_cast<Coset>(b));
  }
  return out;
}

std::vector<Word> coset_representatives(const CosetTable& t) {
  const std::size_t rank = t.rank();
  std::vector<Word> reps(t.degree());
  std::vector<bool> seen(t.degree(), false);
  std::vector<Coset> queue{0};
  reps[0] = Word(rank);
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Coset c = queue[i];
    for (std::size_t col = 0; col < t.columns(); ++col) {
      const Coset e = t.at(c, col);
      if (seen[e]) continue;
      seen[e] = true;
      const Letter l{static_cast<std::uint32_t>(col % rank), static_cast<std::int8_t>(col < rank ? 1 : -1)};
      reps[e] = word_concat(reps[c], Word(rank, std::span<const Letter>(&l, 1)));
      queue.push_back(e);
    }
  }
  return reps;
}

std::vector<Word> schreier_generators(const CosetTable& t) {
  const std::size_t rank = t.rank();
  const std::vector<Word> reps = coset_representatives(t);
  std::vector<Word> out;
  for (std::size_t c = 0; c < t.degree(); ++c) {
    for (std::size_t g = 0; g < rank; ++g) {
      const Letter l{static_cast<std::uint32_t>(g), 1};
      const Word edge(rank, std::span<const Letter>(&l, 1));
      const Coset e = t.at(static_cast<Coset>(c), g);
      Word s = word_concat(word_concat(reps[c], edge), word_inverse(reps[e]));
      // Tree edges reduce to the identity.
      if (!s.empty()) out.push_back(std::move(s));
    }
  }
  return out;
}

std::string cycle_notation(std::span<const Coset> permutation) {
  std::string out;
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t start = 0; start < permutation.size(); ++start) {
    if (seen[start] || permutation[start] == start) continue;
    out += '(';
    std::size_t c = start;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
      c = permutation[c];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::size_t> cycle_type(std::span<const Coset> permutation) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t start = 0; start < permutation.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t c = start; !seen[c]; c = permutation[c]) {
      seen[c] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

bool is_transitive(std::size_t degree, std::span<const std::vector<Coset>> action) {
  if (degree == 0) return false;
  std::vector<bool> seen(degree, false);
  std::vector<Coset> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  // Orbits of a permutation group on a finite set are closed under forward
  // images alone.
  while (!stack.empty()) {
    const Coset c = stack.back();
    stack.pop_back();
    for (const auto& perm : action) {
      const Coset e = perm[c];
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  return reached == degree;
}

}  // namespace brcov
