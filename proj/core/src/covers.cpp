#include "brcov/covers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "brcov/errors.hpp"

namespace brcov {

std::string_view to_string(Realizability r) {
  switch (r) {
    case Realizability::split_form:
      return "split-form";
    case Realizability::excluded:
      return "excluded";
    case Realizability::unknown:
      break;
  }
  return "unknown";
}

std::optional<Realizability> realizability_from_string(std::string_view s) {
  if (s == "unknown") return Realizability::unknown;
  if (s == "split-form") return Realizability::split_form;
  if (s == "excluded") return Realizability::excluded;
  return std::nullopt;
}

Constraints Constraints::all_branched(const Presentation& p, std::size_t degree) {
  Constraints c;
  c.degree = degree;
  for (const auto& m : p.meridians()) c.require_branched.push_back(m.name);
  return c;
}

CycleType branching_data(const CosetTable& t, const Word& meridian) {
  return cycle_type(word_permutation(t, meridian));
}

DeckGroup deck_group(const CosetTable& t) {
  const std::size_t k = t.degree();
  constexpr Coset kUnset = std::numeric_limits<Coset>::max();
  std::vector<Coset> phi(k);
  std::vector<Coset> queue;
  std::size_t order = 0;
  for (std::size_t target = 0; target < k; ++target) {
    std::fill(phi.begin(), phi.end(), kUnset);
    queue.assign(1, 0);
    phi[0] = static_cast<Coset>(target);
    bool commutes = true;
    for (std::size_t i = 0; i < queue.size() && commutes; ++i) {
      const Coset u = queue[i];
      for (std::size_t col = 0; col < t.columns(); ++col) {
        const Coset v = t.at(u, col);
        const Coset w = t.at(phi[u], col);
        if (phi[v] == kUnset) {
          phi[v] = w;
          queue.push_back(v);
        } else if (phi[v] != w) {
          commutes = false;
          break;
        }
      }
    }
    if (commutes) ++order;
  }
  return {order, order == k, order == k};
}

bool equivalent(const CoveringClass& x, const CoveringClass& y) {
  auto names = [](const CoveringClass& c) {
    std::vector<std::string> out;
    for (const auto& [name, type] : c.branching) out.push_back(name);
    return out;
  };
  if (x.table.rank() != y.table.rank() || names(x) != names(y)) {
    throw InvalidInput("covering classes come from different presentations");
  }
  if (x.degree != y.degree) return false;
  return canonical_form(x.table) == canonical_form(y.table);
}

std::optional<std::size_t> lattice_rank(const Presentation& p, LatticeMode mode) {
  if (mode != LatticeMode::force) return p.standard_abelian_rank();
  if (p.rank() == 0) throw InvalidInput("the lattice path needs at least one generator");
  for (const auto& r : p.relators()) {
    std::vector<long> exponent(p.rank(), 0);
    for (Letter l : r.letters()) exponent[l.generator] += l.sign;
    if (std::any_of(exponent.begin(), exponent.end(), [](long e) { return e != 0; })) {
      throw InvalidInput("cannot force the lattice path: a relator is nontrivial in the abelianization");
    }
  }
  return p.rank();
}

CoveringClass describe_class(const Presentation& p, const CosetTable& t, std::optional<std::size_t> zn_rank) {
  CoveringClass c;
  c.table = canonical_form(t);
  c.degree = c.table.degree();
  const DeckGroup deck = deck_group(c.table);
  c.deck_order = deck.order;
  c.is_normal = deck.is_normal;
  for (const auto& m : p.meridians()) c.branching.emplace_back(m.name, branching_data(c.table, m.word));
  if (zn_rank) {
    c.sublattice = table_to_sublattice(c.table);
    if (auto label = split_filter(*c.sublattice)) {
      c.lattice_label = label->d;
      c.realizability = Realizability::split_form;
    } else {
      c.realizability = Realizability::excluded;
    }
  }
  return c;
}

Classification classify_covers(const Presentation& p, const Constraints& c, SearchOptions options) {
  if (c.degree < 1) throw InvalidInput("degree must be at least 1");
  std::vector<const Meridian*> required;
  for (const auto& name : c.require_branched) {
    const Meridian* m = p.find_meridian(name);
    if (m == nullptr) throw InvalidInput("unknown meridian '" + name + "'");
    required.push_back(m);
  }
  const std::optional<std::size_t> zn = lattice_rank(p, c.lattice);

  Classification result;
  result.lattice_path = zn.has_value() && c.lattice != LatticeMode::off;
  std::vector<CosetTable> tables;
  if (result.lattice_path) {
    // Non-split sublattices are always excluded, so skip building them
    // unless they are asked for.
    const auto lattices =
        c.keep_excluded ? enumerate_sublattices(*zn, c.degree) : enumerate_split_sublattices(*zn, c.degree);
    for (const auto& m : lattices) tables.push_back(canonical_form(sublattice_to_table(m)));
  } else {
    tables = low_index_tables(p, c.degree, options);
  }

  for (const auto& t : tables) {
    const bool branched = std::all_of(required.begin(), required.end(), [&](const Meridian* m) {
      const auto perm = word_permutation(t, m->word);
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] != i) return true;
      }
      return false;
    });
    if (!branched) continue;
    CoveringClass cls = describe_class(p, t, zn);
    if (c.only_normal && !cls.is_normal) continue;
    if (cls.realizability == Realizability::excluded && !c.keep_excluded) continue;
    result.subgroups += cls.class_size();
    if (cls.is_normal) ++result.normal_classes;
    result.classes.push_back(std::move(cls));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const CoveringClass& a, const CoveringClass& b) { return a.table < b.table; });
  return result;
}

CosetTable permute_generators(const CosetTable& t, std::span<const std::size_t> perm) {
  const std::size_t rank = t.rank();
  if (perm.size() != rank) throw InvalidInput("generator permutation has the wrong length");
  std::vector<std::vector<Coset>> action(rank);
  for (std::size_t g = 0; g < rank; ++g) {
    if (perm[g] >= rank) throw InvalidInput("generator permutation out of range");
    action[perm[g]] = t.generator_permutation(g);
  }
  return standardize(CosetTable::from_action(t.degree(), action), 0);
}

std::size_t count_mod_coordinate_symmetry(std::span<const CoveringClass> classes) {
  std::set<CosetTable> orbits;
  for (const auto& c : classes) {
    std::vector<std::size_t> perm(c.table.rank());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::optional<CosetTable> best;
    do {
      CosetTable candidate = canonical_form(permute_generators(c.table, perm));
      if (!best || candidate < *best) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbits.insert(std::move(*best));
  }
  return orbits.size();
}

}  // namespace brcov
