#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brcov/cosets.hpp"
#include "brcov/lattice.hpp"
#include "brcov/lowindex.hpp"
#include "brcov/words.hpp"

namespace brcov {

/// Lengths of the cycles a meridian traces on the sheets, non-increasing.
using CycleType = std::vector<std::size_t>;

enum class Realizability {
  unknown,     // no realization criterion is implemented for this group
  split_form,  // Z^n split sublattice: realized by (x_1^d_1, ..., x_n^d_n)
  excluded,    // Z^n non-split sublattice: cannot come from a finite map
};

[[nodiscard]] std::string_view to_string(Realizability r);
[[nodiscard]] std::optional<Realizability> realizability_from_string(std::string_view s);

enum class LatticeMode {
  automatic,  // HNF path iff the presentation is literally the standard Z^n one
  off,        // always run the low-index search
  force,      // treat G as its abelianization Z^rank (relators must have zero exponent sums)
};

struct Constraints {
  std::size_t degree = 1;
  /// Meridians that must act as a non-identity permutation.
  std::vector<std::string> require_branched;
  bool only_normal = false;
  /// Keep classes annotated Realizability::excluded instead of dropping them.
  bool keep_excluded = false;
  LatticeMode lattice = LatticeMode::automatic;

  /// Every declared meridian branched; the default for "D(f) = V" exactly.
  static Constraints all_branched(const Presentation& p, std::size_t degree);
};

/// An equivalence class of degree-k covers branched over the meridian components.
struct CoveringClass {
  CosetTable table;  // canonical
  std::size_t degree = 0;
  bool is_normal = false;
  std::size_t deck_order = 0;
  /// In meridian declaration order.
  std::vector<std::pair<std::string, CycleType>> branching;
  std::optional<std::vector<std::uint64_t>> lattice_label;
  std::optional<HnfMatrix> sublattice;
  Realizability realizability = Realizability::unknown;

  /// Number of subgroups in the conjugacy class, [G : N_G(H)].
  [[nodiscard]] std::size_t class_size() const noexcept { return degree / deck_order; }

  friend bool operator==(const CoveringClass&, const CoveringClass&) = default;
};

struct DeckGroup {
  std::size_t order = 0;
  bool is_normal = false;
  bool transitive = false;
};

struct Classification {
  std::vector<CoveringClass> classes;
  std::uint64_t subgroups = 0;
  std::size_t normal_classes = 0;
  bool lattice_path = false;
};

/// All conjugacy classes of index-k subgroups satisfying `c`, annotated and
/// sorted by canonical table. Throws InvalidInput on unknown meridian names.
[[nodiscard]] Classification classify_covers(const Presentation& p, const Constraints& c, SearchOptions options = {});

/// Cycle type of the meridian's permutation of the sheets.
[[nodiscard]] CycleType branching_data(const CosetTable& t, const Word& meridian);

/// Automorphisms of the G-set, i.e. permutations of the cosets commuting with
/// every generator: one per coset c to which coset 0 can be sent.
[[nodiscard]] DeckGroup deck_group(const CosetTable& t);

/// Same underlying subgroup class. Throws InvalidInput when the two classes
/// come from different presentations (rank or meridian names differ).
[[nodiscard]] bool equivalent(const CoveringClass& x, const CoveringClass& y);

/// Builds the annotated class for any table of a G-action (canonicalized here).
/// `zn_rank` enables the lattice annotations.
[[nodiscard]] CoveringClass describe_class(const Presentation& p, const CosetTable& t,
                                           std::optional<std::size_t> zn_rank);

/// Rank n when `p` is read as Z^n: the standard presentation in any mode, or
/// any presentation under `force`. LatticeMode::off still annotates classes
/// with sublattices; it only turns off the HNF enumeration. Throws
/// InvalidInput when forcing a presentation whose relators are not trivial
/// in Z^rank.
[[nodiscard]] std::optional<std::size_t> lattice_rank(const Presentation& p, LatticeMode mode);

/// Table with generator g relabelled as generator perm[g].
[[nodiscard]] CosetTable permute_generators(const CosetTable& t, std::span<const std::size_t> perm);

/// Number of orbits of `classes` under permutations of the Z^n coordinates.
[[nodiscard]] std::size_t count_mod_coordinate_symmetry(std::span<const CoveringClass> classes);

}  // namespace brcov
