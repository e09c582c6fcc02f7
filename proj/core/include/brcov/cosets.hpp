#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brcov/words.hpp"

namespace brcov {

using Coset = std::uint32_t;

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Complete, transitive action of the generators on `degree` cosets.
///
/// Entries are stored row-major: coset c occupies columns
/// [g_0 .. g_{r-1}, g_0^-1 .. g_{r-1}^-1], the same order used for scanning
/// during standardization. Comparison is lexicographic on (rank, degree,
/// entries), which is the order canonical_form minimizes over base cosets.
class CosetTable {
 public:
  CosetTable() = default;

  /// `action[g][c]` is the image of coset c under generator g. Every row must
  /// be a permutation of {0..degree-1} and the action must be transitive.
  /// The labelling is kept as given; call standardize() to renumber.
  static CosetTable from_action(std::size_t degree, std::span<const std::vector<Coset>> action);

  /// Row-major entries including inverse columns, validated as above.
  static CosetTable from_entries(std::size_t rank, std::size_t degree, std::vector<Coset> entries);

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t columns() const noexcept { return 2 * rank_; }

  [[nodiscard]] Coset at(Coset c, std::size_t column) const noexcept { return entries_[c * columns() + column]; }
  [[nodiscard]] Coset image(Coset c, Letter l) const noexcept { return at(c, column_of(l, rank_)); }

  [[nodiscard]] std::span<const Coset> entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<Coset> generator_permutation(std::size_t g) const;

  /// Cosets first appear in scan order starting from coset 0.
  [[nodiscard]] bool is_standardized() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend auto operator<=>(const CosetTable&, const CosetTable&) = default;

 private:
  CosetTable(std::size_t rank, std::size_t degree, std::vector<Coset> entries)
      : rank_(rank), degree_(degree), entries_(std::move(entries)) {}

  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  std::vector<Coset> entries_;
};

/// Endpoint of the lift of `w` that starts at sheet `start`.
[[nodiscard]] Coset trace_word(const CosetTable& t, Coset start, const Word& w);

/// Permutation of the cosets induced by `w`.
[[nodiscard]] std::vector<Coset> word_permutation(const CosetTable& t, const Word& w);

/// Every relator traces a closed loop from every coset.
[[nodiscard]] bool satisfies_relators(const CosetTable& t, const Presentation& p);

/// Renumbers cosets in first-visit scan order starting from `base`, so `base`
/// becomes coset 0. The result describes the stabilizer of `base`.
[[nodiscard]] CosetTable standardize(const CosetTable& t, Coset base = 0);

/// Lexicographically least standardized table over all base cosets. Equal
/// canonical forms exactly when the point stabilizers are conjugate.
[[nodiscard]] CosetTable canonical_form(const CosetTable& t);

/// Cosets c whose rebased table equals `t`; there are [N(H) : H] of them.
[[nodiscard]] std::vector<Coset> normalizing_cosets(const CosetTable& t);

/// Representative word for each coset along the standardization spanning tree.
[[nodiscard]] std::vector<Word> coset_representatives(const CosetTable& t);

/// Schreier generators of the subgroup (stabilizer of coset 0): one for each
/// non-tree edge (c, g), reading rep(c) g rep(c g)^-1.
[[nodiscard]] std::vector<Word> schreier_generators(const CosetTable& t);

/// Disjoint cycle notation, fixed points omitted; the identity prints as "()".
[[nodiscard]] std::string cycle_notation(std::span<const Coset> permutation);

/// Cycle lengths in non-increasing order, fixed points included.
[[nodiscard]] std::vector<std::size_t> cycle_type(std::span<const Coset> permutation);

/// Whether the group generated by the given permutations is transitive.
[[nodiscard]] bool is_transitive(std::size_t degree, std::span<const std::vector<Coset>> action);

/// Coset enumeration of G acting on the cosets of <subgroup>.
///
/// HLT strategy: relators are scanned at every live coset with gaps filled
/// by new definitions, deductions and coincidences handled immediately.
/// Throws ResourceExhausted when more than `max_cosets` cosets are alive at
/// once; the enumeration does not certify infinite index.
[[nodiscard]] CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                                      std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace brcov
