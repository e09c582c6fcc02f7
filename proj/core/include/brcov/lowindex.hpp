#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brcov/cosets.hpp"
#include "brcov/words.hpp"

namespace brcov {

/// One conjugacy class of finite-index subgroups, represented by its
/// canonical coset table.
struct SubgroupRecord {
  CosetTable table;
  std::vector<Word> subgroup_generators;
  bool is_normal = false;

  friend bool operator==(const SubgroupRecord&, const SubgroupRecord&) = default;
};

struct SearchOptions {
  /// Worker threads for the backtracking search; 0 or 1 runs inline.
  std::size_t threads = 1;
};

inline constexpr std::size_t kBruteForceMaxDegree = 8;

/// Canonical tables of every conjugacy class of subgroups of exactly the given
/// index, sorted ascending. Sims-style search over standardized partial
/// tables with first-in-class pruning, so no class is produced twice.
[[nodiscard]] std::vector<CosetTable> low_index_tables(const Presentation& p, std::size_t index,
                                                       SearchOptions options = {});

/// low_index_tables with Schreier generators and normality attached.
[[nodiscard]] std::vector<SubgroupRecord> low_index_classes(const Presentation& p, std::size_t index,
                                                            SearchOptions options = {});

/// Number of index-k subgroups: each class contributes [G : N_G(H)].
[[nodiscard]] std::uint64_t subgroup_count(const Presentation& p, std::size_t index, SearchOptions options = {});
[[nodiscard]] std::uint64_t subgroup_count(std::span<const CosetTable> classes);

/// Same contract as low_index_tables, found by running over all tuples of
/// permutations of {0..k-1}. Throws InvalidInput for index > kBruteForceMaxDegree.
[[nodiscard]] std::vector<CosetTable> brute_force_tables(const Presentation& p, std::size_t index);
[[nodiscard]] std::vector<SubgroupRecord> brute_force_classes(const Presentation& p, std::size_t index);

/// Number of index-k subgroups of the free group of the given rank, via
///   N_1 = 1,  N_k = k (k!)^(r-1) - sum_{i<k} ((k-i)!)^(r-1) N_i.
[[nodiscard]] boost::multiprecision::cpp_int hall_count_free(std::size_t rank, std::size_t index);

[[nodiscard]] SubgroupRecord make_subgroup_record(CosetTable canonical);

/// H is normal iff g s g^-1 and g^-1 s g stay in H for every generator g and
/// every Schreier generator s.
[[nodiscard]] bool is_normal_by_conjugates(const CosetTable& t, std::span<const Word> schreier);
/// H is normal iff G acts regularly: rebasing at any coset reproduces the table.
[[nodiscard]] bool is_normal_by_regularity(const CosetTable& t);

}  // namespace brcov
