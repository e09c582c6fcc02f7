#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "brcov/cosets.hpp"

namespace brcov {

/// Upper-triangular basis (rows) of a full-rank sublattice of Z^n in Hermite
/// normal form: positive diagonal and 0 <= m(i,j) < m(j,j) for i < j. The
/// index of the sublattice is the product of the diagonal.
class HnfMatrix {
 public:
  HnfMatrix() = default;
  /// Row-major n x n entries; throws InvalidInput unless already in HNF.
  HnfMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static HnfMatrix diagonal(std::span<const std::int64_t> d);

  [[nodiscard]] std::size_t rank() const noexcept { return n_; }
  [[nodiscard]] std::int64_t at(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  [[nodiscard]] std::span<const std::int64_t> entries() const noexcept { return entries_; }
  [[nodiscard]] std::uint64_t index() const noexcept;
  [[nodiscard]] bool is_diagonal() const noexcept;

  friend bool operator==(const HnfMatrix&, const HnfMatrix&) = default;
  friend auto operator<=>(const HnfMatrix&, const HnfMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Diagonal (d_1, ..., d_n) of a split sublattice d_1 Z + ... + d_n Z.
struct SplitLabel {
  std::vector<std::uint64_t> d;
  /// Every d_i >= 2, i.e. the cover is branched over every coordinate hyperplane.
  bool admissible = false;

  friend bool operator==(const SplitLabel&, const SplitLabel&) = default;
};

/// HNF of the lattice spanned by integer vectors of length n. Throws
/// InvalidInput if they do not span a full-rank sublattice.
[[nodiscard]] HnfMatrix hermite_normal_form(std::size_t n, std::span<const std::vector<std::int64_t>> vectors);

/// Calls `visit` once per index-k sublattice of Z^n, in a fixed order
/// (diagonals lexicographically, then off-diagonal entries).
void for_each_sublattice(std::size_t n, std::uint64_t k, const std::function<void(const HnfMatrix&)>& visit);
[[nodiscard]] std::vector<HnfMatrix> enumerate_sublattices(std::size_t n, std::uint64_t k);
/// Only the diagonal ones.
[[nodiscard]] std::vector<HnfMatrix> enumerate_split_sublattices(std::size_t n, std::uint64_t k);

[[nodiscard]] std::optional<SplitLabel> split_filter(const HnfMatrix& m);

/// Ordered tuples (d_1, ..., d_n) with every d_i >= 2 and product k.
[[nodiscard]] std::uint64_t count_branched_classes(std::size_t n, std::uint64_t k);

/// Standardized table of Z^n acting on Z^n / L.
[[nodiscard]] CosetTable sublattice_to_table(const HnfMatrix& m);

/// Inverse of sublattice_to_table for tables of a Z^n action: the stabilizer
/// of coset 0, read off from abelianized Schreier generators.
[[nodiscard]] HnfMatrix table_to_sublattice(const CosetTable& t);

}  // namespace brcov
