#include "brcov/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "brcov/errors.hpp"

namespace brcov {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void for_each_diagonal(std::size_t n, std::uint64_t k, std::vector<std::int64_t>& d, bool all_at_least_two,
                       const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (d.size() + 1 == n) {
    if (!all_at_least_two || k >= 2) {
      d.push_back(static_cast<std::int64_t>(k));
      visit(d);
      d.pop_back();
    }
    return;
  }
  for (std::uint64_t x = all_at_least_two ? 2 : 1; x <= k; ++x) {
    if (k % x != 0) continue;
    d.push_back(static_cast<std::int64_t>(x));
    for_each_diagonal(n, k / x, d, all_at_least_two, visit);
    d.pop_back();
  }
}

}  // namespace

HnfMatrix::HnfMatrix(std::size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw InvalidInput("lattice rank must be at least 1");
  if (entries_.size() != n_ * n_) throw InvalidInput("HNF matrix must be n x n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) <= 0) throw InvalidInput("HNF diagonal entries must be positive");
    for (std::size_t j = 0; j < n_; ++j) {
      if (j < i && at(i, j) != 0) throw InvalidInput("HNF matrix must be upper triangular");
      if (j > i && (at(i, j) < 0 || at(i, j) >= at(j, j))) {
        throw InvalidInput("HNF entries above a pivot must lie in [0, pivot)");
      }
    }
  }
}

HnfMatrix HnfMatrix::diagonal(std::span<const std::int64_t> d) {
  std::vector<std::int64_t> entries(d.size() * d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) entries[i * d.size() + i] = d[i];
  return HnfMatrix(d.size(), std::move(entries));
}

std::uint64_t HnfMatrix::index() const noexcept {
  std::uint64_t k = 1;
  for (std::size_t i = 0; i < n_; ++i) k *= static_cast<std::uint64_t>(at(i, i));
  return k;
}

bool HnfMatrix::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

HnfMatrix hermite_normal_form(std::size_t n, std::span<const std::vector<std::int64_t>> vectors) {
  std::vector<std::vector<std::int64_t>> pool;
  for (const auto& v : vectors) {
    if (v.size() != n) throw InvalidInput("lattice vector has the wrong length");
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) pool.push_back(v);
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    // Euclid down column j until a single row is nonzero there.
    while (true) {
      std::size_t pivot = pool.size();
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (pool[r][j] != 0 && (pivot == pool.size() || std::llabs(pool[r][j]) < std::llabs(pool[pivot][j]))) {
          pivot = r;
        }
      }
      if (pivot == pool.size()) throw InvalidInput("vectors do not span a full-rank sublattice");
      bool reduced = true;
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (r == pivot || pool[r][j] == 0) continue;
        const std::int64_t q = pool[r][j] / pool[pivot][j];
        for (std::size_t c = j; c < n; ++c) pool[r][c] -= q * pool[pivot][c];
        if (pool[r][j] != 0) reduced = false;
      }
      if (reduced) {
        auto row = std::move(pool[pivot]);
        pool.erase(pool.begin() + static_cast<long>(pivot));
        if (row[j] < 0) {
          for (auto& x : row) x = -x;
        }
        basis.push_back(std::move(row));
        break;
      }
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const auto& v) { return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }); }),
               pool.end());
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t q = floor_div(basis[i][j], basis[j][j]);
      if (q == 0) continue;
      for (std::size_t c = j; c < n; ++c) basis[i][c] -= q * basis[j][c];
    }
  }
  std::vector<std::int64_t> entries;
  for (const auto& row : basis) entries.insert(entries.end(), row.begin(), row.end());
  return HnfMatrix(n, std::move(entries));
}

void for_each_sublattice(std::size_t n, std::uint64_t k, const std::function<void(const HnfMatrix&)>& visit) {
  if (n < 1 || k < 1) throw InvalidInput("rank and index must be at least 1");
  std::vector<std::int64_t> d;
  for_each_diagonal(n, k, d, false, [&](const std::vector<std::int64_t>& diag) {
    // Free slots (i, j), i < j, each ranging over [0, d_j).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    std::vector<std::int64_t> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = diag[i];
    while (true) {
      visit(HnfMatrix(n, entries));
      // Odometer over the free slots, last slot fastest.
      std::size_t s = slots.size();
      while (s > 0) {
        auto [i, j] = slots[s - 1];
        if (++entries[i * n + j] < diag[j]) break;
        entries[i * n + j] = 0;
        --s;
      }
      if (s == 0) break;
    }
  });
}

std::vector<HnfMatrix> enumerate_sublattices(std::size_t n, std::uint64_t k) {
  std::vector<HnfMatrix> out;
  for_each_sublattice(n, k, [&](const HnfMatrix& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HnfMatrix> enumerate_split_sublattices(std::size_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw InvalidInput("rank and index must be at least 1");
  std::vector<HnfMatrix> out;
  std::vector<std::int64_t> d;
  for_each_diagonal(n, k, d, false, [&](const std::vector<std::int64_t>& diag) { out.push_back(HnfMatrix::diagonal(diag)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SplitLabel> split_filter(const HnfMatrix& m) {
  if (!m.is_diagonal()) return std::nullopt;
  SplitLabel label;
  label.admissible = true;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    label.d.push_back(static_cast<std::uint64_t>(m.at(i, i)));
    if (m.at(i, i) < 2) label.admissible = false;
  }
  return label;
}

std::uint64_t count_branched_classes(std::size_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw InvalidInput("rank and index must be at least 1");
  std::uint64_t count = 0;
  std::vector<std::int64_t> d;
  for_each_diagonal(n, k, d, true, [&](const std::vector<std::int64_t>&) { ++count; });
  return count;
}

CosetTable sublattice_to_table(const HnfMatrix& m) {
  const std::size_t n = m.rank();
  const std::uint64_t k = m.index();
  // Coset of v is encoded in mixed radix over the diagonal after reduction.
  auto reduce = [&](std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t q = floor_div(v[i], m.at(i, i));
      if (q == 0) continue;
      for (std::size_t j = i; j < n; ++j) v[j] -= q * m.at(i, j);
    }
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) code = code * static_cast<std::uint64_t>(m.at(i, i)) + static_cast<std::uint64_t>(v[i]);
    return static_cast<Coset>(code);
  };
  std::vector<std::vector<Coset>> action(n, std::vector<Coset>(k));
  std::vector<std::int64_t> v(n, 0);
  for (std::uint64_t code = 0; code < k; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(m.at(i, i)));
      rest /= static_cast<std::uint64_t>(m.at(i, i));
    }
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::int64_t> w = v;
      ++w[g];
      reduce(w);
      action[g][code] = encode(w);
    }
  }
  return standardize(CosetTable::from_action(k, action), 0);
}

HnfMatrix table_to_sublattice(const CosetTable& t) {
  const std::size_t n = t.rank();
  std::vector<std::vector<std::int64_t>> vectors;
  for (const auto& s : schreier_generators(t)) {
    std::vector<std::int64_t> v(n, 0);
    for (Letter l : s.letters()) v[l.generator] += l.sign;
    vectors.push_back(std::move(v));
  }
  HnfMatrix m = hermite_normal_form(n, vectors);
  if (m.index() != t.degree() || sublattice_to_table(m) != standardize(t, 0)) {
    throw InvalidInput("coset table is not a Z^n action");
  }
  return m;
}

}  // namespace brcov
