#include <algorithm>
#include <numeric>
#include <set>

#include "brcov/errors.hpp"
#include "brcov/lowindex.hpp"

// Exhaustive oracle for the low-index search. It deliberately shares nothing
// with the backtracking code: tuples of permutations are enumerated directly
// and classes are separated by a local minimum-relabelling key.

namespace brcov {
namespace {

using Perm = std::vector<Coset>;

Perm inverse_of(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Coset>(i);
  return inv;
}

// One permutation per cycle type, built from consecutive blocks. Every
// simultaneous-conjugacy orbit of tuples contains a tuple whose first entry
// is one of these.
void cycle_type_representatives(std::size_t k, std::size_t largest, std::vector<std::size_t>& parts,
                                std::vector<Perm>& out) {
  const std::size_t used = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (used == k) {
    Perm p(k);
    std::size_t start = 0;
    for (std::size_t len : parts) {
      for (std::size_t i = 0; i < len; ++i) p[start + i] = static_cast<Coset>(start + (i + 1) % len);
      start += len;
    }
    out.push_back(std::move(p));
    return;
  }
  for (std::size_t len = std::min(largest, k - used); len >= 1; --len) {
    parts.push_back(len);
    cycle_type_representatives(k, len, parts, out);
    parts.pop_back();
  }
}

class Enumeration {
 public:
  Enumeration(const Presentation& p, std::size_t k) : k_(k), rank_(p.rank()), assigned_(p.rank()) {
    Perm id(k);
    std::iota(id.begin(), id.end(), Coset{0});
    do {
      all_.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    std::vector<std::size_t> parts;
    cycle_type_representatives(k, k, parts, first_);
    for (const auto& perm : all_) all_inverse_.push_back(inverse_of(perm));
    for (const auto& perm : first_) first_inverse_.push_back(inverse_of(perm));

    // Check each relator as soon as its last generator is assigned.
    due_.resize(rank_);
    for (const auto& r : p.relators()) {
      if (r.empty()) continue;
      std::uint32_t top = 0;
      for (Letter l : r.letters()) top = std::max(top, l.generator);
      due_[top].push_back(r);
    }
  }

  std::set<std::vector<Coset>> run() {
    assign(0);
    return std::move(keys_);
  }

 private:
  void assign(std::size_t g) {
    if (g == rank_) {
      record();
      return;
    }
    const auto& choices = g == 0 ? first_ : all_;
    const auto& inverses = g == 0 ? first_inverse_ : all_inverse_;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      assigned_[g] = {&choices[i], &inverses[i]};
      if (relators_hold(g)) assign(g + 1);
    }
  }

  bool relators_hold(std::size_t g) const {
    for (const auto& r : due_[g]) {
      for (std::size_t start = 0; start < k_; ++start) {
        Coset c = static_cast<Coset>(start);
        for (Letter l : r.letters()) {
          const auto& [perm, inv] = assigned_[l.generator];
          c = l.sign > 0 ? (*perm)[c] : (*inv)[c];
        }
        if (c != start) return false;
      }
    }
    return true;
  }

  void record() {
    // Transitivity by flood fill over forward images.
    std::vector<bool> seen(k_, false);
    std::vector<Coset> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Coset c = stack.back();
      stack.pop_back();
      for (const auto& [perm, inv] : assigned_) {
        const Coset e = (*perm)[c];
        if (!seen[e]) {
          seen[e] = true;
          ++reached;
          stack.push_back(e);
        }
      }
    }
    if (reached != k_) return;
    keys_.insert(minimal_relabelling());
  }

  Coset image(Coset c, std::size_t col) const {
    const auto& [perm, inv] = assigned_[col % rank_];
    return col < rank_ ? (*perm)[c] : (*inv)[c];
  }

  // Smallest row-major table (generator columns then inverse columns) over
  // all base points, numbering points by first appearance.
  std::vector<Coset> minimal_relabelling() const {
    const std::size_t cols = 2 * rank_;
    std::vector<Coset> best;
    std::vector<Coset> current(k_ * cols);
    std::vector<Coset> label(k_);
    std::vector<Coset> order(k_);
    for (std::size_t base = 0; base < k_; ++base) {
      std::fill(label.begin(), label.end(), Coset{~0u});
      label[base] = 0;
      order[0] = static_cast<Coset>(base);
      std::size_t numbered = 1;
      bool worse = false;
      bool better = best.empty();
      for (std::size_t row = 0; row < k_ && !worse; ++row) {
        for (std::size_t col = 0; col < cols; ++col) {
          const Coset e = image(order[row], col);
          if (label[e] == Coset{~0u}) {
            label[e] = static_cast<Coset>(numbered);
            order[numbered++] = e;
          }
          const std::size_t at = row * cols + col;
          current[at] = label[e];
          if (!better) {
            if (current[at] > best[at]) {
              worse = true;
              break;
            }
            if (current[at] < best[at]) better = true;
          }
        }
      }
      if (!worse && better) best = current;
    }
    return best;
  }

  std::size_t k_;
  std::size_t rank_;
  std::vector<Perm> all_;
  std::vector<Perm> all_inverse_;
  std::vector<Perm> first_;
  std::vector<Perm> first_inverse_;
  std::vector<std::vector<Word>> due_;
  std::vector<std::pair<const Perm*, const Perm*>> assigned_;
  std::set<std::vector<Coset>> keys_;
};

}  // namespace

std::vector<CosetTable> brute_force_tables(const Presentation& p, std::size_t index) {
  if (index < 1) throw InvalidInput("index must be at least 1");
  if (index > kBruteForceMaxDegree) {
    throw InvalidInput("brute force is limited to index " + std::to_string(kBruteForceMaxDegree));
  }
  std::vector<CosetTable> out;
  if (p.rank() == 0) {
    if (index == 1) out.push_back(CosetTable::from_entries(0, 1, {}));
    return out;
  }
  for (auto key : Enumeration(p, index).run()) {
    out.push_back(CosetTable::from_entries(p.rank(), index, std::move(key)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupRecord> brute_force_classes(const Presentation& p, std::size_t index) {
  std::vector<SubgroupRecord> records;
  for (auto& t : brute_force_tables(p, index)) records.push_back(make_subgroup_record(std::move(t)));
  return records;
}

}  // namespace brcov
