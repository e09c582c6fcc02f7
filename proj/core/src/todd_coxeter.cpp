#include <cstdint>
#include <limits>
#include <vector>

#include "brcov/cosets.hpp"
#include "brcov/errors.hpp"

namespace brcov {
namespace {

constexpr std::int64_t kNone = -1;

class Enumerator {
 public:
  Enumerator(std::size_t rank, std::size_t max_cosets)
      : rank_(rank), columns_(2 * rank), max_cosets_(max_cosets) {
    new_coset();
  }

  void scan_and_fill(std::int64_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::int64_t f = alpha;
    std::int64_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // letters [i, j) still unscanned
    while (true) {
      while (i < j && entry(f, w[i]) != kNone) f = entry(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inv(w[j - 1])) != kNone) {
        b = entry(b, inv(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      define(f, w[i]);
    }
  }

  void run(const std::vector<std::vector<std::size_t>>& relators,
           const std::vector<std::vector<std::size_t>>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (std::int64_t alpha = 0; alpha < static_cast<std::int64_t>(parent_.size()); ++alpha) {
      for (const auto& r : relators) {
        if (!alive(alpha)) break;
        scan_and_fill(alpha, r);
      }
      if (!alive(alpha)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        if (entry(alpha, x) == kNone) define(alpha, x);
      }
    }
  }

  CosetTable table() {
    std::vector<std::int64_t> label(parent_.size(), kNone);
    std::vector<std::int64_t> live;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(parent_.size()); ++c) {
      if (alive(c)) {
        label[c] = static_cast<std::int64_t>(live.size());
        live.push_back(c);
      }
    }
    std::vector<Coset> entries(live.size() * columns_);
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t x = 0; x < columns_; ++x) {
        entries[i * columns_ + x] = static_cast<Coset>(label[find(entry(live[i], x))]);
      }
    }
    return standardize(CosetTable::from_entries(rank_, live.size(), std::move(entries)), 0);
  }

 private:
  std::size_t inv(std::size_t x) const { return inverse_column(x, rank_); }
  std::int64_t& entry(std::int64_t c, std::size_t x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }
  bool alive(std::int64_t c) const { return parent_[c] == c; }

  std::int64_t new_coset() {
    if (live_ >= max_cosets_) {
      throw ResourceExhausted("coset enumeration exceeded " + std::to_string(max_cosets_) + " live cosets");
    }
    const auto c = static_cast<std::int64_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, kNone);
    ++live_;
    return c;
  }

  void define(std::int64_t c, std::size_t x) {
    const std::int64_t d = new_coset();
    set(c, x, d);
  }

  void set(std::int64_t c, std::size_t x, std::int64_t d) {
    entry(c, x) = d;
    entry(d, inv(x)) = c;
  }

  std::int64_t find(std::int64_t c) {
    std::int64_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::int64_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int64_t a, std::int64_t b, std::vector<std::int64_t>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::int64_t gamma = queue[i];
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::int64_t delta = entry(gamma, x);
        if (delta == kNone) continue;
        entry(delta, inv(x)) = kNone;
        const std::int64_t mu = find(gamma);
        const std::int64_t nu = find(delta);
        if (entry(mu, x) != kNone) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inv(x)) != kNone) {
          merge(mu, entry(nu, inv(x)), queue);
        } else {
          set(mu, x, nu);
        }
      }
    }
  }

  std::size_t rank_;
  std::size_t columns_;
  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> table_;
};

std::vector<std::size_t> columns_of(const Word& w) {
  std::vector<std::size_t> cols;
  cols.reserve(w.length());
  for (Letter l : w.letters()) cols.push_back(column_of(l, w.rank()));
  return cols;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup, std::size_t max_cosets) {
  if (max_cosets < 1) throw InvalidInput("max_cosets must be at least 1");
  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relators()) {
    const Word c = cyclically_reduce(r);
    if (!c.empty()) relators.push_back(columns_of(c));
  }
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& w : subgroup) {
    if (w.rank() != p.rank()) throw InvalidInput("subgroup generator over the wrong alphabet");
    gens.push_back(columns_of(w));
  }
  Enumerator e(p.rank(), max_cosets);
  e.run(relators, gens);
  return e.table();
}

}  // namespace brcov
