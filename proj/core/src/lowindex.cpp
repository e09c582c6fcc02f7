#include "brcov/lowindex.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "brcov/errors.hpp"

namespace brcov {
namespace {

constexpr Coset kUnset = std::numeric_limits<Coset>::max();

// Cyclic rotations of every relator and its inverse, bucketed by first letter.
// Tracing bucket[x] from coset c checks every relator loop passing through the
// edge (c, x) in either direction.
class RelatorLoops {
 public:
  explicit RelatorLoops(const Presentation& p) : by_first_(2 * p.rank()) {
    std::set<std::vector<std::size_t>> seen;
    for (const auto& r : p.relators()) {
      const Word reduced = cyclically_reduce(r);
      if (reduced.empty()) continue;
      for (const Word& w : {reduced, word_inverse(reduced)}) {
        std::vector<std::size_t> cols;
        for (Letter l : w.letters()) cols.push_back(column_of(l, p.rank()));
        for (std::size_t shift = 0; shift < cols.size(); ++shift) {
          std::vector<std::size_t> rotated(cols.begin() + static_cast<long>(shift), cols.end());
          rotated.insert(rotated.end(), cols.begin(), cols.begin() + static_cast<long>(shift));
          if (seen.insert(rotated).second) by_first_[rotated.front()].push_back(std::move(rotated));
        }
      }
    }
  }

  [[nodiscard]] const std::vector<std::vector<std::size_t>>& starting_with(std::size_t column) const {
    return by_first_[column];
  }

 private:
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;
};

struct PartialTable {
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::size_t count = 1;      // cosets in use
  std::size_t next_slot = 0;  // every slot before this one is defined
  std::vector<Coset> entries;

  Coset at(std::size_t c, std::size_t col) const { return entries[c * columns + col]; }
  Coset& at(std::size_t c, std::size_t col) { return entries[c * columns + col]; }
};

class Search {
 public:
  Search(const Presentation& p, std::size_t index) : loops_(p), rank_(p.rank()), index_(index) {}

  PartialTable root() const {
    PartialTable t;
    t.rank = rank_;
    t.columns = 2 * rank_;
    t.entries.assign(index_ * t.columns, kUnset);
    return t;
  }

  // Children of `t` that survive deduction and pruning; complete canonical
  // tables of the right degree go to `out` instead.
  void expand(const PartialTable& t, std::vector<PartialTable>& children, std::vector<CosetTable>& out) const {
    const std::size_t total = t.count * t.columns;
    std::size_t slot = t.next_slot;
    while (slot < total && t.entries[slot] != kUnset) ++slot;
    if (slot == total) {
      if (t.count == index_) {
        // Trailing rows were never used; the table is exactly count x columns.
        std::vector<Coset> entries(t.entries.begin(), t.entries.begin() + static_cast<long>(total));
        out.push_back(CosetTable::from_entries(rank_, t.count, std::move(entries)));
      }
      return;
    }
    const std::size_t c = slot / t.columns;
    const std::size_t x = slot % t.columns;
    const std::size_t inv = inverse_column(x, rank_);
    auto try_child = [&](Coset d, bool fresh) {
      PartialTable child = t;
      child.next_slot = slot;
      if (fresh) ++child.count;
      if (assign(child, c, x, d) && maybe_canonical(child)) children.push_back(std::move(child));
    };
    for (std::size_t d = 0; d < t.count; ++d) {
      if (t.at(d, inv) == kUnset) try_child(static_cast<Coset>(d), false);
    }
    if (t.count < index_) try_child(static_cast<Coset>(t.count), true);
  }

  void run(PartialTable t, std::vector<CosetTable>& out) const {
    std::vector<PartialTable> stack;
    stack.push_back(std::move(t));
    std::vector<PartialTable> children;
    while (!stack.empty()) {
      PartialTable node = std::move(stack.back());
      stack.pop_back();
      children.clear();
      expand(node, children, out);
      for (auto& child : children) stack.push_back(std::move(child));
    }
  }

 private:
  // Defines (c, x) = d and closes under relator deductions. False on conflict.
  bool assign(PartialTable& t, std::size_t c, std::size_t x, Coset d) const {
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    set(t, c, x, d, pending);
    while (!pending.empty()) {
      auto [pc, px] = pending.back();
      pending.pop_back();
      for (const auto& loop : loops_.starting_with(px)) {
        if (!trace(t, pc, loop, pending)) return false;
      }
    }
    return true;
  }

  void set(PartialTable& t, std::size_t c, std::size_t x, Coset d,
           std::vector<std::pair<std::size_t, std::size_t>>& pending) const {
    t.at(c, x) = d;
    t.at(d, inverse_column(x, rank_)) = static_cast<Coset>(c);
    pending.emplace_back(c, x);
  }

  // Traces `loop` from c, which must come back to c.
  bool trace(PartialTable& t, std::size_t c, const std::vector<std::size_t>& loop,
             std::vector<std::pair<std::size_t, std::size_t>>& pending) const {
    const std::size_t len = loop.size();
    std::size_t f = c;
    std::size_t i = 0;
    while (i < len) {
      const Coset e = t.at(f, loop[i]);
      if (e == kUnset) break;
      f = e;
      ++i;
    }
    if (i == len) return f == c;
    std::size_t b = c;
    std::size_t j = len;
    while (j > i) {
      const Coset e = t.at(b, inverse_column(loop[j - 1], rank_));
      if (e == kUnset) break;
      b = e;
      --j;
    }
    if (j == i) return false;
    if (j == i + 1) set(t, f, loop[i], static_cast<Coset>(b), pending);
    return true;
  }

  // False when renumbering from some other base gives a lexicographically
  // smaller table on the determined prefix: every completion then has a
  // smaller conjugate and is not the class representative.
  bool maybe_canonical(const PartialTable& t) const {
    std::vector<Coset> label(t.count);
    std::vector<Coset> order(t.count);
    for (std::size_t b = 1; b < t.count; ++b) {
      std::fill(label.begin(), label.end(), kUnset);
      label[b] = 0;
      order[0] = static_cast<Coset>(b);
      std::size_t numbered = 1;
      bool decided = false;
      for (std::size_t row = 0; row < numbered && !decided; ++row) {
        for (std::size_t col = 0; col < t.columns; ++col) {
          const Coset e = t.at(order[row], col);
          const Coset cur = t.at(row, col);
          if (e == kUnset || cur == kUnset) {
            decided = true;
            break;
          }
          Coset le = label[e];
          if (le == kUnset) {
            le = static_cast<Coset>(numbered);
            label[e] = le;
            order[numbered++] = e;
          }
          if (le < cur) return false;
          if (le > cur) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  RelatorLoops loops_;
  std::size_t rank_;
  std::size_t index_;
};

}  // namespace

std::vector<CosetTable> low_index_tables(const Presentation& p, std::size_t index, SearchOptions options) {
  if (index < 1) throw InvalidInput("index must be at least 1");
  std::vector<CosetTable> out;
  if (p.rank() == 0) {
    if (index == 1) out.push_back(CosetTable::from_entries(0, 1, {}));
    return out;
  }
  const Search search(p, index);
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    search.run(search.root(), out);
  } else {
    // Breadth-first until there is enough independent work to share out.
    std::vector<PartialTable> frontier{search.root()};
    std::vector<PartialTable> next;
    while (!frontier.empty() && frontier.size() < 16 * threads) {
      next.clear();
      for (const auto& node : frontier) search.expand(node, next, out);
      frontier.swap(next);
    }
    std::vector<std::vector<CosetTable>> found(threads);
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) search.run(frontier[i], found[w]);
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& part : found) {
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupRecord> low_index_classes(const Presentation& p, std::size_t index, SearchOptions options) {
  std::vector<SubgroupRecord> records;
  for (auto& t : low_index_tables(p, index, options)) records.push_back(make_subgroup_record(std::move(t)));
  return records;
}

std::uint64_t subgroup_count(std::span<const CosetTable> classes) {
  std::uint64_t total = 0;
  for (const auto& t : classes) total += t.degree() / normalizing_cosets(t).size();
  return total;
}

std::uint64_t subgroup_count(const Presentation& p, std::size_t index, SearchOptions options) {
  const auto tables = low_index_tables(p, index, options);
  return subgroup_count(tables);
}

SubgroupRecord make_subgroup_record(CosetTable canonical) {
  SubgroupRecord record;
  record.subgroup_generators = schreier_generators(canonical);
  record.is_normal = is_normal_by_conjugates(canonical, record.subgroup_generators);
  record.table = std::move(canonical);
  return record;
}

bool is_normal_by_conjugates(const CosetTable& t, std::span<const Word> schreier) {
  const std::size_t rank = t.rank();
  for (std::uint32_t g = 0; g < rank; ++g) {
    const Word x = Word::generator(rank, g);
    const Word xi = word_inverse(x);
    for (const auto& s : schreier) {
      if (trace_word(t, 0, word_concat(word_concat(x, s), xi)) != 0) return false;
      if (trace_word(t, 0, word_concat(word_concat(xi, s), x)) != 0) return false;
    }
  }
  return true;
}

bool is_normal_by_regularity(const CosetTable& t) { return normalizing_cosets(t).size() == t.degree(); }

boost::multiprecision::cpp_int hall_count_free(std::size_t rank, std::size_t index) {
  using boost::multiprecision::cpp_int;
  if (rank < 1 || index < 1) throw InvalidInput("rank and index must be at least 1");
  std::vector<cpp_int> factorial_power(index + 1);  // (m!)^(rank-1)
  cpp_int factorial = 1;
  for (std::size_t m = 0; m <= index; ++m) {
    if (m > 0) factorial *= m;
    factorial_power[m] = boost::multiprecision::pow(factorial, static_cast<unsigned>(rank - 1));
  }
  std::vector<cpp_int> n(index + 1);
  for (std::size_t k = 1; k <= index; ++k) {
    cpp_int value = cpp_int(k) * factorial_power[k];
    for (std::size_t i = 1; i < k; ++i) value -= factorial_power[k - i] * n[i];
    n[k] = value;
  }
  return n[index];
}

}  // namespace brcov
