#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brcov/covers.hpp"
#include "brcov/lattice.hpp"
#include "brcov/lowindex.hpp"
#include "cli.hpp"

namespace brcov::cli {
namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS  " : "FAIL  ") << std::left << std::setw(48) << name << detail << '\n';
    if (!ok) ++failures_;
  }

  [[nodiscard]] int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

std::string labels_of(const Classification& c) {
  std::ostringstream s;
  for (const auto& cls : c.classes) {
    s << '(';
    if (cls.lattice_label) {
      for (std::size_t i = 0; i < cls.lattice_label->size(); ++i) s << (i ? "," : "") << (*cls.lattice_label)[i];
    }
    s << ')';
  }
  return s.str();
}

std::vector<std::size_t> primes_up_to(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) primes.push_back(p);
  }
  return primes;
}

}  // namespace

int cmd_corpus(std::size_t threads, std::ostream& out, std::ostream& /*err*/) {
  Report report(out);
  const SearchOptions options{threads};

  {
    const Presentation z2 = Presentation::free_abelian(2);
    const Classification c = classify_covers(z2, Constraints::all_branched(z2, 16), options);
    std::set<std::vector<std::uint64_t>> labels;
    for (const auto& cls : c.classes) {
      if (cls.lattice_label) labels.insert(*cls.lattice_label);
    }
    const std::set<std::vector<std::uint64_t>> expected{{4, 4}, {8, 2}, {2, 8}};
    report.check("Z^2 degree 16, both branched: 3 classes", c.classes.size() == 3 && labels == expected,
                 std::to_string(c.classes.size()) + " classes " + labels_of(c));
    const std::size_t mod = count_mod_coordinate_symmetry(c.classes);
    report.check("Z^2 degree 16 up to coordinate swap: 2", mod == 2, std::to_string(mod));
    const std::uint64_t bound = subgroup_count(z2, 16, options);
    report.check("Z^2 degree 16 classes <= index-16 subgroups", c.classes.size() <= bound,
                 std::to_string(c.classes.size()) + " <= " + std::to_string(bound));
  }

  {
    const Presentation z = Presentation::free_abelian(1);
    bool ok = true;
    for (std::size_t k = 1; k <= 20; ++k) {
      Constraints unconstrained;
      unconstrained.degree = k;
      const Classification all = classify_covers(z, unconstrained, options);
      ok = ok && all.classes.size() == 1 && all.classes[0].is_normal && all.classes[0].deck_order == k;
      if (k >= 2) {
        const Classification branched = classify_covers(z, Constraints::all_branched(z, k), options);
        ok = ok && branched.classes.size() == 1 && branched.classes[0].branching[0].second == CycleType{k};
      }
    }
    report.check("Z degree 1..20: one class, cyclic deck group", ok, ok ? "20 degrees" : "mismatch");
  }

  for (std::size_t p : primes_up_to(97)) {
    bool empty = true;
    for (std::size_t n = 2; n <= 4; ++n) {
      const Presentation zn = Presentation::free_abelian(n);
      empty = empty && classify_covers(zn, Constraints::all_branched(zn, p), options).classes.empty();
    }
    report.check("Z^n (n=2,3,4) prime degree " + std::to_string(p) + ": none", empty, empty ? "0 classes" : "nonempty");
  }

  {
    const std::vector<std::pair<std::string, Presentation>> corpus{
        {"Z", Presentation::free_abelian(1)},
        {"Z^2", Presentation::free_abelian(2)},
        {"Z^3", Presentation::free_abelian(3)},
        {"F2", Presentation::free_group(2)},
        {"F3", Presentation::free_group(3)},
        {"Z/2", parse_presentation("gens a; rels a^2; meridians m=a")},
        {"Klein bottle", parse_presentation("gens a,b; rels a b a^-1 b; meridians m1=a, m2=b")},
    };
    for (const auto& [name, p] : corpus) {
      Constraints c;
      c.degree = 2;
      c.keep_excluded = true;
      const Classification result = classify_covers(p, c, options);
      bool ok = true;
      for (const auto& cls : result.classes) ok = ok && cls.is_normal && cls.deck_order == 2;
      report.check("index 2 is normal: " + name, ok, std::to_string(result.classes.size()) + " classes");
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 1; r <= 3; ++r) {
      const Presentation f = Presentation::free_group(r);
      for (std::size_t k = 1; k <= 5; ++k) {
        const auto hall = hall_count_free(r, k);
        const std::uint64_t counted = subgroup_count(f, k, options);
        if (hall != counted) {
          ok = false;
          detail += " r=" + std::to_string(r) + ",k=" + std::to_string(k);
        }
      }
    }
    report.check("Hall count = enumerated count (r<=3, k<=5)", ok, ok ? "15 cases" : "mismatch" + detail);
  }

  out << (report.failures() == 0 ? "all checks passed\n" : std::to_string(report.failures()) + " check(s) failed\n");
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace brcov::cli
