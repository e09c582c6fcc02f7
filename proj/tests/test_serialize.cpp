#include "doctest.h"

#include "corpus.hpp"
#include "json.hpp"

#include "brcov/errors.hpp"
#include "brcov/lattice.hpp"
#include "brcov/lowindex.hpp"
#include "brcov/serialize.hpp"

using namespace brcov;

TEST_CASE("coset tables survive JSON") {
  const Presentation f2 = Presentation::free_group(2);
  for (const auto& t : low_index_tables(f2, 4)) CHECK(table_from_json(table_to_json(t, f2), f2) == t);
  const Presentation z = Presentation::free_group(1);
  const CosetTable t = low_index_tables(z, 3)[0];
  CHECK(table_to_json(t, z) == R"({"degree":3,"action":{"a":[1,2,0]}})");
  CHECK_THROWS_AS((void)table_from_json(R"({"degree":3,"action":{"b":[1,2,0]}})", z), InvalidInput);
  CHECK_THROWS_AS((void)table_from_json(R"({"degree":2,"action":{"a":[0,0]}})", z), InvalidInput);
  CHECK_THROWS_AS((void)table_from_json("not json", z), InvalidInput);
}

TEST_CASE("HNF matrices survive JSON") {
  const HnfMatrix m(2, {1, 1, 0, 2});
  CHECK(hnf_to_json(m) == "[[1,1],[0,2]]");
  CHECK(hnf_from_json(hnf_to_json(m)) == m);
  for (const auto& x : enumerate_sublattices(3, 6)) CHECK(hnf_from_json(hnf_to_json(x)) == x);
  CHECK_THROWS_AS((void)hnf_from_json("[[1,2],[0,2]]"), InvalidInput);
  CHECK_THROWS_AS((void)hnf_from_json("[[1,0]]"), InvalidInput);
}

TEST_CASE("classification reports round trip byte for byte") {
  for (const auto& [name, p] : testcorpus::presentations()) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (bool keep : {false, true}) {
        INFO(name << " k=" << k);
        ClassificationReport report;
        report.presentation = p;
        report.constraints = Constraints::all_branched(p, k);
        report.constraints.keep_excluded = keep;
        report.result = classify_covers(p, report.constraints);
        if (p.rank() == 2 && !keep) report.mod_symmetry = count_mod_coordinate_symmetry(report.result.classes);
        const std::string json = report_to_json(report);
        CHECK(report_to_json(report_from_json(json)) == json);
        CHECK(nlohmann::ordered_json::parse(json).dump(2) + "\n" == json);
      }
    }
  }
}

TEST_CASE("a relabelled report re-canonicalizes to the same bytes") {
  const Presentation f2 = Presentation::free_group(2);
  ClassificationReport report;
  report.presentation = f2;
  report.constraints.degree = 3;
  report.result = classify_covers(f2, report.constraints);
  const std::string json = report_to_json(report);
  auto j = nlohmann::ordered_json::parse(json);
  for (auto& cls : j["classes"]) {
    // swap the labels 0 and 1 in every action
    for (auto& [g, perm] : cls["action"].items()) {
      std::vector<Coset> p = perm.get<std::vector<Coset>>();
      std::vector<Coset> q(p.size());
      auto s = [](Coset x) -> Coset { return x == 0 ? 1 : x == 1 ? 0 : x; };
      for (std::size_t x = 0; x < p.size(); ++x) q[s(static_cast<Coset>(x))] = s(p[x]);
      perm = q;
    }
  }
  CHECK(report_to_json(report_from_json(j.dump())) == json);
}

TEST_CASE("report field layout") {
  const Presentation z2 = Presentation::free_abelian(2);
  ClassificationReport report;
  report.presentation = z2;
  report.constraints = Constraints::all_branched(z2, 16);
  report.result = classify_covers(z2, report.constraints);
  const auto j = nlohmann::ordered_json::parse(report_to_json(report));
  CHECK(j["summary"]["classes"] == 3);
  CHECK(j["summary"]["subgroups"] == 3);
  CHECK(j["lattice_path"] == true);
  const auto& first = j["classes"][0];
  CHECK(first["realizability"] == "split-form");
  CHECK(first["branching"].contains("m1"));
  CHECK(first["cycles"]["a"].get<std::string>().front() == '(');
  CHECK(report_to_text(report).find("classes: 3") != std::string::npos);
}
