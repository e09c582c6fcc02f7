#include "brcov/serialize.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

#include "brcov/errors.hpp"

namespace brcov {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

Json action_json(const CosetTable& t, const Presentation& p) {
  Json action = Json::object();
  for (std::size_t g = 0; g < t.rank(); ++g) action[p.generator_names()[g]] = t.generator_permutation(g);
  return action;
}

CosetTable table_from_action_json(const Json& degree, const Json& action, const Presentation& p) {
  if (!degree.is_number_unsigned() || !action.is_object()) throw InvalidInput("table JSON needs degree and action");
  const auto k = degree.get<std::size_t>();
  std::vector<std::vector<Coset>> perms(p.rank());
  for (std::size_t g = 0; g < p.rank(); ++g) {
    const auto& name = p.generator_names()[g];
    if (!action.contains(name)) throw InvalidInput("table JSON is missing generator '" + name + "'");
    perms[g] = action[name].get<std::vector<Coset>>();
  }
  if (action.size() != p.rank()) throw InvalidInput("table JSON has unknown generators");
  return standardize(CosetTable::from_action(k, perms), 0);
}

Json hnf_json(const HnfMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.rank(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json class_json(const CoveringClass& c, const Presentation& p) {
  Json j;
  j["degree"] = c.degree;
  j["normal"] = c.is_normal;
  j["deck_order"] = c.deck_order;
  j["class_size"] = c.class_size();
  Json branching = Json::object();
  for (const auto& [name, type] : c.branching) branching[name] = type;
  j["branching"] = std::move(branching);
  if (c.lattice_label) j["lattice_label"] = *c.lattice_label;
  if (c.sublattice) j["sublattice"] = hnf_json(*c.sublattice);
  j["realizability"] = std::string(to_string(c.realizability));
  j["action"] = action_json(c.table, p);
  Json cycles = Json::object();
  for (std::size_t g = 0; g < c.table.rank(); ++g) {
    cycles[p.generator_names()[g]] = cycle_notation(c.table.generator_permutation(g));
  }
  j["cycles"] = std::move(cycles);
  return j;
}

Json constraints_json(const Constraints& c) {
  Json j;
  j["require_branched"] = c.require_branched;
  j["only_normal"] = c.only_normal;
  j["keep_excluded"] = c.keep_excluded;
  j["lattice"] = std::string(to_string(c.lattice));
  return j;
}

}  // namespace

std::string_view to_string(LatticeMode mode) {
  switch (mode) {
    case LatticeMode::off:
      return "off";
    case LatticeMode::force:
      return "force";
    case LatticeMode::automatic:
      break;
  }
  return "auto";
}

std::optional<LatticeMode> lattice_mode_from_string(std::string_view s) {
  if (s == "auto") return LatticeMode::automatic;
  if (s == "off") return LatticeMode::off;
  if (s == "force") return LatticeMode::force;
  return std::nullopt;
}

std::string table_to_json(const CosetTable& t, const Presentation& p) {
  Json j;
  j["degree"] = t.degree();
  j["action"] = action_json(t, p);
  return j.dump();
}

CosetTable table_from_json(std::string_view json, const Presentation& p) {
  const Json j = parse_json(json);
  if (!j.is_object() || !j.contains("degree") || !j.contains("action")) {
    throw InvalidInput("table JSON needs degree and action");
  }
  try {
    return table_from_action_json(j["degree"], j["action"], p);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed table JSON: ") + e.what());
  }
}

std::string hnf_to_json(const HnfMatrix& m) { return hnf_json(m).dump(); }

HnfMatrix hnf_from_json(std::string_view json) {
  const Json j = parse_json(json);
  if (!j.is_array() || j.empty()) throw InvalidInput("HNF JSON must be a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<std::int64_t> entries;
  try {
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != n) throw InvalidInput("HNF JSON must be square");
      for (const auto& x : row) entries.push_back(x.get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed HNF JSON: ") + e.what());
  }
  return HnfMatrix(n, std::move(entries));
}

std::string covering_class_to_json(const CoveringClass& c, const Presentation& p) { return class_json(c, p).dump(); }

void write_report_json(const ClassificationReport& report, std::ostream& out) {
  Json j;
  j["presentation"] = report.presentation.to_dsl();
  j["degree"] = report.constraints.degree;
  j["up_to"] = report.up_to;
  j["constraints"] = constraints_json(report.constraints);
  j["lattice_path"] = report.result.lattice_path;
  j["classes"] = Json::array();
  Json summary;
  summary["classes"] = report.result.classes.size();
  summary["subgroups"] = report.result.subgroups;
  summary["normal_classes"] = report.result.normal_classes;
  if (report.mod_symmetry) summary["mod_symmetry"] = *report.mod_symmetry;
  j["summary"] = std::move(summary);

  // Classes are dumped one at a time and spliced into the empty array, which
  // gives the same bytes as dumping the whole document at once.
  const std::string skeleton = j.dump(2);
  const std::string_view marker = "\"classes\": []";
  const std::size_t at = skeleton.find(marker);
  out << std::string_view(skeleton).substr(0, at + marker.size() - 1);
  const auto& classes = report.result.classes;
  if (!classes.empty()) {
    out << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const std::string body = class_json(classes[i], report.presentation).dump(2);
      out << "    ";
      for (char ch : body) {
        out << ch;
        if (ch == '\n') out << "    ";
      }
      out << (i + 1 < classes.size() ? ",\n" : "\n  ");
    }
  }
  out << std::string_view(skeleton).substr(at + marker.size() - 1) << '\n';
}

std::string report_to_json(const ClassificationReport& report) {
  std::ostringstream out;
  write_report_json(report, out);
  return out.str();
}

ClassificationReport report_from_json(std::string_view json) {
  const Json j = parse_json(json);
  try {
    ClassificationReport report;
    report.presentation = parse_presentation(j.at("presentation").get<std::string>());
    const auto& cj = j.at("constraints");
    report.constraints.degree = j.at("degree").get<std::size_t>();
    report.constraints.require_branched = cj.at("require_branched").get<std::vector<std::string>>();
    report.constraints.only_normal = cj.at("only_normal").get<bool>();
    report.constraints.keep_excluded = cj.at("keep_excluded").get<bool>();
    const auto mode = lattice_mode_from_string(cj.at("lattice").get<std::string>());
    if (!mode) throw InvalidInput("unknown lattice mode");
    report.constraints.lattice = *mode;
    report.up_to = j.at("up_to").get<bool>();
    report.result.lattice_path = j.at("lattice_path").get<bool>();

    const auto zn = lattice_rank(report.presentation, report.constraints.lattice);
    for (const auto& cls : j.at("classes")) {
      const CosetTable t = table_from_action_json(cls.at("degree"), cls.at("action"), report.presentation);
      CoveringClass c = describe_class(report.presentation, t, zn);
      report.result.subgroups += c.class_size();
      if (c.is_normal) ++report.result.normal_classes;
      report.result.classes.push_back(std::move(c));
    }
    std::stable_sort(report.result.classes.begin(), report.result.classes.end(),
                     [](const CoveringClass& a, const CoveringClass& b) {
                       if (a.degree != b.degree) return a.degree < b.degree;
                       return a.table < b.table;
                     });
    const auto& summary = j.at("summary");
    if (summary.contains("mod_symmetry")) report.mod_symmetry = count_mod_coordinate_symmetry(report.result.classes);
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed classification JSON: ") + e.what());
  }
}

std::string report_to_text(const ClassificationReport& report) {
  std::ostringstream out;
  const auto& p = report.presentation;
  out << "presentation: " << p.to_dsl() << '\n';
  out << "degree: " << (report.up_to ? "<= " : "") << report.constraints.degree << '\n';
  out << "path: " << (report.result.lattice_path ? "lattice (HNF)" : "low-index search") << '\n';
  std::size_t i = 0;
  for (const auto& c : report.result.classes) {
    out << '\n' << "class " << ++i << ": degree " << c.degree << (c.is_normal ? ", normal" : ", not normal")
        << ", deck order " << c.deck_order << ", class size " << c.class_size() << ", " << to_string(c.realizability)
        << '\n';
    if (c.lattice_label) {
      out << "  lattice label: (";
      for (std::size_t d = 0; d < c.lattice_label->size(); ++d) out << (d ? "," : "") << (*c.lattice_label)[d];
      out << ")\n";
    }
    for (const auto& [name, type] : c.branching) {
      out << "  " << name << ": [";
      for (std::size_t d = 0; d < type.size(); ++d) out << (d ? "," : "") << type[d];
      out << "]\n";
    }
    for (std::size_t g = 0; g < c.table.rank(); ++g) {
      out << "  " << p.generator_names()[g] << " -> " << cycle_notation(c.table.generator_permutation(g)) << '\n';
    }
  }
  out << '\n'
      << "classes: " << report.result.classes.size() << ", subgroups: " << report.result.subgroups
      << ", normal classes: " << report.result.normal_classes << '\n';
  if (report.mod_symmetry) out << "classes up to coordinate symmetry: " << *report.mod_symmetry << '\n';
  return out.str();
}

}  // namespace brcov
