#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "brcov/covers.hpp"

namespace brcov {

/// {"degree": k, "action": {"a": [...], ...}}
[[nodiscard]] std::string table_to_json(const CosetTable& t, const Presentation& p);
/// Accepts any complete transitive labelling; the result is standardized.
[[nodiscard]] CosetTable table_from_json(std::string_view json, const Presentation& p);

/// Row-major nested arrays, e.g. [[1,1],[0,2]].
[[nodiscard]] std::string hnf_to_json(const HnfMatrix& m);
[[nodiscard]] HnfMatrix hnf_from_json(std::string_view json);

[[nodiscard]] std::string covering_class_to_json(const CoveringClass& c, const Presentation& p);

/// One classification job and its result, as the CLI emits it.
struct ClassificationReport {
  Presentation presentation;
  Constraints constraints;
  bool up_to = false;
  Classification result;
  std::optional<std::size_t> mod_symmetry;
};

[[nodiscard]] std::string report_to_json(const ClassificationReport& report);
/// Same bytes as report_to_json, written class by class.
void write_report_json(const ClassificationReport& report, std::ostream& out);
/// Rebuilds every class from its action arrays alone (re-canonicalized and
/// re-annotated), so a round trip reproduces report_to_json byte for byte.
[[nodiscard]] ClassificationReport report_from_json(std::string_view json);
[[nodiscard]] std::string report_to_text(const ClassificationReport& report);

[[nodiscard]] std::string_view to_string(LatticeMode mode);
[[nodiscard]] std::optional<LatticeMode> lattice_mode_from_string(std::string_view s);

}  // namespace brcov
