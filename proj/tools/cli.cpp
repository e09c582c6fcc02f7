#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "brcov/covers.hpp"
#include "brcov/errors.hpp"
#include "brcov/lattice.hpp"
#include "brcov/lowindex.hpp"
#include "brcov/serialize.hpp"

namespace brcov::cli {
namespace {

Presentation load_presentation(const std::optional<std::string>& inline_text, const std::optional<std::string>& file) {
  if (inline_text.has_value() == file.has_value()) {
    throw InvalidInput("give exactly one of --inline or --file");
  }
  if (inline_text) return parse_presentation(*inline_text);
  std::ifstream in(*file);
  if (!in) throw InvalidInput("cannot read '" + *file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) names.push_back(item);
  }
  return names;
}

std::vector<std::string> required_meridians(const Presentation& p, const std::string& spec) {
  if (spec == "all") {
    std::vector<std::string> names;
    for (const auto& m : p.meridians()) names.push_back(m.name);
    return names;
  }
  if (spec == "none") return {};
  return split_names(spec);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceExhausted& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceExhausted;
  }
}

}  // namespace

int cmd_classify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (job.degree < 1) throw InvalidInput("--degree must be at least 1");
    if (job.threads < 1) throw InvalidInput("--threads must be at least 1");
    if (job.format != "json" && job.format != "text") throw InvalidInput("--format must be json or text");
    const auto mode = lattice_mode_from_string(job.lattice);
    if (!mode) throw InvalidInput("--lattice must be auto, off or force");
    if (job.degree > job.max_cosets) {
      throw ResourceExhausted("degree " + std::to_string(job.degree) + " exceeds --max-cosets " +
                              std::to_string(job.max_cosets));
    }

    ClassificationReport report;
    report.presentation = load_presentation(job.inline_text, job.file);
    report.constraints.degree = job.degree;
    report.constraints.require_branched = required_meridians(report.presentation, job.require_branched);
    report.constraints.only_normal = job.only_normal;
    report.constraints.keep_excluded = job.all_subgroups;
    report.constraints.lattice = *mode;
    report.up_to = job.up_to;

    const SearchOptions options{job.threads};
    for (std::size_t d = job.up_to ? 1 : job.degree; d <= job.degree; ++d) {
      Constraints c = report.constraints;
      c.degree = d;
      Classification part = classify_covers(report.presentation, c, options);
      report.result.lattice_path = part.lattice_path;
      report.result.subgroups += part.subgroups;
      report.result.normal_classes += part.normal_classes;
      report.result.classes.insert(report.result.classes.end(), std::make_move_iterator(part.classes.begin()),
                                   std::make_move_iterator(part.classes.end()));
    }
    if (job.mod_symmetry) {
      if (!lattice_rank(report.presentation, *mode)) {
        throw InvalidInput("--mod-symmetry needs a Z^n presentation (or --lattice force)");
      }
      report.mod_symmetry = count_mod_coordinate_symmetry(report.result.classes);
    }

    if (job.format == "json") {
      write_report_json(report, out);
    } else {
      out << report_to_text(report);
    }
    if (job.expect_nonempty && report.result.classes.empty()) return static_cast<int>(kEmptyResult);
    return static_cast<int>(kOk);
  });
}

int cmd_count(const CountSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.degree < 1) throw InvalidInput("--degree must be at least 1");
    if (spec.format != "json" && spec.format != "text") throw InvalidInput("--format must be json or text");
    Presentation p;
    if (spec.free_rank) {
      if (spec.inline_text || spec.file) throw InvalidInput("--free-rank excludes --inline and --file");
      if (*spec.free_rank < 1) throw InvalidInput("--free-rank must be at least 1");
      p = Presentation::free_group(*spec.free_rank);
    } else {
      p = load_presentation(spec.inline_text, spec.file);
    }
    const auto tables = low_index_tables(p, spec.degree, SearchOptions{spec.threads});
    const std::uint64_t subgroups = subgroup_count(tables);

    nlohmann::ordered_json j;
    j["presentation"] = p.to_dsl();
    j["degree"] = spec.degree;
    j["classes"] = tables.size();
    j["subgroups"] = subgroups;
    std::string hall_text;
    bool agrees = true;
    if (spec.free_rank) {
      const auto hall = hall_count_free(*spec.free_rank, spec.degree);
      hall_text = hall.str();
      agrees = hall == subgroups;
      j["hall"] = hall_text;
      j["agrees"] = agrees;
    }
    if (spec.format == "json") {
      out << j.dump(2) << '\n';
    } else {
      out << "classes: " << tables.size() << '\n' << "subgroups: " << subgroups << '\n';
      if (spec.free_rank) out << "hall: " << hall_text << (agrees ? " (agrees)" : " (MISMATCH)") << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify finite branched covers by conjugacy classes of finite-index subgroups", "brcov"};
  app.require_subcommand(1);

  JobSpec job;
  auto* classify = app.add_subcommand("classify", "Classify covers of a given degree");
  classify->add_option("--inline", job.inline_text, "Presentation text (DSL or JSON)");
  classify->add_option("--file", job.file, "Presentation file (DSL or JSON)");
  classify->add_option("--degree", job.degree, "Degree k of the covers")->required();
  classify->add_option("--require-branched", job.require_branched, "all | none | comma-separated meridian names");
  classify->add_flag("--only-normal", job.only_normal, "Keep regular (Galois) covers only");
  classify->add_flag("--up-to", job.up_to, "All degrees 1..k instead of exactly k");
  classify->add_flag("--mod-symmetry", job.mod_symmetry, "Also count classes up to Z^n coordinate permutations");
  classify->add_flag("--all-subgroups", job.all_subgroups, "Keep Z^n classes whose realizability is excluded");
  classify->add_option("--lattice", job.lattice, "auto | off | force");
  classify->add_option("--format", job.format, "json | text");
  classify->add_option("--max-cosets", job.max_cosets, "Bound on the number of cosets");
  classify->add_option("--threads", job.threads, "Worker threads for the subgroup search");
  classify->add_flag("--expect-nonempty", job.expect_nonempty, "Exit 2 when no class is found");

  CountSpec count;
  auto* count_cmd = app.add_subcommand("count", "Count index-k subgroups and conjugacy classes");
  count_cmd->add_option("--free-rank", count.free_rank, "Use the free group of this rank");
  count_cmd->add_option("--inline", count.inline_text, "Presentation text (DSL or JSON)");
  count_cmd->add_option("--file", count.file, "Presentation file (DSL or JSON)");
  count_cmd->add_option("--degree", count.degree, "Index k")->required();
  count_cmd->add_option("--format", count.format, "json | text");
  count_cmd->add_option("--threads", count.threads, "Worker threads for the subgroup search");

  std::size_t corpus_threads = 1;
  auto* corpus = app.add_subcommand("corpus", "Run the built-in reproduction checks");
  corpus->add_option("--threads", corpus_threads, "Worker threads for the subgroup search");

  std::optional<std::string> tc_inline;
  std::optional<std::string> tc_file;
  std::string tc_subgroup;
  std::size_t tc_max = kDefaultMaxCosets;
  auto* cosets = app.add_subcommand("cosets", "Todd-Coxeter enumeration of the cosets of a subgroup");
  cosets->add_option("--inline", tc_inline, "Presentation text (DSL or JSON)");
  cosets->add_option("--file", tc_file, "Presentation file (DSL or JSON)");
  cosets->add_option("--subgroup", tc_subgroup, "Comma-separated subgroup generators")->required();
  cosets->add_option("--max-cosets", tc_max, "Bound on live cosets");

  std::size_t lat_rank = 0;
  std::uint64_t lat_index = 0;
  bool lat_split = false;
  auto* sublattices = app.add_subcommand("sublattices", "List index-k sublattices of Z^n in Hermite normal form");
  sublattices->add_option("--rank", lat_rank, "n")->required();
  sublattices->add_option("--degree", lat_index, "Index k")->required();
  sublattices->add_flag("--split-only", lat_split, "Diagonal sublattices only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (classify->parsed()) return cmd_classify(job, out, err);
  if (count_cmd->parsed()) return cmd_count(count, out, err);
  if (corpus->parsed()) return cmd_corpus(corpus_threads, out, err);
  if (cosets->parsed()) {
    return guarded(err, [&] {
      const Presentation p = load_presentation(tc_inline, tc_file);
      const auto subgroup = parse_word_list(p, tc_subgroup);
      const CosetTable t = todd_coxeter(p, subgroup, tc_max);
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(table_to_json(t, p));
      nlohmann::ordered_json cycles;
      for (std::size_t g = 0; g < p.rank(); ++g) {
        cycles[p.generator_names()[g]] = cycle_notation(t.generator_permutation(g));
      }
      j["cycles"] = cycles;
      out << j.dump(2) << '\n';
      return static_cast<int>(kOk);
    });
  }
  return guarded(err, [&] {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    auto emit = [&](const HnfMatrix& m) {
      nlohmann::ordered_json entry;
      entry["hnf"] = nlohmann::ordered_json::parse(hnf_to_json(m));
      if (auto label = split_filter(m)) {
        entry["split"] = label->d;
        entry["admissible"] = label->admissible;
      } else {
        entry["split"] = nullptr;
      }
      list.push_back(std::move(entry));
    };
    const auto mats = lat_split ? enumerate_split_sublattices(lat_rank, lat_index)
                                : enumerate_sublattices(lat_rank, lat_index);
    for (const auto& m : mats) emit(m);
    out << list.dump(2) << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace brcov::cli
