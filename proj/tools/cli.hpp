#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brcov::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kEmptyResult = 2,
  kResourceExhausted = 3,
};

/// One classification job as given on the command line.
struct JobSpec {
  std::optional<std::string> inline_text;
  std::optional<std::string> file;
  std::size_t degree = 0;
  std::string require_branched = "all";
  bool only_normal = false;
  bool up_to = false;
  bool mod_symmetry = false;
  bool all_subgroups = false;
  std::string lattice = "auto";
  std::string format = "json";
  std::size_t max_cosets = 1'000'000;
  std::size_t threads = 1;
  bool expect_nonempty = false;
};

struct CountSpec {
  std::optional<std::size_t> free_rank;
  std::optional<std::string> inline_text;
  std::optional<std::string> file;
  std::size_t degree = 0;
  std::string format = "text";
  std::size_t threads = 1;
};

int cmd_classify(const JobSpec& job, std::ostream& out, std::ostream& err);
int cmd_count(const CountSpec& spec, std::ostream& out, std::ostream& err);
/// Runs the built-in reproduction checks; one PASS/FAIL line each.
int cmd_corpus(std::size_t threads, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"classify", "--degree", "2", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brcov::cli
