#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "graev/freegroup.hpp"
#include "graev/rational.hpp"

namespace graev::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct ReportCase {
  std::vector<std::string> inputs;
  std::string relation;  // "<=", ">=" or "="
  Rat lhs;
  Rat rhs;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> parameters;
  std::vector<ReportCase> cases;
  std::uint64_t seed = 0;

  // Compares lhs to rhs under the relation and records the case.
  void add(std::vector<std::string> inputs, std::string relation, Rat lhs, Rat rhs);
  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
};

nlohmann::ordered_json to_json(const VerificationReport& report);

// One word per line; blank lines and text after '#' are skipped. A parse
// failure throws ParseError carrying the 1-based line and column.
std::vector<ReducedWord> parse_corpus(std::istream& in);
std::vector<ReducedWord> load_corpus(const std::string& path);

// Enumeration cap for brute-force paths, GRAEV_MATCH_CAP if set.
std::size_t match_cap_from_env();

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graev::cli
