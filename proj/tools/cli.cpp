#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "graev/errors.hpp"
#include "graev/graev_metric.hpp"
#include "graev/matching.hpp"
#include "graev/sampling.hpp"
#include "graev/scale.hpp"
#include "graev/tower.hpp"
#include "graev/word_io.hpp"

namespace graev::cli {

void VerificationReport::add(std::vector<std::string> inputs, std::string relation, Rat lhs,
                             Rat rhs) {
  bool pass = false;
  if (relation == "<=")
    pass = lhs <= rhs;
  else if (relation == ">=")
    pass = lhs >= rhs;
  else if (relation == "=")
    pass = lhs == rhs;
  else
    throw std::invalid_argument("unknown relation '" + relation + "'");
  cases.push_back({std::move(inputs), std::move(relation), std::move(lhs), std::move(rhs), pass});
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) { return c.pass; }));
}

namespace {

// Suite-specific summary lines (min distance and the like), kept in order.
using Notes = std::vector<std::pair<std::string, std::string>>;

nlohmann::ordered_json report_json(const VerificationReport& report, const Notes& notes) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.parameters) j["parameters"][k] = v;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    j["cases"].push_back({{"inputs", c.inputs},
                          {"relation", c.relation},
                          {"lhs", c.lhs.str()},
                          {"rhs", c.rhs.str()},
                          {"pass", c.pass}});
  }
  nlohmann::ordered_json summary{
      {"total", report.cases.size()}, {"passed", report.passed()}, {"failed", report.failed()}};
  for (const auto& [k, v] : notes) summary[k] = v;
  j["summary"] = summary;
  j["seed"] = report.seed;
  return j;
}

void print_report(std::ostream& out, const VerificationReport& report, const Notes& notes) {
  out << "suite " << report.suite << '\n';
  for (const auto& [k, v] : report.parameters) out << "param " << k << ' ' << v << '\n';
  out << "seed " << report.seed << '\n';
  for (const auto& [k, v] : notes) out << k << ' ' << v << '\n';
  for (const auto& c : report.cases) {
    if (c.pass) continue;
    out << "FAIL";
    for (const auto& in : c.inputs) out << " | " << in;
    out << " : " << c.lhs << ' ' << c.relation << ' ' << c.rhs << '\n';
  }
  out << "total " << report.cases.size() << " passed " << report.passed() << " failed "
      << report.failed() << '\n';
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Scale scale_from_flag(const std::string& flag) {
  if (flag == "trivial") return trivial_scale();
  if (flag == "weighted") return weighted_scale();
  if (flag.starts_with("file:")) return load_scale_file(flag.substr(5));
  throw std::invalid_argument("unknown scale '" + flag +
                              "' (expected trivial, weighted or file:<path>)");
}

ReducedWord reduced(const std::string& text) { return reduce(parse_word(text)); }

std::string level_tag(std::size_t n) { return "n=" + std::to_string(n); }

// ---- subcommand bodies ----

struct NormArgs {
  std::string word;
  std::string scale;
  std::size_t budget = 1;
  std::string method = "dp";
  bool json = false;
  bool witness = false;
};

int cmd_norm(const NormArgs& a, std::ostream& out) {
  ReducedWord w = reduced(a.word);
  if (a.scale.empty()) {
    NormResult r = a.method == "bruteforce" ? graev_norm_bruteforce(w, match_cap_from_env())
                                            : graev_norm_dp_witness(w);
    if (a.json) {
      nlohmann::ordered_json j{{"value", r.value.str()},
                               {"witness", to_string(r.witness)},
                               {"reduced_input", to_string(w)}};
      out << j.dump(2) << '\n';
      return kOk;
    }
    out << r.value << '\n';
    if (a.witness) out << "witness " << to_string(r.witness) << '\n';
    return kOk;
  }
  if (a.method != "dp") throw std::invalid_argument("--method applies only without --scale");
  Scale scale = scale_from_flag(a.scale);
  BoundedNorm b = norm_bounds(w, scale, a.budget);
  if (a.json) {
    nlohmann::ordered_json j{{"lower", b.lower.str()},
                             {"upper", b.upper.str()},
                             {"witness", to_string(b.upper_match)},
                             {"witness_word", to_string(b.upper_word)},
                             {"reduced_input", to_string(w)},
                             {"scale", scale.name},
                             {"budget", a.budget}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "lower " << b.lower << " upper " << b.upper << '\n';
  out << "witness " << to_string(b.upper_word) << " match " << to_string(b.upper_match) << '\n';
  return kOk;
}

struct DistArgs {
  std::string u;
  std::string v;
  std::string scale;
  std::size_t budget = 1;
  bool json = false;
  bool witness = false;
};

int cmd_dist(const DistArgs& a, std::ostream& out) {
  ReducedWord u = reduced(a.u);
  ReducedWord v = reduced(a.v);
  nlohmann::ordered_json inputs{to_string(u), to_string(v)};
  if (a.scale.empty()) {
    NormResult left = graev_norm_dp_witness(multiply(invert(u), v));
    NormResult inv = graev_norm_dp_witness(multiply(u, invert(v)));
    Rat value = left.value + inv.value;
    if (a.json) {
      nlohmann::ordered_json j{
          {"value", value.str()},
          {"witness", {{"left", to_string(left.witness)}, {"inverted", to_string(inv.witness)}}},
          {"reduced_input", inputs}};
      out << j.dump(2) << '\n';
      return kOk;
    }
    out << value << '\n';
    if (a.witness) {
      out << "witness left " << to_string(left.witness) << '\n';
      out << "witness inverted " << to_string(inv.witness) << '\n';
    }
    return kOk;
  }
  Scale scale = scale_from_flag(a.scale);
  DistanceBounds b = scale_distance_bounds(u, v, scale, a.budget);
  if (a.json) {
    nlohmann::ordered_json j{{"lower", b.bi_lower().str()},
                             {"upper", b.bi_upper().str()},
                             {"witness",
                              {{"left", to_string(b.left.upper_match)},
                               {"inverted", to_string(b.inverted.upper_match)}}},
                             {"reduced_input", inputs},
                             {"scale", scale.name},
                             {"budget", a.budget}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "lower " << b.bi_lower() << " upper " << b.bi_upper() << '\n';
  if (a.witness) {
    out << "witness left " << to_string(b.left.upper_word) << " match "
        << to_string(b.left.upper_match) << '\n';
    out << "witness inverted " << to_string(b.inverted.upper_word) << " match "
        << to_string(b.inverted.upper_match) << '\n';
  }
  return kOk;
}

int cmd_matches(std::size_t len, bool count_only, std::ostream& out) {
  if (count_only) {
    out << count_matches(len) << '\n';
    return kOk;
  }
  std::size_t cap = match_cap_from_env();
  if (len > cap)
    throw ResourceLimitError("matches: length " + std::to_string(len) +
                             " exceeds the enumeration cap " + std::to_string(cap) +
                             " (raise GRAEV_MATCH_CAP)");
  for_each_match(len, [&](const Match& m) { out << to_string(m) << '\n'; });
  return kOk;
}

// ---- verification suites ----

struct VerifyArgs {
  std::string suite;
  std::size_t level = 1;
  std::string corpus;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t max_len = 4;
  std::string scale = "weighted";
  bool json = false;
};

std::vector<ReducedWord> dedup(std::vector<ReducedWord> words) {
  std::set<ReducedWord> seen;
  std::vector<ReducedWord> out;
  for (auto& w : words)
    if (seen.insert(w).second) out.push_back(std::move(w));
  return out;
}

void require_corpus_depth(const std::vector<ReducedWord>& corpus, std::size_t n) {
  for (const auto& w : corpus)
    if (w.max_depth() > n)
      throw std::invalid_argument("corpus word " + to_string(w) + " has depth " +
                                  std::to_string(w.max_depth()) + " > level " +
                                  std::to_string(n));
}

Notes suite_discreteness(const VerifyArgs& a, VerificationReport& report) {
  Level level{a.level};
  Rat bound = Rat::pow2_neg(a.level);
  std::vector<std::pair<ReducedWord, ReducedWord>> pairs;
  if (!a.corpus.empty()) {
    auto corpus = dedup(load_corpus(a.corpus));
    require_corpus_depth(corpus, a.level);
    report.parameters["corpus"] = a.corpus;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = i + 1; j < corpus.size(); ++j) pairs.emplace_back(corpus[i], corpus[j]);
  } else if (a.level <= 1) {
    // All reduced words of length <= 2 over points with coordinates in {0,1,2}.
    auto corpus = all_reduced_words(signed_letters(points_up_to_depth(a.level, 2)), 2);
    report.parameters["corpus"] = "exhaustive";
    report.parameters["max_len"] = "2";
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = i + 1; j < corpus.size(); ++j) pairs.emplace_back(corpus[i], corpus[j]);
  } else {
    WordSampler sampler({points_up_to_depth(a.level, 2), a.max_len}, a.seed);
    report.parameters["corpus"] = "random";
    report.parameters["max_len"] = std::to_string(a.max_len);
    report.parameters["samples"] = std::to_string(a.samples);
    for (std::size_t i = 0; i < a.samples; ++i) pairs.push_back(sampler.next_distinct_pair());
  }

  std::optional<Rat> min;
  std::string attained = "none";
  for (const auto& [u, v] : pairs) {
    Rat d = graev_bidistance(u, v);
    if (!min || d < *min) {
      min = d;
      attained = to_string(u) + " | " + to_string(v);
    }
    report.add({to_string(u), to_string(v), level_tag(level.n)}, ">=", d, bound);
  }
  return {{"bound", bound.str()},
          {"min", min ? min->str() : std::string("none")},
          {"attained", attained}};
}

Notes suite_lipschitz(const VerifyArgs& a, VerificationReport& report) {
  Level level{a.level};
  Scale scale = scale_from_flag(a.scale);
  report.parameters["scale"] = scale.name;
  WordSampler sampler({points_up_to_depth(a.level + 1, 2), a.max_len}, a.seed);

  std::vector<ReducedWord> corpus;
  if (!a.corpus.empty()) {
    corpus = dedup(load_corpus(a.corpus));
    report.parameters["corpus"] = a.corpus;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        auto r = check_lipschitz_distance(corpus[i], corpus[j], level);
        report.add({to_string(corpus[i]), to_string(corpus[j]), level_tag(a.level)}, "<=",
                   r.projected, r.original);
      }
  } else {
    report.parameters["corpus"] = "random";
    report.parameters["max_len"] = std::to_string(a.max_len);
    report.parameters["samples"] = std::to_string(a.samples);
    for (std::size_t i = 0; i < a.samples; ++i) {
      auto [u, v] = sampler.next_distinct_pair();
      auto r = check_lipschitz_distance(u, v, level);
      report.add({to_string(u), to_string(v), level_tag(a.level)}, "<=", r.projected, r.original);
    }
  }

  // Witness-level checks: a pre-reduced word with a match, projected letterwise.
  std::size_t witnesses = corpus.empty() ? a.samples : corpus.size();
  for (std::size_t i = 0; i < witnesses; ++i) {
    Word w = corpus.empty() ? sampler.next_raw(1 + sampler.rng().below(a.max_len + 2))
                            : Word(corpus[i]);
    Match theta = random_match(sampler.rng(), w.size());
    auto r = check_lipschitz_witness(w, theta, scale, level);
    report.add({to_string(w), to_string(theta), level_tag(a.level)}, "<=", r.projected,
               r.original);
  }
  return {};
}

Notes suite_extension(const VerifyArgs& a, VerificationReport& report) {
  Level level{a.level};
  Scale scale = scale_from_flag(a.scale);
  report.parameters["scale"] = scale.name;
  report.parameters["points"] = "depth<=" + std::to_string(a.level + 1) + ",coord<=2";
  std::vector<Letter> letters = signed_letters(points_up_to_depth(a.level + 1, 2));
  letters.push_back(Letter::identity());
  auto grid = default_r_grid();

  // (1) pi_n fixes e and commutes with inversion.
  for (const auto& x : letters)
    report.add({"cond1", to_string(x), level_tag(a.level)}, "=",
               letter_distance(x.inverse().truncate(a.level), x.truncate(a.level).inverse()),
               Rat(0));
  report.add({"cond1", "e", level_tag(a.level)}, "=",
             letter_distance(Letter::identity().truncate(a.level), Letter::identity()), Rat(0));
  // (2) pi_n is 1-Lipschitz on letters.
  for (const auto& x : letters)
    for (const auto& y : letters)
      report.add({"cond2", to_string(x), to_string(y), level_tag(a.level)}, "<=",
                 letter_distance(x.truncate(a.level), y.truncate(a.level)), letter_distance(x, y));
  // (3) the scale does not grow under pi_n.
  for (const auto& x : letters)
    for (const auto& r : grid)
      report.add({"cond3", to_string(x), "r=" + r.str(), level_tag(a.level)}, "<=",
                 scale(x.truncate(a.level), r), scale(x, r));

  ExtensionReport lib = check_extension_conditions(level, scale, letters, grid);
  return {{"library_violations", std::to_string(lib.violations.size())}};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerificationReport report;
  report.suite = a.suite;
  report.seed = a.seed;
  report.parameters["level"] = std::to_string(a.level);
  Notes notes;
  if (a.suite == "discreteness")
    notes = suite_discreteness(a, report);
  else if (a.suite == "lipschitz")
    notes = suite_lipschitz(a, report);
  else if (a.suite == "extension")
    notes = suite_extension(a, report);
  else
    throw std::invalid_argument("unknown suite '" + a.suite + "'");

  if (a.json)
    out << report_json(report, notes).dump(2) << '\n';
  else
    print_report(out, report, notes);
  bool library_ok = std::none_of(notes.begin(), notes.end(), [](const auto& kv) {
    return kv.first == "library_violations" && kv.second != "0";
  });
  return report.failed() == 0 && library_ok ? kOk : kFailed;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) { return report_json(report, {}); }

std::vector<ReducedWord> parse_corpus(std::istream& in) {
  std::vector<ReducedWord> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    if (trim(body).empty()) continue;
    // Strip only the right side so columns still match the file.
    std::size_t lead = body.find_first_not_of(" \t");
    std::string text = trim(body);
    try {
      words.push_back(reduce(parse_word(text)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no,
                       e.column() + lead);
    }
  }
  return words;
}

std::vector<ReducedWord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus file '" + path + "'");
  try {
    return parse_corpus(in);
  } catch (const ParseError& e) {
    throw ParseError(path + " " + e.what(), e.line(), e.column());
  }
}

std::size_t match_cap_from_env() {
  const char* raw = std::getenv("GRAEV_MATCH_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultMatchCap;
  std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      s.size() > 9)
    throw std::invalid_argument("GRAEV_MATCH_CAP must be a nonnegative integer, got '" + s + "'");
  return std::stoul(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Graev metrics, scale norms and tower checks on free groups"};
  app.name("graev");
  app.require_subcommand(1);

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "Graev norm, or scale-norm bounds with --scale");
  // A vector option would split "[1,2]" into a list, so extra terms of an
  // unquoted word are collected from the leftovers.
  norm_cmd->add_option("word", norm.word, "word, e.g. \"[1] [2,1]^-1\"")->required();
  norm_cmd->allow_extras();
  norm_cmd->add_option("--scale", norm.scale, "trivial | weighted | file:<path>");
  norm_cmd->add_option("--budget", norm.budget, "insertion budget for the upper bound");
  norm_cmd->add_option("--method", norm.method, "dp | bruteforce")
      ->check(CLI::IsMember({"dp", "bruteforce"}));
  norm_cmd->add_flag("--json", norm.json);
  norm_cmd->add_flag("--witness", norm.witness, "also print a minimizing match");

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "bidistance d(u,v) + d(u^-1,v^-1)");
  dist_cmd->add_option("u", dist.u)->required();
  dist_cmd->add_option("v", dist.v)->required();
  dist_cmd->add_option("--scale", dist.scale, "trivial | weighted | file:<path>");
  dist_cmd->add_option("--budget", dist.budget, "insertion budget for the upper bound");
  dist_cmd->add_flag("--json", dist.json);
  dist_cmd->add_flag("--witness", dist.witness);

  std::size_t match_len = 0;
  bool count_only = false;
  auto* matches_cmd = app.add_subcommand("matches", "list matches on {0..len-1}");
  matches_cmd->add_option("--len", match_len)->required();
  matches_cmd->add_flag("--count-only", count_only);

  std::size_t project_level = 0;
  std::string project_word;
  auto* project_cmd = app.add_subcommand("project", "apply f_n to a word");
  project_cmd->add_option("-n,--level", project_level)->required();
  project_cmd->add_option("word", project_word)->required();
  project_cmd->allow_extras();

  std::string sep_u, sep_v;
  auto* sep_cmd = app.add_subcommand("seplevel", "least n with f_n(u) != f_n(v)");
  sep_cmd->add_option("u", sep_u)->required();
  sep_cmd->add_option("v", sep_v)->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"discreteness", "lipschitz", "extension"}));
  verify_cmd->add_option("--level", verify.level);
  verify_cmd->add_option("--corpus", verify.corpus, "one word per line");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_option("--max-len", verify.max_len);
  verify_cmd->add_option("--scale", verify.scale, "trivial | weighted | file:<path>");
  verify_cmd->add_flag("--json", verify.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto append_extras = [&](std::string& word, const CLI::App* cmd) {
    for (const auto& extra : cmd->remaining()) {
      if (extra.starts_with("-")) {
        err << "unknown option '" << extra << "' for " << cmd->get_name() << '\n';
        return false;
      }
      word += " " + extra;
    }
    return true;
  };
  if (!append_extras(norm.word, norm_cmd) || !append_extras(project_word, project_cmd))
    return kUsage;

  try {
    if (*norm_cmd) return cmd_norm(norm, out);
    if (*dist_cmd) return cmd_dist(dist, out);
    if (*matches_cmd) return cmd_matches(match_len, count_only, out);
    if (*project_cmd) {
      out << to_string(f_n(reduced(project_word), Level{project_level})) << '\n';
      return kOk;
    }
    if (*sep_cmd) {
      auto n = separating_level(reduced(sep_u), reduced(sep_v));
      out << (n ? std::to_string(*n) : std::string("none")) << '\n';
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::overflow_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace graev::cli
