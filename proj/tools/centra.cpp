// centra: centralizer census and claim verification for finite groups.
//
// Exit codes: 0 success, 1 a claim or conjecture check failed, 2 usage or
// input error, 3 order cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "centra/centra.hpp"

namespace {

using namespace centra;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct RunConfig {
  std::size_t order_cap = 20000;
  std::size_t cache_limit = 2048;
  std::uint64_t clique_budget = 10'000'000;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string format = "json";
  std::string corpus_path;
  std::size_t max_order = 5040;
  std::size_t n_measure_max_order = 360;
  bool skip_n_measure = false;

  GroupLimits limits() const { return {order_cap, cache_limit}; }

  CensusOptions census() const {
    CensusOptions o;
    o.max_order = max_order;
    o.limits = limits();
    o.analysis.clique.node_budget = clique_budget;
    o.analysis.compute_n_measure = !skip_n_measure;
    o.analysis.n_measure_max_order = n_measure_max_order;
    o.jobs = jobs;
    return o;
  }

  ReportFormat report_format() const { return format == "csv" ? ReportFormat::csv : ReportFormat::json_lines; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CorpusRecord> load_corpus(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

// A spec is a family expression ("A5", "S3xS3") or the name of a record in
// the corpus file.
FiniteGroup resolve_group(const std::string& spec, const RunConfig& config) {
  for (const auto& r : load_corpus(config.corpus_path))
    if (r.name == spec) return group_from_record(r, config.limits());
  return group_from_spec(spec, config.limits());
}

int cmd_analyze(const std::string& spec, const RunConfig& config) {
  const auto G = resolve_group(spec, config);
  AnalysisOptions options = config.census().analysis;
  const auto a = analyze(G, options);
  write_report(std::cout, std::vector<InvariantReport>{a.report}, config.report_format());
  return exit_ok;
}

int cmd_verify(const std::string& claim_text, const std::string& spec, const RunConfig& config) {
  const auto claim = parse_claim(claim_text);
  if (!claim) throw UsageError("unknown claim id '" + claim_text + "'");
  const auto G = resolve_group(spec, config);
  const auto a = analyze(G, config.census().analysis);
  const auto result = verify_claim(*claim, a);
  write_report(std::cout, std::vector<VerificationResult>{result}, config.report_format());
  return result.status == Status::fail ? exit_fail : exit_ok;
}

void print_census_summary(const CensusResult& census) {
  struct Tally {
    std::size_t pass = 0, fail = 0, vacuous = 0, budget = 0;
  };
  std::vector<Tally> tallies(all_claims.size());
  for (const auto& row : census.rows)
    for (const auto& v : row.results) {
      auto& t = tallies[static_cast<std::size_t>(v.claim)];
      switch (v.status) {
        case Status::pass: ++t.pass; break;
        case Status::fail: ++t.fail; break;
        case Status::vacuous: ++t.vacuous; break;
        case Status::budget: ++t.budget; break;
      }
    }
  std::cerr << "groups: " << census.rows.size() << "\n";
  for (auto id : all_claims) {
    const auto& t = tallies[static_cast<std::size_t>(id)];
    std::cerr << "  " << claim_name(id) << ": pass " << t.pass << ", FAIL " << t.fail << ", vacuous " << t.vacuous
              << ", budget " << t.budget << "\n";
  }
  std::cerr << "attained n:";
  for (auto n : census.summary.attained_n) std::cerr << ' ' << n;
  std::cerr << "\n";
  if (census.failures) {
    std::cerr << "COUNTEREXAMPLES (" << census.failures << " FAIL results):\n";
    for (const auto& row : census.rows)
      for (const auto& v : row.results)
        if (v.status == Status::fail)
          std::cerr << "  FAIL " << claim_name(v.claim) << " on " << v.group << ": " << v.detail << "\n";
    for (const auto& v : census.summary.results)
      if (v.status == Status::fail) std::cerr << "  FAIL " << claim_name(v.claim) << " (corpus): " << v.detail << "\n";
  }
}

int cmd_census(const RunConfig& config) {
  const auto entries = census_entries(config.max_order, load_corpus(config.corpus_path));
  const auto census = run_census(entries, config.census());
  write_census(std::cout, census, config.report_format());
  print_census_summary(census);
  return census.failures ? exit_fail : exit_ok;
}

int cmd_scan_conjecture(const RunConfig& config) {
  const auto entries = census_entries(config.max_order, load_corpus(config.corpus_path));
  const auto scan = scan_conjecture(entries, config.census());
  const bool csv = config.report_format() == ReportFormat::csv;
  if (csv) std::cout << "name,order,n_centralizers,verdict,matched\n";
  for (const auto& c : scan.candidates) {
    if (csv) {
      std::cout << c.name << ',' << c.order << ',' << c.n << ',' << verdict_name(c.verdict) << ',' << c.matched
                << '\n';
    } else {
      nlohmann::ordered_json j;
      j["name"] = c.name;
      j["order"] = c.order;
      j["n_centralizers"] = c.n;
      j["verdict"] = verdict_name(c.verdict);
      j["matched"] = c.matched.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.matched);
      std::cout << j.dump() << '\n';
    }
  }
  std::cerr << "groups scanned: " << scan.groups << ", candidates: " << scan.candidates.size()
            << ", counterexamples: " << scan.counterexamples << "\n";
  return scan.counterexamples ? exit_fail : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizer counts, invariants and claim checks for finite groups"};
  app.require_subcommand(1);
  RunConfig config;

  if (const char* env = std::getenv("CENTRA_ORDER_CAP")) {
    try {
      config.order_cap = std::stoul(env);
      if (config.order_cap == 0) throw std::invalid_argument("zero");
    } catch (const std::exception&) {
      std::cerr << "error: CENTRA_ORDER_CAP must be a positive integer\n";
      return exit_usage;
    }
  }

  const auto positive = CLI::PositiveNumber;
  app.add_option("--order-cap", config.order_cap, "Largest group order to enumerate")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--cache-limit", config.cache_limit, "Largest order given a Cayley table")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--clique-budget", config.clique_budget, "Branch nodes per clique search")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--n-measure-max-order", config.n_measure_max_order, "Skip n_measure above this order")
      ->check(positive)
      ->capture_default_str();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", config.corpus_path, "Corpus file (one JSON record per line)");
  };
  auto add_scan_options = [&](CLI::App* sub) {
    add_corpus(sub);
    add_format(sub);
    sub->add_option("--max-order", config.max_order, "Largest built-in group order")
        ->check(positive)
        ->capture_default_str();
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(positive)->capture_default_str();
  };

  std::string spec;
  std::string claim;

  auto* analyze_cmd = app.add_subcommand("analyze", "Invariant report for one group");
  analyze_cmd->add_option("spec", spec, "Group spec (e.g. A5, D10, S3xS3) or corpus record name")->required();
  add_corpus(analyze_cmd);
  add_format(analyze_cmd);
  analyze_cmd->add_flag("--skip-n-measure", config.skip_n_measure, "Do not compute n_measure");

  auto* census_cmd = app.add_subcommand("census", "Analyze and verify every corpus group");
  add_scan_options(census_cmd);
  census_cmd->add_flag("--skip-n-measure", config.skip_n_measure, "Do not compute n_measure");

  auto* verify_cmd = app.add_subcommand("verify", "Run one claim verifier on one group");
  verify_cmd->add_option("claim", claim, "Claim id")->required();
  verify_cmd->add_option("spec", spec, "Group spec or corpus record name")->required();
  add_corpus(verify_cmd);
  add_format(verify_cmd);

  auto* scan_cmd = app.add_subcommand("scan-conjecture", "List groups with 2|G| <= 3n and test them");
  add_scan_options(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(spec, config);
    if (*census_cmd) return cmd_census(config);
    if (*verify_cmd) return cmd_verify(claim, spec, config);
    if (*scan_cmd) return cmd_scan_conjecture(config);
  } catch (const OrderCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const CorpusParseError& e) {
    std::cerr << "error: corpus " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
