#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xnlp/harness.hpp"
#include "xnlp/solvers.hpp"

using namespace xnlp;

namespace {

enum Exit { kOk = 0, kUsage = 2, kResource = 3, kVerification = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_input(path));
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json info_json(const ReductionInfo& info) {
  Json j;
  j["id"] = info.id;
  j["source"] = info.source;
  j["target"] = info.target;
  j["parameter_bound"] = info.bound;
  j["summary"] = info.summary;
  j["mutants"] = info.mutants;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instances, solvers and reductions for XNLP-complete problems"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultBudget;
  app.add_option("--budget", budget, "Step budget per solver call")->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print the answer");
  std::string solve_file, mode = "structured";
  bool check = false;
  solve_cmd->add_option("file", solve_file, "Instance JSON, '-' for stdin")->required();
  solve_cmd->add_option("--mode", mode, "exhaustive or structured")
      ->check(CLI::IsMember({"exhaustive", "structured"}))
      ->capture_default_str();
  solve_cmd->add_flag("--check", check, "Re-check the certificate of a YES answer");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction and print its output");
  std::string reduce_id, reduce_file;
  int reduce_mutant = 0;
  reduce_cmd->add_option("reduction", reduce_id, "Reduction id")->required();
  reduce_cmd->add_option("file", reduce_file, "Source instance JSON, '-' for stdin")->required();
  reduce_cmd->add_option("--mutant", reduce_mutant, "Apply a registered corruption instead");

  auto* verify_cmd = app.add_subcommand("verify", "Check reductions against brute-force oracles");
  std::string verify_id, manifest_file;
  bool mutants = false, as_json = false, no_timing = false;
  verify_cmd->add_option("reduction", verify_id, "Reduction id or 'all'")->required();
  verify_cmd->add_option("--manifest", manifest_file, "Stream manifest JSON (default manifest otherwise)");
  verify_cmd->add_flag("--mutants", mutants, "Also run every registered mutant, which must be caught");
  verify_cmd->add_flag("--json", as_json, "Print reports as JSON instead of a table");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit wall times");

  auto* gen_cmd = app.add_subcommand("gen", "Generate or enumerate instances");
  std::string gen_kind, gen_params = "{}", gen_bounds;
  std::uint64_t seed = 1;
  int count = 1;
  gen_cmd->add_option("kind", gen_kind, "Instance kind")->required();
  gen_cmd->add_option("--seed", seed, "First seed")->capture_default_str();
  gen_cmd->add_option("--count", count, "Number of consecutive seeds")->capture_default_str();
  gen_cmd->add_option("--params", gen_params, "Generator parameters as JSON");
  gen_cmd->add_option("--enumerate", gen_bounds, "Enumerate exhaustively within these JSON bounds");

  auto* info_cmd = app.add_subcommand("info", "Describe one reduction, or list them all");
  std::string info_id;
  info_cmd->add_option("reduction", info_id, "Reduction id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      Instance inst = load_instance(solve_file);
      auto answer = solve(inst, mode == "exhaustive" ? SolveMode::Exhaustive : SolveMode::Structured, budget);
      Json out = answer_to_json(answer);
      std::cout << out.dump(2) << '\n';
      if (check && answer.decision && !check_certificate(inst, answer.certificate)) {
        std::cerr << "certificate rejected by the checker\n";
        return kVerification;
      }
    } else if (*reduce_cmd) {
      auto out = apply_reduction(reduce_id, load_instance(reduce_file), reduce_mutant);
      std::cout << reduction_to_json(out).dump(2) << '\n';
    } else if (*verify_cmd) {
      Json manifest =
          manifest_file.empty() ? default_manifest() : parse_json_arg(read_input(manifest_file), "manifest");
      if (!manifest.contains("budget")) manifest["budget"] = budget;
      std::vector<std::string> ids;
      if (verify_id == "all")
        for (const auto& info : reduction_catalog()) ids.push_back(info.id);
      else
        ids.push_back(reduction_info(verify_id).id);
      std::vector<ReductionReport> reports;
      bool ok = true;
      for (const auto& id : ids) {
        auto stream = source_stream(id, manifest);
        reports.push_back(verify_reduction(id, stream, manifest_budget(manifest)));
        ok = ok && reports.back().sound();
        if (mutants)
          for (int m = 1; m <= static_cast<int>(reduction_info(id).mutants.size()); ++m) {
            reports.push_back(verify_reduction(id, stream, manifest_budget(manifest), m));
            if (reports.back().sound()) {
              std::cerr << id << " mutant " << m << " was not caught\n";
              ok = false;
            }
          }
      }
      if (as_json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, !no_timing));
        std::cout << arr.dump(2) << '\n';
      } else {
        std::cout << report_table(reports, !no_timing);
      }
      return ok ? kOk : kVerification;
    } else if (*gen_cmd) {
      Json arr = Json::array();
      if (!gen_bounds.empty()) {
        for (const auto& inst : enumerate_instances(gen_kind, parse_json_arg(gen_bounds, "--enumerate")))
          arr.push_back(to_json(inst));
        std::cout << arr.dump(2) << '\n';
      } else {
        Json params = parse_json_arg(gen_params, "--params");
        for (int i = 0; i < count; ++i) arr.push_back(to_json(random_instance(gen_kind, seed + i, params)));
        std::cout << (count == 1 ? arr[0] : arr).dump(2) << '\n';
      }
    } else if (*info_cmd) {
      if (info_id.empty()) {
        for (const auto& info : reduction_catalog())
          std::cout << info.id << "  " << info.source << " -> " << info.target << "  k' <= " << info.bound << '\n';
      } else {
        const auto& info = reduction_info(info_id);
        std::cout << info.id << '\n'
                  << "  source: " << info.source << '\n'
                  << "  target: " << info.target << '\n'
                  << "  parameter bound: " << info.bound << '\n'
                  << "  construction: " << info.summary << '\n';
        for (size_t m = 0; m < info.mutants.size(); ++m)
          std::cout << "  mutant " << m + 1 << ": " << info.mutants[m] << '\n';
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
  return kOk;
}
