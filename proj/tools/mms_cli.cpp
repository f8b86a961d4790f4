// mms: command-line front end for the max-min share solvers.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 input error,
// 3 resource limit (search budget or enumeration cap).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mms/allocators.hpp"
#include "mms/error.hpp"
#include "mms/fixtures.hpp"
#include "mms/json_io.hpp"
#include "mms/oracle.hpp"
#include "mms/shares.hpp"

namespace {

using mms::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
  std::string format = "table";
  std::uint64_t state_cap = 20'000'000;
};

struct ModeOptions {
  bool exact = false;
  std::string eps;
};

bool json_output(const GlobalOptions& g) { return g.format == "json"; }

void emit_json(const Json& json) { std::cout << json.dump(2) << '\n'; }

std::string bundle_text(const std::vector<std::size_t>& bundle,
                        const mms::Instance& instance) {
  std::string out = "{";
  for (std::size_t k = 0; k < bundle.size(); ++k) {
    if (k > 0) out += ", ";
    out += instance.items()[bundle[k]];
  }
  return out + "}";
}

void print_allocation(const mms::Allocation& allocation, const mms::Instance& instance) {
  for (std::size_t i = 0; i < allocation.n_bundles(); ++i) {
    std::cout << "  agent " << instance.agents()[i] << ": "
              << bundle_text(allocation.bundle(i), instance) << '\n';
  }
}

mms::sched::Budget budget_of(const GlobalOptions& g) {
  mms::sched::Budget budget;
  budget.max_nodes = g.state_cap;
  budget.max_states = g.state_cap;
  return budget;
}

std::optional<mms::Rational> epsilon_of(const ModeOptions& mode) {
  if (mode.exact || mode.eps.empty()) return std::nullopt;
  mms::Rational eps = mms::Rational::parse(mode.eps);
  if (eps.sign() <= 0) {
    throw mms::Error(mms::ErrorCode::kConfigViolation, "--eps must be positive");
  }
  return eps;
}

// ---- guarantees -----------------------------------------------------------

int run_guarantees(const std::string& path, const ModeOptions& mode_opts,
                   const GlobalOptions& g) {
  const mms::Instance instance = mms::io::read_instance(path);
  const auto eps = epsilon_of(mode_opts);
  const auto mode = eps ? mms::sched::SolveMode::approx(*eps) : mms::sched::SolveMode::exact();
  const mms::GuaranteeProfile profile = mms::guarantee_profile(instance, mode, budget_of(g));
  const std::string factor = (mms::Rational(1) + (eps ? *eps : mms::Rational(0))).to_string();

  if (json_output(g)) {
    Json out;
    out["mode"] = eps ? "approx" : "exact";
    out["certified_factor"] = factor;
    Json agents = Json::array();
    for (std::size_t i = 0; i < instance.n_agents(); ++i) {
      Json a;
      a["agent"] = instance.agents()[i];
      a["mms"] = profile[i].mms.to_string();
      a["mms_witness"] = mms::io::to_json(profile[i].mms_witness, instance);
      a["mmax"] = profile[i].mmax.to_string();
      a["mmax_witness"] = mms::io::to_json(profile[i].mmax_witness, instance);
      agents.push_back(std::move(a));
    }
    out["agents"] = std::move(agents);
    emit_json(out);
    return kExitOk;
  }
  std::cout << (eps ? "approximate guarantees (factor " + factor + ")" : "exact guarantees")
            << '\n';
  std::cout << std::left << std::setw(10) << "agent" << std::setw(24) << "MmS"
            << "mMS" << '\n';
  for (std::size_t i = 0; i < instance.n_agents(); ++i) {
    std::cout << std::setw(10) << instance.agents()[i] << std::setw(24)
              << profile[i].mms.to_string() << profile[i].mmax.to_string() << '\n';
  }
  return kExitOk;
}

// ---- optimal --------------------------------------------------------------

int run_optimal(const std::string& path, const ModeOptions& mode_opts,
                const GlobalOptions& g) {
  const mms::Instance instance = mms::io::read_instance(path);
  const auto eps = epsilon_of(mode_opts);
  if (!eps) {
    const mms::RatioResult result = mms::optimal_mms_exact(instance, budget_of(g));
    if (json_output(g)) {
      Json out;
      out["mode"] = "exact";
      out["lambda"] = result.lambda.to_string();
      out["allocation"] = mms::io::to_json(result.allocation, instance);
      emit_json(out);
    } else {
      std::cout << "optimal MmS ratio: " << result.lambda.to_string() << '\n';
      print_allocation(result.allocation, instance);
    }
    return kExitOk;
  }
  const auto config = mms::PtasConfig::defaults(*eps, instance.kind());
  const mms::PtasResult result = mms::optimal_mms_ptas(instance, config, budget_of(g));
  if (json_output(g)) {
    Json out;
    out["mode"] = "ptas";
    out["epsilon"] = config.epsilon.to_string();
    out["alpha"] = config.alpha.to_string();
    out["beta"] = config.beta.to_string();
    out["certified_factor"] = result.certified_factor.to_string();
    out["lambda_estimate"] = result.lambda_estimate.to_string();
    out["allocation"] = mms::io::to_json(result.allocation, instance);
    emit_json(out);
  } else {
    std::cout << "approximate optimal MmS allocation (factor "
              << result.certified_factor.to_string() << ", ratio estimate "
              << result.lambda_estimate.to_string() << ")\n";
    print_allocation(result.allocation, instance);
  }
  return kExitOk;
}

// ---- round-robin ----------------------------------------------------------

int run_round_robin(const std::string& path, const GlobalOptions& g) {
  const mms::Instance instance = mms::io::read_instance(path);
  const mms::Allocation allocation = mms::round_robin_chores(instance);
  const auto mode = mms::sched::SolveMode::exact();

  Json agents = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(10) << "agent" << std::setw(20) << "utility"
        << std::setw(20) << "MmS" << "ratio" << '\n';
  for (std::size_t i = 0; i < instance.n_agents(); ++i) {
    const mms::Rational utility = mms::bundle_utility(instance, i, allocation.bundle(i));
    const mms::Rational mms_value =
        mms::guarantee(instance, i, mms::Share::kMaxMin, mode, budget_of(g)).value;
    std::optional<mms::Rational> ratio;
    if (!mms_value.is_zero()) ratio = utility / mms_value;

    Json a;
    a["agent"] = instance.agents()[i];
    a["bundle"] = mms::io::bundle_labels(allocation.bundle(i), instance);
    a["utility"] = utility.to_string();
    a["mms"] = mms_value.to_string();
    a["ratio"] = ratio ? Json(ratio->to_string()) : Json(nullptr);
    agents.push_back(std::move(a));
    table << std::setw(10) << instance.agents()[i] << std::setw(20) << utility.to_string()
          << std::setw(20) << mms_value.to_string() << (ratio ? ratio->to_string() : "-")
          << '\n';
  }
  const mms::Rational bound =
      mms::Rational(2) - mms::Rational(mpz_class(1), mpz_class(instance.n_agents()));
  if (json_output(g)) {
    Json out;
    out["allocation"] = mms::io::to_json(allocation, instance);
    out["bound"] = bound.to_string();
    out["agents"] = std::move(agents);
    emit_json(out);
  } else {
    std::cout << "round-robin allocation (guaranteed ratio <= " << bound.to_string() << ")\n"
              << table.str();
    print_allocation(allocation, instance);
  }
  return kExitOk;
}

// ---- check ----------------------------------------------------------------

mms::Criterion parse_criterion(const std::vector<std::string>& args) {
  if (args.empty()) throw mms::Error(mms::ErrorCode::kBadParams, "--criterion is required");
  const std::string& name = args[0];
  const auto lambda = [&]() {
    if (args.size() != 2) {
      throw mms::Error(mms::ErrorCode::kBadParams, "criterion '" + name + "' needs a value");
    }
    if (args[1] == "inf") return mms::RatioValue::infinity();
    return mms::RatioValue::finite(mms::Rational::parse(args[1]));
  };
  if (name == "mms" && args.size() == 1) return mms::Criterion::mms();
  if (name == "perverse-mmax" && args.size() == 1) return mms::Criterion::perverse_mmax();
  if (name == "lambda") return mms::Criterion::lambda_max_min(lambda());
  if (name == "perverse-lambda") return mms::Criterion::perverse_lambda_min_max(lambda());
  throw mms::Error(mms::ErrorCode::kBadParams, "unknown criterion '" + name + "'");
}

int run_check(const std::string& instance_path, const std::string& allocation_path,
              const std::vector<std::string>& criterion_args, const GlobalOptions& g) {
  const mms::Instance instance = mms::io::read_instance(instance_path);
  const mms::Allocation allocation = mms::io::read_allocation(allocation_path, instance);
  const mms::Criterion criterion = parse_criterion(criterion_args);
  const mms::GuaranteeProfile profile =
      mms::guarantee_profile(instance, mms::sched::SolveMode::exact(), budget_of(g));
  const mms::CheckReport report =
      mms::check_allocation(instance, allocation, criterion, profile);

  std::string criterion_text = criterion_args[0];
  if (criterion_args.size() > 1) criterion_text += " " + criterion_args[1];
  if (json_output(g)) {
    Json out;
    out["criterion"] = criterion_text;
    out["pass"] = report.all_pass();
    Json agents = Json::array();
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
      const mms::AgentVerdict& v = report.agents[i];
      Json a;
      a["agent"] = instance.agents()[i];
      a["utility"] = v.utility.to_string();
      a["guarantee"] = v.guarantee.to_string();
      a["threshold"] = v.threshold ? Json(v.threshold->to_string()) : Json("inf");
      a["slack"] = v.slack ? Json(v.slack->to_string()) : Json(nullptr);
      a["pass"] = v.pass;
      agents.push_back(std::move(a));
    }
    out["agents"] = std::move(agents);
    emit_json(out);
  } else {
    std::cout << "criterion " << criterion_text << ": "
              << (report.all_pass() ? "PASS" : "FAIL") << '\n';
    std::cout << std::left << std::setw(10) << "agent" << std::setw(20) << "utility"
              << std::setw(20) << "threshold" << std::setw(20) << "slack" << "verdict\n";
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
      const mms::AgentVerdict& v = report.agents[i];
      std::cout << std::setw(10) << instance.agents()[i] << std::setw(20)
                << v.utility.to_string() << std::setw(20)
                << (v.threshold ? v.threshold->to_string() : "inf") << std::setw(20)
                << (v.slack ? v.slack->to_string() : "-") << (v.pass ? "pass" : "fail")
                << '\n';
    }
  }
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

// ---- oracle ---------------------------------------------------------------

int run_oracle(const std::string& path, const GlobalOptions& g) {
  const mms::Instance instance = mms::io::read_instance(path);
  const mms::oracle::Options options{g.state_cap};
  const auto found = mms::oracle::mms_allocation_search(instance, options);
  const mms::RatioResult ratio = mms::oracle::enumerate_optimal_ratio(instance, options);
  if (json_output(g)) {
    Json out;
    out["exists"] = found.has_value();
    out["lambda"] = ratio.lambda.to_string();
    out["witness"] = mms::io::to_json(ratio.allocation, instance);
    emit_json(out);
  } else {
    std::cout << "MmS allocation exists: " << (found ? "yes" : "no") << '\n'
              << "optimal MmS ratio: " << ratio.lambda.to_string() << '\n';
    print_allocation(ratio.allocation, instance);
  }
  return kExitOk;
}

// ---- fixture / random -----------------------------------------------------

void write_instance(const mms::Instance& instance, const std::string& output) {
  const std::string text = mms::io::to_json(instance).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw mms::Error(mms::ErrorCode::kParseError, "cannot write '" + output + "'");
  out << text;
}

std::vector<mms::Rational> parse_values(const std::string& csv) {
  std::vector<mms::Rational> values;
  std::stringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) values.push_back(mms::Rational::parse(token));
  }
  return values;
}

int run_random(std::size_t agents, std::size_t items, std::uint64_t seed, bool chores,
               int max_value, const std::string& output) {
  if (agents == 0 || max_value < 0) {
    throw mms::Error(mms::ErrorCode::kBadParams, "need --agents >= 1 and --max >= 0");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, max_value);
  mms::UtilityMatrix utilities(agents, mms::UtilityRow(items));
  for (auto& row : utilities) {
    for (auto& u : row) u = mms::Rational(chores ? -dist(rng) : dist(rng));
  }
  const mms::Instance instance =
      mms::make_instance(chores ? mms::Kind::kChores : mms::Kind::kGoods, utilities);
  write_instance(instance, output);
  return kExitOk;
}

int exit_code_for(const mms::Error& e) {
  switch (e.code()) {
    case mms::ErrorCode::kBudgetExceeded:
    case mms::ErrorCode::kTooLarge:
      return kExitResource;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-min share fair allocation of indivisible goods and chores"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--state-cap", g.state_cap,
                 "Search-node / state / enumeration cap for exact computations");

  std::string instance_path;
  std::string allocation_path;
  ModeOptions mode;
  const auto add_mode = [&mode](CLI::App* cmd) {
    auto* exact = cmd->add_flag("--exact", mode.exact, "Exact computation (default)");
    auto* eps = cmd->add_option("--eps", mode.eps, "Approximation parameter, e.g. 1/4");
    exact->excludes(eps);
  };

  auto* guarantees = app.add_subcommand("guarantees", "Per-agent MmS and mMS guarantees");
  guarantees->add_option("instance", instance_path, "Instance JSON file")->required();
  add_mode(guarantees);

  auto* optimal = app.add_subcommand("optimal", "Optimal MmS ratio and allocation");
  optimal->add_option("instance", instance_path, "Instance JSON file")->required();
  add_mode(optimal);

  auto* round_robin = app.add_subcommand("round-robin", "Round-robin allocation of chores");
  round_robin->add_option("instance", instance_path, "Chores instance JSON file")->required();

  std::vector<std::string> criterion;
  auto* check = app.add_subcommand("check", "Check an allocation against a criterion");
  check->add_option("instance", instance_path, "Instance JSON file")->required();
  check->add_option("allocation", allocation_path, "Allocation JSON file")->required();
  check->add_option("--criterion", criterion,
                    "mms | perverse-mmax | lambda L | perverse-lambda L")
      ->expected(1, 2)
      ->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive existence check and exact ratio");
  oracle->add_option("instance", instance_path, "Instance JSON file")->required();

  std::string fixture_name;
  std::string output;
  std::optional<int> fixture_n;
  std::string fixture_r;
  std::string fixture_values;
  bool chores = false;
  auto* fixture = app.add_subcommand("fixture", "Write a named fixture instance");
  fixture->add_option("name", fixture_name, "I | neg_I | J | neg_J | tight_rr | two_agent_r | identical")
      ->required();
  fixture->add_option("--n", fixture_n, "Agent count (tight_rr, identical)");
  fixture->add_option("--r", fixture_r, "Ratio parameter r > 1 (two_agent_r)");
  fixture->add_option("--values", fixture_values, "Comma-separated magnitudes (identical)");
  fixture->add_flag("--chores", chores, "Emit the chores (negated) version");
  fixture->add_option("-o,--output", output, "Output file (default stdout)");

  std::size_t random_agents = 3;
  std::size_t random_items = 7;
  std::uint64_t seed = 1;
  int max_value = 10;
  auto* random = app.add_subcommand("random", "Write a random integer instance");
  random->add_option("--agents", random_agents, "Agent count");
  random->add_option("--items", random_items, "Item count");
  random->add_option("--seed", seed, "Random seed");
  random->add_option("--max", max_value, "Largest utility magnitude");
  random->add_flag("--chores", chores, "Non-positive utilities");
  random->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*guarantees) return run_guarantees(instance_path, mode, g);
    if (*optimal) return run_optimal(instance_path, mode, g);
    if (*round_robin) return run_round_robin(instance_path, g);
    if (*check) return run_check(instance_path, allocation_path, criterion, g);
    if (*oracle) return run_oracle(instance_path, g);
    if (*fixture) {
      mms::fixtures::Params params;
      params.n = fixture_n;
      if (!fixture_r.empty()) params.r = mms::Rational::parse(fixture_r);
      params.values = parse_values(fixture_values);
      params.chores = chores;
      write_instance(mms::fixtures::by_name(fixture_name, params), output);
      return kExitOk;
    }
    if (*random) {
      return run_random(random_agents, random_items, seed, chores, max_value, output);
    }
  } catch (const mms::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == mms::ErrorCode::kBudgetExceeded) {
      std::cerr << "hint: retry with --eps E for an approximate answer, or raise --state-cap\n";
    }
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
