// coinweigh: build, verify and decode counterfeit-coin weighing plans.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coinweigh/bounds.hpp"
#include "coinweigh/hamming.hpp"
#include "coinweigh/oracle.hpp"
#include "coinweigh/plan.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

using namespace coinweigh;

std::string format_amount(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

/// Builds a verified plan; refuses to hand out one that fails verification.
WeighingPlan verified_plan(int coins, std::optional<int> weighing_count) {
  WeighingPlan plan = build_plan(coins, weighing_count);
  const VerificationReport report = verify_plan(plan);
  if (!report.pass) {
    throw Error("generated plan failed verification; refusing to emit it");
  }
  return plan;
}

WeighingPlan load_or_build_plan(const std::string& plan_path, int coins,
                                std::optional<int> weighing_count) {
  if (!plan_path.empty()) {
    std::ifstream in(plan_path);
    if (!in) throw Error("cannot open plan file: " + plan_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_plan(buffer.str());
  }
  return verified_plan(coins, weighing_count);
}

void print_report(std::ostream& out, const VerificationReport& report) {
  out << "plan: " << report.coins << " coins, " << report.weighings << " weighings\n";
  out << (report.scenario_count - report.failures.size()) << "/" << report.scenario_count
      << " scenarios correct\n";
  out << "distinct syndromes: " << report.distinct_syndromes << "\n";
  for (const auto& c : report.collisions) {
    out << "collision: " << to_string(c.first) << " and " << to_string(c.second)
        << " both produce " << syndrome_letters(c.syndrome) << "\n";
  }
  for (const auto& f : report.failures) {
    out << "failure: " << to_string(f.scenario) << " expected " << to_string(f.expected);
    if (f.actual) {
      out << ", decoded as " << to_string(*f.actual) << "\n";
    } else {
      out << ", decoder error: " << f.error << "\n";
    }
  }
  out << (report.pass ? "PASS" : "FAIL") << "\n";
}

int run_bounds(std::optional<std::int64_t> coins, std::optional<int> weighings,
               const std::string& variant_filter) {
  const std::vector<std::pair<std::string, Variant>> variants = {
      {"general", Variant::GeneralBound},
      {"practical", Variant::Practical},
      {"known-weight", Variant::KnownWeight},
  };
  const auto selected = [&](const std::string& name) {
    return variant_filter.empty() || variant_filter == name;
  };
  if (coins) {
    std::cout << "coins: " << *coins << "\n";
    std::cout << "hypotheses: " << (2 * *coins + 1) << "\n";
    const double needed_bits = std::log2(static_cast<double>(2 * *coins + 1));
    const InfoQuantity needed_trits = convert(InfoQuantity{needed_bits, Unit::Bits}, Unit::Trits);
    std::cout << "information needed: " << format_amount(needed_bits) << " bits = "
              << format_amount(needed_trits.value) << " trits\n";
    for (const auto& [name, variant] : variants) {
      if (selected(name)) {
        std::cout << "min weighings (" << name << "): " << min_weighings(*coins, variant) << "\n";
      }
    }
  } else {
    std::cout << "weighings: " << *weighings << "\n";
    for (const auto& [name, variant] : variants) {
      if (selected(name)) {
        std::cout << "max coins (" << name << "): " << max_coins(*weighings, variant) << "\n";
      }
    }
  }
  return kExitSuccess;
}

int run_plan(int coins, std::optional<int> weighing_count, const std::string& format,
             const std::string& output_path) {
  const WeighingPlan plan = verified_plan(coins, weighing_count);
  const std::string rendered =
      serialize_plan(plan, format == "json" ? PlanFormat::Json : PlanFormat::Text);
  if (output_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output_path);
    if (!out) throw Error("cannot write plan file: " + output_path);
    out << rendered;
  }
  return kExitSuccess;
}

int run_decode(const std::string& plan_path, int coins, std::optional<int> weighing_count,
               const std::string& syndrome_text) {
  const WeighingPlan plan = load_or_build_plan(plan_path, coins, weighing_count);
  const Syndrome s = parse_syndrome(syndrome_text, plan.weighing_count());
  try {
    std::cout << to_string(decode_balanced(plan.matrix, s)) << "\n";
  } catch (const InvalidSyndromeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitSuccess;
}

int run_verify(const std::string& plan_path, int coins, std::optional<int> weighing_count) {
  const WeighingPlan plan =
      plan_path.empty() ? build_plan(coins, weighing_count) : load_or_build_plan(plan_path, 0, {});
  const VerificationReport report = verify_plan(plan);
  print_report(std::cout, report);
  return report.pass ? kExitSuccess : kExitVerificationFailure;
}

int run_solve(int coins, std::optional<int> weighing_count, std::istream& in, std::ostream& out) {
  const WeighingPlan plan = verified_plan(coins, weighing_count);
  std::vector<Trit> answers;
  for (int round = 1; round <= plan.weighing_count(); ++round) {
    const Weighing& w = plan.weighings[static_cast<std::size_t>(round - 1)];
    out << "Weighing " << round << " of " << plan.weighing_count() << "\n";
    out << "Left pan:";
    for (int id : w.left) out << " " << id;
    out << "  Right pan:";
    for (int id : w.right) out << " " << id;
    out << "\n";
    for (;;) {
      out << "Result [L/B/R]: " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\n";
        std::cerr << "error: input ended before all weighings were answered\n";
        return kExitUsage;
      }
      // Trim surrounding whitespace.
      const auto begin = line.find_first_not_of(" \t\r");
      const auto end = line.find_last_not_of(" \t\r");
      const std::string token =
          begin == std::string::npos ? std::string() : line.substr(begin, end - begin + 1);
      if (token.size() == 1) {
        try {
          answers.push_back(parse_syndrome(token, 1).digit(1));
          break;
        } catch (const SyndromeParseError&) {
        }
      }
      out << "Please answer L, B or R.\n";
    }
  }
  const Syndrome s{std::move(answers)};
  try {
    out << to_string(decode_balanced(plan.matrix, s)) << "\n";
  } catch (const InvalidSyndromeError&) {
    out << "These results do not match any single counterfeit coin. "
           "Re-check the recorded tilts.\n";
    return kExitVerificationFailure;
  }
  return kExitSuccess;
}

int run_hamming(const std::string& bit_text) {
  const BitVector word = BitVector::from_string(bit_text);
  const int position = hamming_syndrome(word);
  if (position == 0) {
    std::cout << "message is correct\n";
  } else {
    std::cout << "error at position " << position << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighing plans for the counterfeit coin problem"};
  app.require_subcommand(1);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Show weighing bounds and information content");
  std::int64_t bounds_n = 0;
  int bounds_x = 0;
  std::string bounds_variant;
  auto* bounds_n_opt = bounds_cmd->add_option("-n,--coins", bounds_n, "Coin count");
  auto* bounds_x_opt = bounds_cmd->add_option("-x,--weighings", bounds_x, "Weighing count");
  bounds_cmd->add_option("--variant", bounds_variant, "Restrict to one bound variant")
      ->check(CLI::IsMember({"general", "practical", "known-weight"}));
  bounds_n_opt->excludes(bounds_x_opt);

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Generate a verified weighing plan");
  int plan_n = 0;
  int plan_x = 0;
  std::string plan_format = "text";
  std::string plan_output;
  plan_cmd->add_option("-n,--coins", plan_n, "Coin count")->required();
  auto* plan_x_opt = plan_cmd->add_option("-x,--weighings", plan_x, "Weighing count override");
  plan_cmd->add_option("--format", plan_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  plan_cmd->add_option("-o,--output", plan_output, "Output path (default: stdout)");

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "Decode an observed tilt sequence");
  std::string decode_plan_path;
  int decode_n = 0;
  int decode_x = 0;
  std::string decode_syndrome;
  auto* decode_plan_opt = decode_cmd->add_option("--plan", decode_plan_path, "Plan file (JSON)");
  auto* decode_n_opt = decode_cmd->add_option("-n,--coins", decode_n, "Coin count");
  auto* decode_x_opt = decode_cmd->add_option("-x,--weighings", decode_x, "Weighing count override");
  decode_cmd->add_option("-s,--syndrome", decode_syndrome, "Tilt sequence, e.g. RRB or 220")
      ->required();
  decode_plan_opt->excludes(decode_n_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a plan");
  std::string verify_plan_path;
  int verify_n = 0;
  int verify_x = 0;
  auto* verify_plan_opt = verify_cmd->add_option("--plan", verify_plan_path, "Plan file (JSON)");
  auto* verify_n_opt = verify_cmd->add_option("-n,--coins", verify_n, "Coin count");
  auto* verify_x_opt = verify_cmd->add_option("-x,--weighings", verify_x, "Weighing count override");
  verify_plan_opt->excludes(verify_n_opt);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Guided weighing session");
  int solve_n = 0;
  int solve_x = 0;
  solve_cmd->add_option("-n,--coins", solve_n, "Coin count")->required();
  auto* solve_x_opt = solve_cmd->add_option("-x,--weighings", solve_x, "Weighing count override");

  // hamming
  auto* hamming_cmd = app.add_subcommand("hamming", "Locate a single bit error in a binary word");
  std::string hamming_bits;
  hamming_cmd->add_option("bits", hamming_bits, "Received word, e.g. 0111000")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  auto optional_weighings = [](const CLI::Option* opt, int value) -> std::optional<int> {
    return opt->count() > 0 ? std::optional<int>(value) : std::nullopt;
  };

  try {
    if (bounds_cmd->parsed()) {
      if (bounds_n_opt->count() == 0 && bounds_x_opt->count() == 0) {
        std::cerr << "error: bounds needs --coins or --weighings\n";
        return kExitUsage;
      }
      return run_bounds(bounds_n_opt->count() ? std::optional<std::int64_t>(bounds_n) : std::nullopt,
                        bounds_x_opt->count() ? std::optional<int>(bounds_x) : std::nullopt,
                        bounds_variant);
    }
    if (plan_cmd->parsed()) {
      return run_plan(plan_n, optional_weighings(plan_x_opt, plan_x), plan_format, plan_output);
    }
    if (decode_cmd->parsed()) {
      if (decode_plan_path.empty() && decode_n_opt->count() == 0) {
        std::cerr << "error: decode needs --plan or --coins\n";
        return kExitUsage;
      }
      return run_decode(decode_plan_path, decode_n, optional_weighings(decode_x_opt, decode_x),
                        decode_syndrome);
    }
    if (verify_cmd->parsed()) {
      if (verify_plan_path.empty() && verify_n_opt->count() == 0) {
        std::cerr << "error: verify needs --plan or --coins\n";
        return kExitUsage;
      }
      return run_verify(verify_plan_path, verify_n, optional_weighings(verify_x_opt, verify_x));
    }
    if (solve_cmd->parsed()) {
      return run_solve(solve_n, optional_weighings(solve_x_opt, solve_x), std::cin, std::cout);
    }
    if (hamming_cmd->parsed()) {
      return run_hamming(hamming_bits);
    }
  } catch (const InvalidSyndromeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
