// Copyright 2026 The dprs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dprs_cli: instance generation, oracle solves, single runs, sweeps and
// bound reports.
//
// Exit codes: 0 ok, 2 usage or bad input, 3 infeasible or unbounded,
// 4 privacy budget exhausted, 5 numerical failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dprs/bounds.h"
#include "dprs/coordinator.h"
#include "dprs/errors.h"
#include "dprs/harness.h"
#include "dprs/instance_io.h"
#include "dprs/oracle.h"
#include "dprs/synthgen.h"
#include "dprs/trace_io.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitNumerical = 5;

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    dprs::WriteTextFile(path, text);
  }
}

dprs::Mode ParseMode(const std::string& s) {
  if (s == "datahiding") return dprs::Mode::kDataHiding;
  if (s == "pure") return dprs::Mode::kPureDp;
  if (s == "approx") return dprs::Mode::kApproxDp;
  throw dprs::InvalidInputError("unknown mode " + s);
}

dprs::NormKind ParseNorm(const std::string& s) {
  if (s == "l2") return dprs::NormKind::kEuclidean;
  if (s == "linf") return dprs::NormKind::kInfinity;
  throw dprs::InvalidInputError("unknown norm " + s);
}

std::string Join(const dprs::Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += dprs::FormatReal(v[i]);
  }
  return out + "]";
}

struct GenArgs {
  std::uint64_t seed = 0;
  std::string params_file;
  std::optional<std::size_t> k, m;
  bool no_demands = false;
  std::string out;
};

dprs::GeneratorParams LoadParams(const std::string& file,
                                 std::optional<std::size_t> k,
                                 std::optional<std::size_t> m) {
  dprs::GeneratorParams params;
  if (!file.empty()) {
    if (!std::filesystem::exists(file)) {
      throw dprs::InvalidInputError("params file not found: " + file);
    }
    params = dprs::ParamsFromJson(dprs::ReadTextFile(file));
  }
  if (k) params.parties = *k;
  if (m) params.resources = *m;
  return params;
}

int CmdGen(const GenArgs& a) {
  dprs::GeneratorParams params = LoadParams(a.params_file, a.k, a.m);
  if (a.no_demands) params.demands = false;
  Emit(a.out, dprs::InstanceToJson(dprs::Generate(a.seed, params)));
  return kExitOk;
}

int CmdSolve(const std::string& instance_file) {
  const dprs::Instance inst = dprs::ReadInstanceFile(instance_file);
  const dprs::CentralizedSolution primal = dprs::SolveCentralized(inst);
  const dprs::DualLpSolution dual = dprs::SolveDualLp(inst);
  const double residual =
      std::abs(primal.value - dual.value) / std::max(1.0, std::abs(primal.value));
  std::cout << "status: optimal\n"
            << "Z_P: " << dprs::FormatReal(primal.value) << "\n"
            << "Z_D: " << dprs::FormatReal(dual.value) << "\n"
            << "lambda*: " << Join(primal.lambda) << "\n"
            << "strong_duality_residual: " << dprs::FormatReal(residual) << "\n";
  return kExitOk;
}

struct RunArgs {
  std::string instance;
  std::string mode = "datahiding";
  double eps = 1.0;
  double delta = 0.0;
  std::size_t T = 100;
  std::optional<std::size_t> iters;
  std::string step = "diminishing";
  double nu = 1.0;
  std::string norm = "l2";
  std::uint64_t seed = 0;
  std::string trace_out;
  std::string summary_out;
  std::string log_out;
};

int CmdRun(const RunArgs& a) {
  const dprs::Instance inst = dprs::ReadInstanceFile(a.instance);
  const dprs::CentralizedSolution opt = dprs::SolveCentralized(inst);
  dprs::RunConfig config;
  config.mode = ParseMode(a.mode);
  const bool is_private = config.mode != dprs::Mode::kDataHiding;
  config.privacy.regime = config.mode == dprs::Mode::kApproxDp
                              ? dprs::Regime::kApprox
                              : dprs::Regime::kPure;
  config.privacy.epsilon = a.eps;
  config.privacy.delta = config.mode == dprs::Mode::kApproxDp ? a.delta : 0.0;
  config.privacy.T = a.T;
  config.privacy.bound_norm = ParseNorm(a.norm);
  if (is_private) config.privacy.Validate();
  config.max_iters = a.iters.value_or(is_private ? a.T : 1000);
  config.seed = a.seed;
  config.reference_value = opt.value;

  const dprs::Vector lambda0(inst.num_resources(), 0.0);
  const double M = dprs::DistanceM(lambda0, opt.lambda);
  const dprs::BoundInputs bi =
      dprs::MakeBoundInputs(inst, M, a.T, a.eps, config.privacy.delta,
                            config.privacy.bound_norm);
  if (a.step == "diminishing") {
    config.step = dprs::Diminishing{a.nu};
  } else if (a.step == "constant") {
    config.step = dprs::ConstantStep{a.nu};
  } else if (a.step == "theorem") {
    if (!is_private) throw dprs::InvalidInputError("theorem step needs a private mode");
    const double B = dprs::TheoremStepB(config.privacy.regime, bi.sigma,
                                        bi.s_bar_total_norm, a.T, a.eps,
                                        config.privacy.delta);
    config.step = dprs::TheoremConstant{M, B, a.T};
  } else {
    throw dprs::InvalidInputError("unknown step " + a.step);
  }

  std::unique_ptr<std::ofstream> log_file;
  std::unique_ptr<dprs::JsonlMessageLog> log;
  if (!a.log_out.empty()) {
    log_file = std::make_unique<std::ofstream>(a.log_out, std::ios::binary);
    if (!*log_file) throw dprs::InvalidInputError("cannot write " + a.log_out);
    log = std::make_unique<dprs::JsonlMessageLog>(*log_file);
    config.observer = log.get();
  }

  const dprs::RunTrace trace = dprs::Run(inst, config);

  dprs::SummaryOptions so;
  so.seed = a.seed;
  if (is_private) so.privacy = config.privacy;
  dprs::BoundReport br;
  br.M = M;
  br.sigma = bi.sigma;
  br.s_bar_total_norm = bi.s_bar_total_norm;
  if (a.eps > 0) br.pure = dprs::PureBound(bi);
  if (config.mode == dprs::Mode::kApproxDp) br.approx = dprs::ApproxBound(bi);
  so.bounds = br;

  if (!a.trace_out.empty()) Emit(a.trace_out, dprs::TraceToCsv(trace));
  const std::string summary = dprs::SummaryToJson(trace, so);
  if (!a.summary_out.empty()) {
    Emit(a.summary_out, summary);
  } else if (a.trace_out.empty()) {
    std::cout << summary;
  }
  if (a.trace_out.empty() || a.trace_out != "-") {
    std::cerr << "best gap_pct: " << dprs::FormatReal(trace.best.gap_pct)
              << " at t=" << trace.best.t << "\n";
  }
  return kExitOk;
}

struct SweepArgs {
  std::string params_file;
  std::optional<std::size_t> k, m;
  std::string mode = "approx";
  std::vector<double> eps{0.05, 0.10, 0.15, 0.20, 0.25};
  std::vector<double> delta{0.05, 0.10, 0.15, 0.20};
  std::vector<double> shares{0.50, 0.30, 0.15};
  std::vector<std::string> markets{"1.2"};
  std::size_t runs = 100;
  std::size_t T = 100;
  std::uint64_t seed = 0;
  double nu = 1.0;
  std::string out;
  bool quiet = false;
};

int CmdSweep(const SweepArgs& a) {
  dprs::SweepSpec spec;
  spec.params = LoadParams(a.params_file, a.k, a.m);
  spec.mode = ParseMode(a.mode);
  spec.epsilons = a.eps;
  spec.deltas = a.delta;
  spec.shares = a.shares;
  spec.markets.clear();
  for (const std::string& mk : a.markets) {
    if (mk == "K") {
      spec.markets.push_back(static_cast<double>(spec.params.parties));
    } else {
      try {
        spec.markets.push_back(std::stod(mk));
      } catch (const std::exception&) {
        throw dprs::InvalidInputError("bad market value " + mk);
      }
    }
  }
  spec.runs = a.runs;
  spec.T = a.T;
  spec.seed = a.seed;
  spec.step = dprs::Diminishing{a.nu};
  const dprs::SweepResult result =
      dprs::RunSweep(spec, a.quiet ? nullptr : &std::cerr);
  Emit(a.out, result.ToCsv());
  return kExitOk;
}

struct ConvergeArgs {
  std::string params_file;
  std::optional<std::size_t> k, m;
  std::size_t runs = 100;
  std::size_t iters = 1000;
  std::uint64_t seed = 0;
  double nu = 1.0;
  std::string out;
  bool quiet = false;
};

int CmdConverge(const ConvergeArgs& a) {
  dprs::ConvergenceSpec spec;
  spec.params = LoadParams(a.params_file, a.k, a.m);
  spec.runs = a.runs;
  spec.iters = a.iters;
  spec.seed = a.seed;
  spec.step = dprs::Diminishing{a.nu};
  const dprs::ConvergenceResult result =
      dprs::RunConvergence(spec, a.quiet ? nullptr : &std::cerr);
  Emit(a.out, result.ToCsv());
  return kExitOk;
}

struct BoundsArgs {
  std::string instance;
  std::size_t T = 100;
  double eps = 0.1;
  double delta = 0.1;
  std::string norm = "l2";
};

int CmdBounds(const BoundsArgs& a) {
  const dprs::Instance inst = dprs::ReadInstanceFile(a.instance);
  const dprs::CentralizedSolution opt = dprs::SolveCentralized(inst);
  const double M =
      dprs::DistanceM(dprs::Vector(inst.num_resources(), 0.0), opt.lambda);
  const dprs::BoundInputs bi =
      dprs::MakeBoundInputs(inst, M, a.T, a.eps, a.delta, ParseNorm(a.norm));
  std::cout << "M: " << dprs::FormatReal(bi.M) << "\n"
            << "sigma: " << dprs::FormatReal(bi.sigma) << "\n"
            << "s_bar_total_norm: " << dprs::FormatReal(bi.s_bar_total_norm) << "\n"
            << "T: " << bi.T << "\n"
            << "epsilon: " << dprs::FormatReal(bi.epsilon) << "\n"
            << "delta: " << dprs::FormatReal(bi.delta) << "\n"
            << "pure_bound: " << dprs::FormatReal(dprs::PureBound(bi)) << "\n";
  if (a.eps > 0 && a.eps < 0.9 && a.delta > 0 && a.delta <= 1) {
    std::cout << "approx_bound: " << dprs::FormatReal(dprs::ApproxBound(bi))
              << "\n";
  } else {
    std::cout << "approx_bound: n/a\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-party resource sharing by dual decomposition"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--params", gen.params_file, "JSON generator params");
  gen_cmd->add_option("--k", gen.k, "Number of parties");
  gen_cmd->add_option("--m", gen.m, "Number of shared resources");
  gen_cmd->add_flag("--no-demands", gen.no_demands, "Skip demand rows");
  gen_cmd->add_option("--out,-o", gen.out, "Output path (default stdout)");

  std::string solve_instance;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Centralized oracle report");
  solve_cmd->add_option("instance", solve_instance, "Instance JSON")->required();

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run the decomposition");
  run_cmd->add_option("instance", run.instance, "Instance JSON")->required();
  run_cmd->add_option("--mode", run.mode, "datahiding | pure | approx")
      ->check(CLI::IsMember({"datahiding", "pure", "approx"}));
  run_cmd->add_option("--eps", run.eps, "Privacy epsilon");
  run_cmd->add_option("--delta", run.delta, "Privacy delta (approx)");
  run_cmd->add_option("--T", run.T, "Iteration budget of the private modes");
  run_cmd->add_option("--iters", run.iters,
                      "Iterations to run (default T, or 1000 without privacy)");
  run_cmd->add_option("--step", run.step, "diminishing | constant | theorem")
      ->check(CLI::IsMember({"diminishing", "constant", "theorem"}));
  run_cmd->add_option("--nu", run.nu, "nu0 (diminishing) or nu (constant)");
  run_cmd->add_option("--norm", run.norm, "l2 | linf")
      ->check(CLI::IsMember({"l2", "linf"}));
  run_cmd->add_option("--seed", run.seed, "Noise seed");
  run_cmd->add_option("--trace", run.trace_out, "Trace CSV path");
  run_cmd->add_option("--summary", run.summary_out, "Summary JSON path");
  run_cmd->add_option("--log", run.log_out, "Released-message JSONL path");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Private parameter sweep");
  sweep_cmd->add_option("--params", sweep.params_file, "JSON generator params");
  sweep_cmd->add_option("--k", sweep.k, "Number of parties");
  sweep_cmd->add_option("--m", sweep.m, "Number of shared resources");
  sweep_cmd->add_option("--mode", sweep.mode, "pure | approx")
      ->check(CLI::IsMember({"pure", "approx"}));
  sweep_cmd->add_option("--eps", sweep.eps, "Epsilon grid")->delimiter(',');
  sweep_cmd->add_option("--delta", sweep.delta, "Delta grid")->delimiter(',');
  sweep_cmd->add_option("--shares", sweep.shares, "Party-1 shares")->delimiter(',');
  sweep_cmd->add_option("--markets", sweep.markets, "Market factors, K for all")
      ->delimiter(',');
  sweep_cmd->add_option("--runs", sweep.runs, "Runs per cell");
  sweep_cmd->add_option("--T", sweep.T, "Iterations per run");
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed");
  sweep_cmd->add_option("--nu", sweep.nu, "nu0 of the diminishing step");
  sweep_cmd->add_option("--out,-o", sweep.out, "Output CSV (default stdout)");
  sweep_cmd->add_flag("--quiet,-q", sweep.quiet, "No progress output");

  ConvergeArgs conv;
  CLI::App* conv_cmd =
      app.add_subcommand("converge", "Data-hiding convergence over many runs");
  conv_cmd->add_option("--params", conv.params_file, "JSON generator params");
  conv_cmd->add_option("--k", conv.k, "Number of parties");
  conv_cmd->add_option("--m", conv.m, "Number of shared resources");
  conv_cmd->add_option("--runs", conv.runs, "Number of runs");
  conv_cmd->add_option("--iters", conv.iters, "Iterations per run");
  conv_cmd->add_option("--seed", conv.seed, "Base seed");
  conv_cmd->add_option("--nu", conv.nu, "nu0 of the diminishing step");
  conv_cmd->add_option("--out,-o", conv.out, "Output CSV (default stdout)");
  conv_cmd->add_flag("--quiet,-q", conv.quiet, "No progress output");

  BoundsArgs bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Suboptimality bounds");
  bounds_cmd->add_option("instance", bounds.instance, "Instance JSON")->required();
  bounds_cmd->add_option("--T", bounds.T, "Iterations");
  bounds_cmd->add_option("--eps", bounds.eps, "Epsilon");
  bounds_cmd->add_option("--delta", bounds.delta, "Delta");
  bounds_cmd->add_option("--norm", bounds.norm, "l2 | linf")
      ->check(CLI::IsMember({"l2", "linf"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen);
    if (*solve_cmd) return CmdSolve(solve_instance);
    if (*run_cmd) return CmdRun(run);
    if (*sweep_cmd) return CmdSweep(sweep);
    if (*conv_cmd) return CmdConverge(conv);
    if (*bounds_cmd) return CmdBounds(bounds);
  } catch (const dprs::BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const dprs::InfeasibleError& e) {
    std::cerr << "status: Infeasible\nerror: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const dprs::UnboundedError& e) {
    std::cerr << "status: Unbounded\nerror: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const dprs::NumericalFailure& e) {
    std::cerr << "error: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dprs::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
