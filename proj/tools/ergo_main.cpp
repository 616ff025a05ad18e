// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ergo/bounds.hpp"
#include "ergo/clifford_group.hpp"
#include "ergo/ergotropy.hpp"
#include "ergo/experiments.hpp"
#include "ergo/io.hpp"
#include "ergo/models.hpp"
#include "ergo/spectrum.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void print_kv(const char* key, double value) {
  std::printf("%s=%.15g\n", key, value);
}

void print_kv(const char* key, long long value) {
  std::printf("%s=%lld\n", key, value);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  return out;
}

ergo::HeuristicBudget parse_budget(const std::string& text) {
  std::size_t sep = text.find_first_of("xX");
  if (sep == std::string::npos || sep == 0 || sep + 1 == text.size())
    throw std::invalid_argument("budget must look like RESTARTSxSTEPS, e.g. 50x200");
  ergo::HeuristicBudget budget;
  try {
    std::size_t used_r = 0;
    std::size_t used_s = 0;
    budget.restarts = std::stoi(text.substr(0, sep), &used_r);
    budget.steps = std::stoi(text.substr(sep + 1), &used_s);
    if (used_r != sep || used_s != text.size() - sep - 1)
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("budget must look like RESTARTSxSTEPS, e.g. 50x200");
  }
  if (budget.restarts < 1 || budget.steps < 1)
    throw std::invalid_argument("budget parts must be positive");
  return budget;
}

struct SweepArgs {
  double h = 0.0;
  double g_min = -2.0;
  double g_max = 2.0;
  int steps = 81;
  std::string out;
};

int run_sweep2q(const SweepArgs& args) {
  std::vector<ergo::SweepRow> rows =
      ergo::sweep_2q(args.h, args.g_min, args.g_max, args.steps);
  std::ofstream out = open_output(args.out);
  ergo::write_sweep_csv(out, rows);
  std::cerr << "wrote " << rows.size() << " rows to " << args.out << "\n";
  return 0;
}

struct TypicalityArgs {
  int n = 0;
  std::uint64_t samples = 200;
  std::uint64_t seed = 12345;
  double a = 2.0;
  std::string out;
  std::string ham_path;
};

int run_typicality(const TypicalityArgs& args) {
  ergo::PauliOperator h = args.ham_path.empty()
                              ? ergo::hamiltonian_tfim(args.n, 1.0)
                              : ergo::read_hamiltonian_file(args.ham_path);
  if (h.n_qubits() != args.n)
    throw std::invalid_argument("Hamiltonian acts on " +
                                std::to_string(h.n_qubits()) +
                                " qubits but --n is " + std::to_string(args.n));
  ergo::TypicalityResult result =
      ergo::run_typicality(args.n, args.samples, args.seed, args.a, h);
  std::ofstream out = open_output(args.out);
  ergo::write_typicality_csv(out, result);
  std::cerr << "wrote " << result.rows.size() << " samples to " << args.out
            << " (violations: " << result.violations
            << ", median M_inf: " << result.median_m_infinity << ")\n";
  return 0;
}

struct BoundsArgs {
  std::string state_path;
  std::string ham_path;
  int exact_n_limit = ergo::kMaxEnumQubits;
  std::string budget_text = "50x200";
  std::uint64_t seed = 1;
  bool maximize = false;
};

int run_bounds(const BoundsArgs& args) {
  ergo::HeuristicBudget budget = parse_budget(args.budget_text);
  ergo::PureState state = [&] {
    try {
      return ergo::read_state_file(args.state_path);
    } catch (const ergo::ParseError& e) {
      throw std::invalid_argument(args.state_path + ": " + e.what());
    }
  }();
  ergo::PauliOperator h = [&] {
    try {
      return ergo::read_hamiltonian_file(args.ham_path);
    } catch (const ergo::ParseError& e) {
      throw std::invalid_argument(args.ham_path + ": " + e.what());
    }
  }();
  if (args.maximize) h = h.negated();
  bool exact = state.n_qubits() <=
               std::min(args.exact_n_limit, ergo::kMaxEnumQubits);
  if (exact && state.n_qubits() == 3)
    std::cerr << "scanning all " << ergo::clifford_count(3)
              << " three-qubit frames; this can take a while\n";
  ergo::BoundReport rep =
      ergo::bound_report(state, h, budget, args.seed, args.exact_n_limit);

  print_kv("n_qubits", static_cast<long long>(rep.n_qubits));
  print_kv("maximize", static_cast<long long>(args.maximize ? 1 : 0));
  print_kv("initial_energy", rep.initial_energy);
  print_kv("l1_norm", rep.l1_norm);
  print_kv("r1", rep.r1);
  print_kv("m_infinity", rep.m_infinity);
  print_kv("bound_rearrangement", rep.bound_rearrangement);
  print_kv("bound_holder", rep.bound_holder);
  print_kv("bound_sre", rep.bound_sre);
  print_kv("clifford_ergotropy", *rep.clifford_ergotropy);
  print_kv("clifford_exact", static_cast<long long>(rep.clifford_exact ? 1 : 0));
  if (!rep.clifford_exact) {
    print_kv("heuristic_restarts", static_cast<long long>(budget.restarts));
    print_kv("heuristic_steps", static_cast<long long>(budget.steps));
    print_kv("heuristic_seed", static_cast<long long>(args.seed));
  }
  if (rep.ergotropy) {
    print_kv("ergotropy", *rep.ergotropy);
    if (rep.clifford_exact)
      print_kv("gap", *rep.ergotropy - *rep.clifford_ergotropy);
  }
  if (rep.gap_lower_rearrangement)
    print_kv("gap_lower_rearrangement", *rep.gap_lower_rearrangement);
  if (rep.gap_lower_holder) print_kv("gap_lower_holder", *rep.gap_lower_holder);
  return 0;
}

struct IsingArgs {
  std::string model;
  int n = 0;
  double g = 1.0;
  double h = 0.0;
};

int run_ising_bound(const IsingArgs& args) {
  // Product-of-magic-states initial state: per-site sorted absolute
  // coefficients (1/sqrt2, 1/sqrt2, 0).
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<double>> sites(
      static_cast<std::size_t>(args.n), {inv_sqrt2, inv_sqrt2, 0.0});

  if (args.model == "classical") {
    ergo::PauliOperator ham =
        ergo::hamiltonian_classical_ising(args.n, args.h);
    double ground = -args.n * (1.0 + std::abs(args.h));
    double bound = ergo::product_state_gap_bound(sites, ham, ground);
    std::printf("model=classical\n");
    print_kv("n_qubits", static_cast<long long>(args.n));
    print_kv("h", args.h);
    print_kv("ground_energy", ground);
    print_kv("ground_exact", 1LL);
    print_kv("gap_lower", bound);
    return 0;
  }
  if (args.model == "tfim") {
    ergo::PauliOperator ham = ergo::hamiltonian_tfim(args.n, args.g);
    bool exact = args.n <= ergo::kMaxDenseQubits;
    double ground = exact
                        ? ergo::ground_state_energy(ham)
                        : ergo::tfim_ground_energy_asymptotic(args.n, args.g);
    double bound = ergo::product_state_gap_bound(sites, ham, ground);
    auto [low, high] = ergo::tfim_bound_crossings();
    std::printf("model=tfim\n");
    print_kv("n_qubits", static_cast<long long>(args.n));
    print_kv("g", args.g);
    print_kv("ground_energy", ground);
    print_kv("ground_exact", static_cast<long long>(exact ? 1 : 0));
    print_kv("gap_lower", bound);
    print_kv("crossing_low", low);
    print_kv("crossing_high", high);
    return 0;
  }
  throw std::invalid_argument("model must be one of: tfim, classical");
}

struct SingleQubitArgs {
  double bx = 1.0 / std::sqrt(2.0);
  double by = 1.0 / std::sqrt(2.0);
  double bz = 0.0;
  double field = 1.0;
};

int run_single_qubit(const SingleQubitArgs& args) {
  double norm = std::sqrt(args.bx * args.bx + args.by * args.by +
                          args.bz * args.bz);
  if (norm > 1.0 + 1e-12)
    throw std::invalid_argument("Bloch vector must have length <= 1");
  if (args.field <= 0.0)
    throw std::invalid_argument("field must be positive");
  double r1 = std::max({std::abs(args.bx), std::abs(args.by),
                        std::abs(args.bz)});
  double erg = ergo::ergotropy_1q(args.bx, args.by, args.bz, args.field);
  double erg_cl =
      ergo::clifford_ergotropy_1q(args.bx, args.by, args.bz, args.field);
  print_kv("bx", args.bx);
  print_kv("by", args.by);
  print_kv("bz", args.bz);
  print_kv("field", args.field);
  print_kv("bloch_norm", norm);
  print_kv("r1", r1);
  print_kv("ergotropy", erg);
  print_kv("clifford_ergotropy", erg_cl);
  print_kv("gap", erg - erg_cl);
  print_kv("stabilizer_fidelity",
           ergo::stabilizer_fidelity_1q(args.bx, args.by, args.bz));
  print_kv("min_relative_entropy",
           ergo::min_relative_entropy_1q(args.bx, args.by, args.bz));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ergo: ergotropy, Clifford ergotropy, and magic-based bounds for "
      "N-qubit states and Pauli-sparse Hamiltonians"};
  app.require_subcommand(1);

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep2q",
      "Sweep the two-qubit mixed-field Ising chain with the doubled magic "
      "state and write one CSV row per coupling g");
  sweep_cmd->set_help_flag("--help", "Print this help message and exit");
  sweep_cmd->add_option("--h", sweep.h, "Longitudinal field")
      ->capture_default_str();
  sweep_cmd->add_option("--g-min", sweep.g_min, "Lowest transverse coupling")
      ->capture_default_str();
  sweep_cmd->add_option("--g-max", sweep.g_max, "Highest transverse coupling")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Grid points (>= 2)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path")->required();

  TypicalityArgs typ;
  CLI::App* typ_cmd = app.add_subcommand(
      "typicality",
      "Sample Haar-random states and record r1 and M_infinity per sample "
      "with a tail-bound violation flag");
  typ_cmd->add_option("--n", typ.n, "Qubit count (2..10)")->required();
  typ_cmd->add_option("--samples", typ.samples, "Number of Haar samples")
      ->capture_default_str();
  typ_cmd->add_option("--seed", typ.seed, "RNG seed")->capture_default_str();
  typ_cmd->add_option("--a", typ.a, "Tail-bound exponent (> 1)")
      ->capture_default_str();
  typ_cmd->add_option("--out", typ.out, "Output CSV path")->required();
  typ_cmd->add_option("--ham", typ.ham_path,
                      "Hamiltonian file for the per-sample energy column "
                      "(default: transverse-field chain at g = 1)");

  BoundsArgs bounds;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds",
      "Report ergotropy, Clifford ergotropy, and all upper bounds for a "
      "state file and a Hamiltonian file as key=value lines");
  bounds_cmd->add_option("state", bounds.state_path, "State file")->required();
  bounds_cmd->add_option("hamiltonian", bounds.ham_path, "Hamiltonian file")
      ->required();
  bounds_cmd
      ->add_option("--exact-n-limit", bounds.exact_n_limit,
                   "Exhaustive orbit scan up to this qubit count")
      ->capture_default_str();
  bounds_cmd
      ->add_option("--heuristic-budget", bounds.budget_text,
                   "RESTARTSxSTEPS for the heuristic search")
      ->capture_default_str();
  bounds_cmd->add_option("--seed", bounds.seed, "Heuristic RNG seed")
      ->capture_default_str();
  bounds_cmd->add_flag(
      "--maximize", bounds.maximize,
      "Negate the observable: bound the maximum energy that can be charged "
      "instead of extracted");

  IsingArgs ising;
  CLI::App* ising_cmd = app.add_subcommand(
      "ising-bound",
      "Gap lower bound for the product-of-magic-states initial state on an "
      "Ising chain");
  ising_cmd->set_help_flag("--help", "Print this help message and exit");
  ising_cmd->add_option("model", ising.model, "tfim or classical")->required();
  ising_cmd->add_option("--n", ising.n, "Chain length (>= 2)")->required();
  ising_cmd->add_option("--g", ising.g, "Transverse coupling (tfim)")
      ->capture_default_str();
  ising_cmd->add_option("--h", ising.h, "Longitudinal field (classical)")
      ->capture_default_str();

  SingleQubitArgs single;
  CLI::App* single_cmd = app.add_subcommand(
      "single-qubit",
      "Closed-form ergotropy, Clifford ergotropy, and magic witnesses for a "
      "Bloch vector under H = field * Z");
  single_cmd->add_option("--bx", single.bx, "Bloch x component")
      ->capture_default_str();
  single_cmd->add_option("--by", single.by, "Bloch y component")
      ->capture_default_str();
  single_cmd->add_option("--bz", single.bz, "Bloch z component")
      ->capture_default_str();
  single_cmd->add_option("--field", single.field, "Field strength (> 0)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep2q(sweep);
    if (typ_cmd->parsed()) return run_typicality(typ);
    if (bounds_cmd->parsed()) return run_bounds(bounds);
    if (ising_cmd->parsed()) return run_ising_bound(ising);
    if (single_cmd->parsed()) return run_single_qubit(single);
  } catch (const ergo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
