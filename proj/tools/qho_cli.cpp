// qho: command-line front end for the quaternionic oscillator library.
//
//   qho spectrum --states FILE|-      energy table, closed form vs expectation
//   qho gram     --states FILE|-      Gram matrix against its reference
//   qho verify   [--suite NAME]       invariant suites
//   qho sample   --states FILE|-      values along a grid (CSV by default)
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 failed check.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

using namespace qho::cli;

std::vector<StateDescriptor> load_states(const std::string& path, const DescriptorDefaults& defaults) {
  if (path.empty()) throw CLI::RequiredError("--states");
  if (path == "-") return read_descriptors(std::cin, defaults);
  std::ifstream in(path);
  if (!in) throw qho::ValidationError("cannot open states file '" + path + "'");
  return read_descriptors(in, defaults);
}

void emit(const Outcome& outcome, double wall_seconds) {
  if (outcome.csv) {
    std::cout << outcome.table.str();
    return;
  }
  Json doc = outcome.body;
  doc["footer"] = Json{{"wall_time_s", wall_seconds}};
  std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic quantum harmonic oscillator toolkit"};
  app.require_subcommand(1);

  Options opts;
  std::string states_path;
  std::string format;

  auto add_common = [&](CLI::App* sub, bool with_states) {
    if (with_states) sub->add_option("--states", states_path, "descriptor file (JSON lines), '-' for stdin");
    sub->add_option("--time", opts.time, "evaluation time t");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--mu", opts.defaults.params.mu, "mass");
    sub->add_option("--omega", opts.defaults.params.omega, "angular frequency");
    sub->add_option("--hbar", opts.defaults.params.hbar, "reduced Planck constant");
    sub->add_option("--tol", opts.tol, "override the pass/fail tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--quad-order", opts.quad_order, "quadrature nodes per dimension")->check(CLI::Range(1, 128));
    sub->add_flag("--conjugate-angular", opts.defaults.conjugate_angular,
                  "conjugate the j-slot spherical harmonic");
    sub->add_flag("--allow-overlap", opts.defaults.allow_overlap, "allow P and Pprime of split states to overlap");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "energy table: closed form vs expectation of H");
  add_common(spectrum, true);
  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of a homogeneous list of states");
  add_common(gram, true);
  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  add_common(verify, false);
  verify->add_option("--suite", opts.suite, "algebra|ladder|residual|radial|angular|all")
      ->check(CLI::IsMember(verify_suites()));
  CLI::App* sample = app.add_subcommand("sample", "sample a state along a grid");
  add_common(sample, true);
  sample->add_option("--grid-min", opts.grid_min, "first grid point");
  sample->add_option("--grid-max", opts.grid_max, "last grid point");
  sample->add_option("--grid-count", opts.grid_count, "number of grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    opts.defaults.params.validate();
    Outcome outcome;
    if (*verify) {
      opts.command = "verify";
      opts.csv = format == "csv";
      outcome = cmd_verify(opts);
    } else {
      CLI::App* sub = *spectrum ? spectrum : *gram ? gram : sample;
      opts.command = sub->get_name();
      opts.csv = format.empty() ? sub == sample : format == "csv";
      if (states_path.empty()) {
        std::cerr << "error: --states is required\n" << sub->help();
        return kExitUsage;
      }
      const auto states = load_states(states_path, opts.defaults);
      if (states.empty()) {
        std::cerr << "error: no state descriptors given\n";
        return kExitUsage;
      }
      if (sub == spectrum) {
        outcome = cmd_spectrum(opts, states);
      } else if (sub == gram) {
        outcome = cmd_gram(opts, states);
      } else {
        outcome = cmd_sample(opts, states);
      }
    }
    outcome.csv = opts.csv;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(outcome, wall);
    return outcome.exit_code;
  } catch (const qho::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qho::DomainError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  }
}
