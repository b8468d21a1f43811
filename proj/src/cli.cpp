// Copyright 2026 The zxq Authors
//
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

#include "zxq/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zxq/circuit.hpp"
#include "zxq/fixtures.hpp"
#include "zxq/harness.hpp"
#include "zxq/phase_algebra.hpp"
#include "zxq/serialize.hpp"
#include "zxq/simplify.hpp"

namespace zxq {

namespace {

/// Input that cannot be read or parsed; maps to the usage exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

double default_tolerance() {
  const char* env = std::getenv("ZXQ_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw InputError(std::string("ZXQ_TOL must be a positive number, got '") + env + "'");
  }
  return tol;
}

std::string angle_line(const char* label, const Phase& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s = %.12f rad (%.12f pi)", label, p.to_radians(),
                p.to_radians() / kPi);
  return buf;
}

std::string complex_str(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

}  // namespace

Diagram load_diagram(const std::string& path) {
  const std::string text = read_file(path);
  bool json = ends_with(path, ".zxg");
  if (!json && !ends_with(path, ".zxc")) {
    const auto first = text.find_first_not_of(" \t\r\n");
    json = first != std::string::npos && text[first] == '{';
  }
  if (json) return deserialize(text);
  return circuit_to_diagram(parse_circuit(text));
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ZX-calculus diagram engine", "zxq"};
  app.require_subcommand(1);

  double tol = 0.0;
  std::string file_a;
  std::string file_b;
  std::string output;
  std::string trace_path;
  std::size_t budget = StrategyConfig{}.step_budget;
  std::string phase_a;
  std::string phase_b;
  std::string phase_g;
  std::string campaign;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string export_dir;

  auto* eval = app.add_subcommand("eval", "print the matrix of a diagram or circuit");
  eval->add_option("file", file_a, ".zxc or .zxg file")->required();

  auto* check = app.add_subcommand("check", "compare two inputs up to a non-zero scalar");
  check->add_option("a", file_a)->required();
  check->add_option("b", file_b)->required();
  check->add_option("--tol", tol, "tolerance (default 1e-9 or $ZXQ_TOL)");

  auto* simp = app.add_subcommand("simplify", "simplify a diagram and write it as .zxg");
  simp->add_option("input", file_a)->required();
  simp->add_option("-o,--output", output, "output .zxg path")->required();
  simp->add_option("--trace", trace_path, "write the rewrite trace here");
  simp->add_option("--budget", budget, "step budget")->check(CLI::PositiveNumber);

  auto* euler = app.add_subcommand("euler", "X-Z-X angles equal to the Z-X-Z chain a1 b1 g1");
  euler->add_option("a1", phase_a, "phase as p/d (units of pi) or f:<radians>")->required();
  euler->add_option("b1", phase_b)->required();
  euler->add_option("g1", phase_g)->required();

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", campaign)
      ->required()
      ->check(CLI::IsMember({"rules", "relations", "pformulas"}));
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--samples", samples, "samples per case")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "tolerance (default 1e-9 or $ZXQ_TOL)");

  auto* fixtures = app.add_subcommand("fixtures", "relation fixtures");
  fixtures->require_subcommand(1);
  auto* fexport = fixtures->add_subcommand("export", "write the fixtures as .zxc files");
  fexport->add_option("dir", export_dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tol == 0.0) tol = default_tolerance();
    if (!(tol > 0.0)) throw InputError("--tol must be positive");

    if (*eval) {
      out << dump_matrix(evaluate(load_diagram(file_a)));
      return kExitOk;
    }

    if (*check) {
      const ComplexMatrix a = evaluate(load_diagram(file_a));
      const ComplexMatrix b = evaluate(load_diagram(file_b));
      if (a.rows() != b.rows() || a.cols() != b.cols()) {
        out << "not equal: shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
            << b.cols() << " differ\n";
        return kExitFailure;
      }
      const ScalarVerdict v = equal_up_to_scalar(a, b, tol);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3e", v.residual);
      out << (v.equal ? "equal" : "not equal") << " residual=" << buf;
      if (v.scalar) out << " k=" << complex_str(*v.scalar);
      out << '\n';
      return v.equal ? kExitOk : kExitFailure;
    }

    if (*simp) {
      const Diagram in = load_diagram(file_a);
      StrategyConfig config;
      config.step_budget = budget;
      const SimplifyResult r = simplify(in, config);
      write_file(output, serialize(r.diagram));
      if (!trace_path.empty()) write_file(trace_path, format_trace(r.trace));
      const Cost before = cost(in);
      const Cost after = cost(r.diagram);
      out << "steps " << r.trace.steps.size() << (r.truncated ? " (budget exhausted)" : "") << '\n'
          << "spiders " << before.spiders << " -> " << after.spiders << '\n'
          << "edges " << before.edges << " -> " << after.edges << '\n'
          << "hboxes " << before.hboxes << " -> " << after.hboxes << '\n';
      return kExitOk;
    }

    if (*euler) {
      const EulerTriple in{Phase::parse(phase_a), Phase::parse(phase_b), Phase::parse(phase_g)};
      const EulerTriple r = p_rule_angles(in);
      out << angle_line("alpha2", r.alpha) << '\n'
          << angle_line("beta2", r.beta) << '\n'
          << angle_line("gamma2", r.gamma) << '\n';
      return kExitOk;
    }

    if (*verify) {
      VerificationReport report;
      if (campaign == "rules") {
        report = verify_rules(seed, samples, tol);
      } else if (campaign == "relations") {
        report = verify_relations(tol);
      } else {
        report = verify_p_formulas(seed, samples * 10, tol);
      }
      out << report.render();
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (*fexport) {
      namespace fs = std::filesystem;
      fs::create_directories(export_dir);
      std::size_t written = 0;
      for (const RelationFixture& f : clifford_t_relations()) {
        for (const char* side : {"lhs", "rhs"}) {
          char name[64];
          std::snprintf(name, sizeof name, "relation_%02d_%s.zxc", f.id, side);
          write_file((fs::path(export_dir) / name).string(), fixture_text(f.id, side));
          ++written;
        }
      }
      for (char c : {'A', 'B', 'C', 'D'}) {
        write_file((fs::path(export_dir) / (std::string(1, c) + ".zxc")).string(),
                   print_circuit(fixture_circuit(c)));
        ++written;
      }
      out << "wrote " << written << " files to " << export_dir << '\n';
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DiagramParseError& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CircuitParseError& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PhaseParseError& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DiagramError& e) {
    err << "zxq: invalid diagram: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "zxq: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace zxq
