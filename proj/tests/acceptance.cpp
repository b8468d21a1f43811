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

// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "zxq/circuit.hpp"
#include "zxq/harness.hpp"
#include "zxq/phase_algebra.hpp"
#include "zxq/semantics.hpp"
#include "zxq/simplify.hpp"

namespace {

using namespace zxq;
using Clock = std::chrono::steady_clock;

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool run(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = time_limit <= 0.0 || secs <= time_limit;
  const bool pass = o.ok && in_time;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " " << title << ": " << o.detail
            << " (" << buf;
  if (time_limit > 0.0) std::cout << ", limit " << time_limit << "s";
  std::cout << ")" << std::endl;
  return pass;
}

Outcome from_report(const VerificationReport& r) {
  Outcome o{r.passed(), std::to_string(r.cases) + " cases, " +
                            std::to_string(r.failures.size()) + " failures"};
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
    const auto& f = r.failures[i];
    o.detail += "; " + f.label + " seed=" + std::to_string(f.seed) + " " + f.inputs;
  }
  return o;
}

Outcome rule_soundness() {
  const VerificationReport r = verify_rules(kSeed, 100, kTol);
  Outcome o = from_report(r);
  const std::size_t expected = RuleLibrary::standard().size() * 2 * 100;
  if (RuleLibrary::standard().size() != 15 || r.cases != expected) {
    o.ok = false;
    o.detail += "; expected 15 rules x 2 directions x 100";
  }
  return o;
}

Outcome relations() {
  const VerificationReport r = verify_relations(kTol);
  Outcome o = from_report(r);
  if (r.cases != 17) {
    o.ok = false;
    o.detail += "; expected 17 relations";
  }
  return o;
}

Outcome translation() {
  std::size_t bad = 0;
  double worst = 0.0;
  std::string first;
  for (std::uint64_t i = 0; i < 500; ++i) {
    std::mt19937_64 rng(case_seed(kSeed, 3, i));
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    const Circuit c = random_circuit(rng, 2, len);
    const ScalarVerdict v =
        equal_up_to_scalar(circuit_matrix(c), evaluate(circuit_to_diagram(c)), kTol);
    worst = std::max(worst, v.residual);
    if (!v.equal) {
      if (bad++ == 0) first = "; first failure:\n" + print_circuit(c);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "500 circuits, %zu failures, max_residual=%.3e", bad, worst);
  return {bad == 0, buf + first};
}

Outcome formulas() {
  const VerificationReport r = verify_p_formulas(kSeed, 1000, kTol);
  Outcome o = from_report(r);
  for (const std::string& line : r.lines) o.detail += "\n    " + line;
  return o;
}

Outcome anchor() {
  const Complex i(0.0, 1.0);
  const SwapSolution s = generalized_color_swap({i, i, i});
  const double dev = std::max({std::abs(s.out.a - i), std::abs(s.out.b - i),
                               std::abs(s.out.c - i), std::abs(s.k - 2.0)});
  const double q = kPi / 2;
  const ComplexMatrix zxz = zxz_matrix(q, q, q);
  const ComplexMatrix xzx = xzx_matrix(q, q, q);
  const ComplexMatrix h = gate_matrix(Gate::single(GateKind::H, 0), 1);
  const ScalarVerdict v1 = equal_up_to_scalar(zxz, xzx, kTol);
  const ScalarVerdict v2 = equal_up_to_scalar(h, zxz, kTol);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "swap(i,i,i) deviation=%.3e; ZXZ vs XZX residual=%.3e; H vs ZXZ residual=%.3e",
                dev, v1.residual, v2.residual);
  return {dev <= 1e-12 && v1.equal && v2.equal, buf};
}

Outcome simplifier() {
  std::size_t bad = 0;
  std::string why;
  const RuleLibrary lib = RuleLibrary::standard();
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(case_seed(kSeed, 6, i));
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    const Circuit c = random_circuit(rng, 2, len);
    const Diagram d = circuit_to_diagram(c);
    const SimplifyResult r = simplify(d);
    std::string problem;
    if (r.truncated) problem = "budget exhausted";
    if (problem.empty() &&
        !equal_up_to_scalar(evaluate(d), evaluate(r.diagram), kTol).equal) {
      problem = "output not equivalent";
    }
    if (problem.empty()) {
      // Spider count along the recorded steps.
      Diagram cur = r.trace.initial;
      std::size_t spiders = cur.spider_count();
      for (const RewriteStep& st : r.trace.steps) {
        cur = lib.get(st.rule).apply(cur, st.site, st.direction);
        if (cur.spider_count() > spiders) {
          problem = "spider count rose at " + format_step(st);
          break;
        }
        spiders = cur.spider_count();
      }
      if (problem.empty() && !iso_equal(cur, r.diagram)) problem = "trace does not replay";
    }
    if (!problem.empty() && bad++ == 0) why = "; first: " + problem + " on\n" + print_circuit(c);
  }

  auto bare = [](const std::string& text) {
    const SimplifyResult r = simplify(circuit_to_diagram(parse_circuit(text)));
    return iso_equal(r.diagram, identity_diagram(2));
  };
  const bool cnot2 = bare("qubits 2\ncnot 0 1\ncnot 0 1\n");
  const bool h2 = bare("qubits 2\nh 0\nh 0\n");
  std::string detail = "200 circuits, " + std::to_string(bad) + " failures; CNOT;CNOT " +
                       (cnot2 ? "bare" : "NOT bare") + "; H;H " + (h2 ? "bare" : "NOT bare");
  return {bad == 0 && cnot2 && h2, detail + why};
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "rule soundness", 30.0, rule_soundness);
  all &= run(2, "Clifford+T relations", 5.0, relations);
  all &= run(3, "circuit translation", 60.0, translation);
  all &= run(4, "colour-swap and Euler formulas", 0.0, formulas);
  all &= run(5, "anchor (i,i,i) and ZXZ ~ XZX ~ H", 0.0, anchor);
  all &= run(6, "simplifier contract", 0.0, simplifier);
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
