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

#include "zxq/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "zxq/fixtures.hpp"
#include "zxq/phase_algebra.hpp"
#include "zxq/serialize.hpp"
#include "zxq/simplify.hpp"

namespace zxq {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string complex_str(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Running maximum plus pass count for one summary line.
struct Tally {
  std::size_t run = 0;
  std::size_t ok = 0;
  double worst = 0.0;

  void add(bool pass, double residual) {
    ++run;
    if (pass) ++ok;
    if (std::isnan(residual) || residual > worst) worst = residual;
  }
  std::string summary(const std::string& label) const {
    return label + ": " + std::to_string(ok) + "/" + std::to_string(run) +
           " max_residual=" + fmt("%.3e", worst);
  }
};

}  // namespace

std::string VerificationReport::body() const {
  std::ostringstream out;
  out << "campaign " << campaign << '\n';
  for (const std::string& l : lines) out << l << '\n';
  for (const VerificationFailure& f : failures) {
    out << "FAIL " << f.label << " seed=" << f.seed << " residual=" << fmt("%.3e", f.residual)
        << " inputs=" << f.inputs << '\n';
  }
  out << "cases " << cases << ", failures " << failures.size() << ": "
      << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string VerificationReport::render() const {
  return body() + "wall_time " + fmt("%.3f", wall_seconds) + " s\n";
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(seed ^ splitmix(stream)) + index);
}

Diagram embed_in_context(const RuleSample& sample, std::mt19937_64& rng) {
  Diagram d = sample.diagram;
  std::set<Edge> keep(sample.site.edges.begin(), sample.site.edges.end());
  // Boundaries named by the site must stay adjacent to it.
  std::set<VertexId> named(sample.site.vertices.begin(), sample.site.vertices.end());
  named.insert(sample.site.legs.begin(), sample.site.legs.end());
  std::vector<VertexId> inserted;
  std::vector<VertexId> boundaries = d.inputs();
  boundaries.insert(boundaries.end(), d.outputs().begin(), d.outputs().end());
  for (VertexId b : boundaries) {
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
    const VertexId x = d.neighbors(b).front();
    if (keep.contains(Edge(b, x)) || named.contains(b)) continue;
    VertexId v;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      v = d.add_hbox();
    } else {
      const VertexType c =
          std::uniform_int_distribution<int>(0, 1)(rng) ? VertexType::X : VertexType::Z;
      const Phase p = std::uniform_int_distribution<int>(0, 1)(rng)
                          ? Phase::exact(std::uniform_int_distribution<int>(0, 7)(rng), 4)
                          : Phase::radians(uniform_real(rng, 0.0, kTwoPi));
      v = d.add_spider(c, p);
      inserted.push_back(v);
    }
    d.remove_edge(b, x);
    d.add_edge(b, v);
    d.add_edge(v, x);
  }
  if (inserted.size() >= 2 && std::uniform_int_distribution<int>(0, 1)(rng)) {
    std::shuffle(inserted.begin(), inserted.end(), rng);
    d.add_edge(inserted[0], inserted[1]);
  }
  if (!inserted.empty() && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    d.add_edge(inserted.front(), d.add_output());
  }
  return d;
}

VerificationReport verify_rules(const RuleLibrary& lib, std::uint64_t seed, std::size_t samples,
                                double tol) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "rules";
  const auto names = lib.names();
  for (std::size_t r = 0; r < names.size(); ++r) {
    const RewriteRule& rule = lib.get(names[r]);
    for (Direction dir : {Direction::Forward, Direction::Reverse}) {
      Tally tally;
      const std::uint64_t stream = r * 2 + (dir == Direction::Reverse ? 1 : 0);
      for (std::size_t i = 0; i < samples; ++i) {
        const std::uint64_t cs = case_seed(seed, stream, i);
        std::mt19937_64 rng(cs);
        const RuleSample sample = rule.sample(rng, dir);
        const Diagram before = embed_in_context(sample, rng);
        double residual = std::numeric_limits<double>::infinity();
        std::string problem;
        try {
          const Diagram after = rule.apply(before, sample.site, dir);
          after.validate();
          const ScalarVerdict v = equal_up_to_scalar(evaluate(before), evaluate(after), tol);
          residual = v.residual;
          if (!v.equal) problem = "semantics differ";
        } catch (const std::exception& e) {
          problem = e.what();
        }
        tally.add(problem.empty(), residual);
        ++report.cases;
        if (!problem.empty()) {
          report.failures.push_back({names[r] + " " + std::string(to_string(dir)),
                                     problem + "; diagram " + digest_hex(before), residual, cs});
        }
      }
      report.lines.push_back(tally.summary("rule " + names[r] + " " + std::string(to_string(dir))));
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_rules(std::uint64_t seed, std::size_t samples, double tol) {
  return verify_rules(RuleLibrary::standard(), seed, samples, tol);
}

VerificationReport verify_relations(double tol) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "relations";
  const auto fixtures = clifford_t_relations();
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  for (const RelationFixture& f : fixtures) {
    ++report.cases;
    const std::string label = "relation " + std::to_string(f.id);
    std::string line = label + " (" + f.name + "):";
    const ComplexMatrix ml = circuit_matrix(f.lhs);
    const ComplexMatrix mr = circuit_matrix(f.rhs);
    auto check = [&](const std::string& what, const ScalarVerdict& v) {
      line += " " + what + "=" + fmt("%.3e", v.residual);
      if (!v.equal) report.failures.push_back({label + " " + what, f.name, v.residual, 0});
    };
    check("matrix", equal_up_to_scalar(ml, mr, tol));
    const Diagram dl = circuit_to_diagram(f.lhs);
    const Diagram dr = circuit_to_diagram(f.rhs);
    check("diagram", equal_up_to_scalar(evaluate(dl), evaluate(dr), tol));
    if (f.against_identity) {
      const ScalarVerdict v = equal_up_to_scalar(id4, ml, tol);
      check("identity", v);
      if (v.scalar) {
        line += " k=" + complex_str(*v.scalar) + " |k|=" + fmt("%.12g", std::abs(*v.scalar));
      }
    } else {
      const SimplifyResult sl = simplify(dl);
      const SimplifyResult sr = simplify(dr);
      double worst = 0.0;
      bool ok = !sl.truncated && !sr.truncated;
      for (const Diagram* s : {&sl.diagram, &sr.diagram}) {
        const ScalarVerdict v = equal_up_to_scalar(mr, evaluate(*s), tol);
        worst = std::max(worst, v.residual);
        ok = ok && v.equal;
      }
      line += " simplified=" + fmt("%.3e", worst) + " steps=" +
              std::to_string(sl.trace.steps.size()) + "+" + std::to_string(sr.trace.steps.size());
      if (!ok) report.failures.push_back({label + " simplified", f.name, worst, 0});
    }
    report.lines.push_back(line);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_p_formulas(std::uint64_t seed, std::size_t samples, double tol) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "pformulas";
  auto fail = [&](const std::string& label, const std::string& inputs, double residual,
                  std::uint64_t cs) { report.failures.push_back({label, inputs, residual, cs}); };
  auto angles_str = [](double a, double b, double c) {
    return "(" + fmt("%.17g", a) + ", " + fmt("%.17g", b) + ", " + fmt("%.17g", c) + ")";
  };

  // Anchor: (i, i, i) maps to itself with k = 2.
  {
    const Complex i{0.0, 1.0};
    const SwapSolution s = generalized_color_swap({i, i, i});
    const double dev = std::max({std::abs(s.out.a - i), std::abs(s.out.b - i),
                                 std::abs(s.out.c - i), std::abs(s.k - 2.0)});
    ++report.cases;
    if (dev > 1e-12) fail("swap anchor (i,i,i)", "(i,i,i)", dev, 0);
    report.lines.push_back("swap anchor (i,i,i): out=(" + complex_str(s.out.a) + ", " +
                           complex_str(s.out.b) + ", " + complex_str(s.out.c) +
                           ") k=" + complex_str(s.k) + " deviation=" + fmt("%.3e", dev));
  }

  // Generalised colour swap: unit circle and a radial family.
  {
    Tally tally;
    Tally closure;
    std::size_t skipped = 0;
    for (std::size_t n = 0; n < samples; ++n) {
      const std::uint64_t cs = case_seed(seed, 1, n);
      std::mt19937_64 rng(cs);
      const bool unit = n % 2 == 0;
      GeneralPhaseTriple t;
      auto draw = [&]() {
        const double r = unit ? 1.0 : uniform_real(rng, 0.25, 4.0);
        return std::polar(r, uniform_real(rng, 0.0, kTwoPi));
      };
      // Stay clear of the singular sets so conditioning is not the thing
      // being measured.
      for (;;) {
        t = {draw(), draw(), draw()};
        const double m = std::max({1.0, std::abs(t.a), std::abs(t.b), std::abs(t.c)});
        const double m3 = m * m * m;
        const Complex tau = (1.0 - t.b) * (t.a + t.c) + (1.0 + t.b) * (1.0 + t.a * t.c);
        const Complex u = (1.0 + t.b) * (t.a * t.c - 1.0);
        const Complex v = (1.0 - t.b) * (t.a - t.c);
        const Complex s = (1.0 - t.b) * (t.a + t.c) - (1.0 + t.b) * (1.0 + t.a * t.c);
        const Complex tt = tau * (u * u - v * v);
        if (std::abs(s) > 1e-6 * m3 && std::abs(tt) > 1e-6 * m3 * m3 * m3 &&
            std::abs(s * tau * tau + tt) > 1e-6 * m3 * m3 * m3) {
          break;
        }
        ++skipped;
      }
      const std::string inputs = "(" + complex_str(t.a) + ", " + complex_str(t.b) + ", " +
                                 complex_str(t.c) + ")";
      ++report.cases;
      try {
        const SwapSolution s = generalized_color_swap(t);
        const double res = color_swap_residual(t, s.out, s.k);
        const bool ok = res <= tol && std::abs(s.k) > 0.0;
        tally.add(ok, res);
        if (!ok) fail("colour swap identity", inputs, res, cs);
        if (unit) {
          const double dev = std::max({std::abs(std::abs(s.out.a) - 1.0),
                                       std::abs(std::abs(s.out.b) - 1.0),
                                       std::abs(std::abs(s.out.c) - 1.0)});
          closure.add(dev <= tol, dev);
          if (dev > tol) fail("unit-modulus closure", inputs, dev, cs);
        }
      } catch (const SingularConfiguration& e) {
        tally.add(false, std::numeric_limits<double>::infinity());
        fail("colour swap identity", inputs + " " + e.what(),
             std::numeric_limits<double>::infinity(), cs);
      }
    }
    report.lines.push_back(tally.summary("colour swap identity"));
    report.lines.push_back(closure.summary("unit-modulus closure"));
    report.lines.push_back("near-singular draws resampled: " + std::to_string(skipped));
  }

  // Euler-angle swap: recomposition and agreement with matrix extraction.
  {
    Tally recompose;
    Tally agree;
    for (std::size_t n = 0; n < samples; ++n) {
      const std::uint64_t cs = case_seed(seed, 2, n);
      std::mt19937_64 rng(cs);
      const double a = uniform_real(rng, 0.0, kTwoPi);
      const double b = uniform_real(rng, 0.0, kTwoPi);
      const double g = uniform_real(rng, 0.0, kTwoPi);
      const EulerTriple in{Phase::radians(a), Phase::radians(b), Phase::radians(g)};
      const EulerTriple out = p_rule_angles(in);
      const double res = equal_up_to_scalar(zxz_matrix(in), xzx_matrix(out), tol).residual;
      ++report.cases;
      recompose.add(res <= tol, res);
      if (res > tol) fail("euler recomposition", angles_str(a, b, g), res, cs);
      const EulerTriple ex = euler_xzx_extract(zxz_matrix(in));
      const double dev = std::max({angular_distance(out.alpha.to_radians(), ex.alpha.to_radians()),
                                   angular_distance(out.beta.to_radians(), ex.beta.to_radians()),
                                   angular_distance(out.gamma.to_radians(), ex.gamma.to_radians())});
      agree.add(dev <= 1e-7, dev);
      if (dev > 1e-7) fail("euler agrees with extraction", angles_str(a, b, g), dev, cs);
    }
    report.lines.push_back(recompose.summary("euler recomposition"));
    report.lines.push_back(agree.summary("euler agrees with extraction"));
  }

  // Special families, 200 each at the default sample count.
  const std::size_t family = std::max<std::size_t>(1, samples / 5);
  for (int kind = 0; kind < 2; ++kind) {
    Tally tally;
    const std::string label = kind == 0 ? "alpha1=gamma1 gives alpha2=gamma2"
                                        : "alpha1=-gamma1 gives alpha2=pi+gamma2";
    for (std::size_t n = 0; n < family; ++n) {
      const std::uint64_t cs = case_seed(seed, 3 + static_cast<std::uint64_t>(kind), n);
      std::mt19937_64 rng(cs);
      const double a = uniform_real(rng, 0.0, kTwoPi);
      const double b = uniform_real(rng, 0.0, kTwoPi);
      const double g = kind == 0 ? a : normalize_angle(-a);
      const EulerTriple out =
          p_rule_angles({Phase::radians(a), Phase::radians(b), Phase::radians(g)});
      const double shift = kind == 0 ? 0.0 : kPi;
      const double dev =
          angular_distance(out.alpha.to_radians(), out.gamma.to_radians() + shift);
      ++report.cases;
      tally.add(dev <= tol, dev);
      if (dev > tol) fail(label, angles_str(a, b, g), dev, cs);
    }
    report.lines.push_back(tally.summary(label));
  }

  // Degenerate pathways: z = 0, z1 = 0 and beta1 = 0.
  {
    Tally tally;
    std::size_t gauge_bad = 0;
    for (std::size_t n = 0; n < family; ++n) {
      const std::uint64_t cs = case_seed(seed, 5, n);
      std::mt19937_64 rng(cs);
      const double r = uniform_real(rng, 0.0, kTwoPi);
      const double s = uniform_real(rng, 0.0, kTwoPi);
      double a = 0.0, b = 0.0, g = 0.0;
      switch (n % 3) {
        case 0: a = r; b = kPi; g = normalize_angle(r - kPi); break;  // z = 0
        case 1: a = 0.0; b = s; g = 0.0; break;                        // z1 = 0
        default: a = r; b = 0.0; g = s; break;                         // beta1 = 0
      }
      const EulerTriple out =
          p_rule_angles({Phase::radians(a), Phase::radians(b), Phase::radians(g)});
      const double res = equal_up_to_scalar(zxz_matrix(a, b, g), xzx_matrix(out), tol).residual;
      const double b2 = out.beta.to_radians();
      const bool edge = angular_distance(b2, 0.0) <= kPhaseTolerance ||
                        angular_distance(b2, kPi) <= kPhaseTolerance;
      const bool gauge = !edge || out.gamma.to_radians() == 0.0;
      if (!gauge) ++gauge_bad;
      ++report.cases;
      tally.add(res <= tol && gauge, res);
      if (res > tol || !gauge) fail("degenerate pathway", angles_str(a, b, g), res, cs);
    }
    report.lines.push_back(tally.summary("degenerate pathways") +
                           " gauge_violations=" + std::to_string(gauge_bad));
  }

  report.wall_seconds = seconds_since(start);
  return report;
}

Circuit random_circuit(std::mt19937_64& rng, std::size_t width, std::size_t length) {
  using K = GateKind;
  static constexpr std::array<K, 10> kinds{K::H, K::T, K::Tdg, K::S, K::Sdg,
                                            K::Z, K::X, K::CNOT, K::CZ, K::SWAP};
  Circuit c;
  c.width = width;
  std::uniform_int_distribution<std::size_t> qubit(0, width - 1);
  while (c.gates.size() < length) {
    const K k = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    Gate g;
    g.kind = k;
    g.q0 = qubit(rng);
    if (g.is_two_qubit()) {
      if (width < 2) continue;
      do {
        g.q1 = qubit(rng);
      } while (g.q1 == g.q0);
    }
    c.add(g);
  }
  return c;
}

Diagram random_diagram(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                       std::size_t spiders) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  Diagram d;
  std::vector<VertexId> ins;
  std::vector<VertexId> outs;
  for (std::size_t i = 0; i < n_in; ++i) ins.push_back(d.add_input());
  for (std::size_t i = 0; i < n_out; ++i) outs.push_back(d.add_output());
  std::vector<VertexId> sp;
  for (std::size_t i = 0; i < std::max<std::size_t>(spiders, 1); ++i) {
    const VertexType c = pick(2) ? VertexType::X : VertexType::Z;
    const Phase p = pick(2) ? Phase::exact(static_cast<std::int64_t>(pick(8)), 4)
                            : Phase::radians(uniform_real(rng, 0.0, kTwoPi));
    sp.push_back(d.add_spider(c, p));
  }
  for (VertexId b : ins) d.add_edge(b, sp[pick(sp.size())]);
  for (VertexId b : outs) d.add_edge(b, sp[pick(sp.size())]);
  const std::size_t extra = pick(sp.size() + 2);
  for (std::size_t i = 0; i < extra; ++i) {
    const VertexId u = sp[pick(sp.size())];
    const VertexId w = sp[pick(sp.size())];
    if (u == w && pick(3) != 0) continue;
    if (pick(4) == 0 && u != w) {
      const VertexId h = d.add_hbox();
      d.add_edge(u, h);
      d.add_edge(h, w);
    } else {
      d.add_edge(u, w);
    }
  }
  return d;
}

}  // namespace zxq
