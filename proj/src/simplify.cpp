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

#include "zxq/simplify.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

namespace zxq {

namespace {

constexpr std::array<std::string_view, 5> kCoreRules{"S1", "S2", "HH", "Hf", "Cy"};

struct Session {
  const RuleLibrary& lib;
  const StrategyConfig& config;
  std::size_t used = 0;

  bool exhausted() const { return used >= config.step_budget; }

  /// Runs the core pass to a fixpoint on d, recording into trace.
  void core(Diagram& d, RewriteTrace& trace) {
    while (!exhausted()) {
      bool applied = false;
      for (std::string_view name : kCoreRules) {
        if (!config.enabled(name)) continue;
        const RewriteRule& rule = lib.get(name);
        const auto sites = rule.matches(d, Direction::Forward);
        if (sites.empty()) continue;
        apply_step(d, rule, sites.front(), Direction::Forward, trace);
        ++used;
        applied = true;
        break;
      }
      if (!applied) return;
    }
  }

  /// Tries optional steps; keeps the first whose core pass lowers the cost.
  bool improve(Diagram& d, RewriteTrace& trace, std::mt19937_64& rng) {
    struct Candidate {
      std::string_view rule;
      Direction dir;
      Site site;
    };
    std::vector<Candidate> candidates;
    const std::pair<std::string_view, Direction> kinds[] = {
        {"H2", Direction::Forward}, {"H2", Direction::Reverse},
        {"P", Direction::Forward}, {"P", Direction::Reverse}};
    for (const auto& [name, dir] : kinds) {
      if (!config.enabled(name)) continue;
      for (Site& s : lib.get(name).matches(d, dir)) {
        // A colour change can only pay off next to an H-box.
        if (name == "H2" && dir == Direction::Forward) {
          const auto& row = d.adjacency(s.vertices.front());
          if (std::none_of(row.begin(), row.end(), [&](const auto& kv) {
                return d.type(kv.first) == VertexType::H;
              })) {
            continue;
          }
        }
        candidates.push_back({name, dir, std::move(s)});
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    const Cost before = cost(d);
    for (const Candidate& c : candidates) {
      Diagram trial = d;
      RewriteTrace sub;
      const std::size_t saved = used;
      apply_step(trial, lib.get(c.rule), c.site, c.dir, sub);
      ++used;
      core(trial, sub);
      if (cost(trial) < before) {
        d = std::move(trial);
        trace.steps.insert(trace.steps.end(), sub.steps.begin(), sub.steps.end());
        return true;
      }
      used = saved;
      if (exhausted()) return false;
    }
    return false;
  }
};

}  // namespace

bool StrategyConfig::enabled(std::string_view rule) const {
  return enabled_rules.empty() || enabled_rules.contains(std::string(rule));
}

void StrategyConfig::validate() const {
  if (step_budget == 0) throw std::invalid_argument("step budget must be positive");
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
  }
}

Cost cost(const Diagram& d) { return {d.spider_count(), d.num_edges(), d.hbox_count()}; }

void apply_step(Diagram& d, const RewriteRule& rule, const Site& site, Direction dir,
                RewriteTrace& trace) {
  RewriteStep step;
  step.rule = std::string(rule.name());
  step.direction = dir;
  step.site = site;
  step.digest_before = digest(d);
  rule.rewrite(d, site, dir);
  step.digest_after = digest(d);
  trace.steps.push_back(std::move(step));
}

SimplifyResult simplify(const Diagram& d, const StrategyConfig& config) {
  config.validate();
  static const RuleLibrary lib = RuleLibrary::standard();
  Session session{lib, config};
  SimplifyResult result;
  result.trace.initial = d;
  Diagram current = d;
  session.core(current, result.trace);
  if (config.optional_passes) {
    std::mt19937_64 rng(config.seed);
    while (!session.exhausted() && session.improve(current, result.trace, rng)) {
    }
  }
  result.truncated = session.exhausted();
  result.trace.final_diagram = current;
  result.diagram = std::move(current);
  return result;
}

Diagram replay(const RewriteTrace& trace, const RuleLibrary& lib) {
  Diagram d = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RewriteStep& s = trace.steps[i];
    if (digest(d) != s.digest_before) {
      throw std::runtime_error("replay: digest mismatch before step " + std::to_string(i));
    }
    lib.get(s.rule).rewrite(d, s.site, s.direction);
    if (digest(d) != s.digest_after) {
      throw std::runtime_error("replay: digest mismatch after step " + std::to_string(i));
    }
  }
  return d;
}

std::string format_step(const RewriteStep& step) {
  std::ostringstream out;
  out << step.rule;
  if (step.direction == Direction::Reverse) out << ":rev";
  out << " @ [";
  bool first = true;
  auto put = [&](VertexId v) {
    if (!first) out << ',';
    out << v;
    first = false;
  };
  for (VertexId v : step.site.vertices) put(v);
  for (const Edge& e : step.site.edges) {
    put(e.a);
    put(e.b);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08x->%08x", step.digest_before, step.digest_after);
  out << "] digest:" << buf;
  return out.str();
}

std::string format_trace(const RewriteTrace& trace) {
  std::string out;
  for (const RewriteStep& s : trace.steps) out += format_step(s) + "\n";
  return out;
}

}  // namespace zxq
