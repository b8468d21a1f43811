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

#include "zxq/serialize.hpp"

#include <map>

#include "json.hpp"

namespace zxq {

using json = nlohmann::json;

namespace {

json phase_to_json(const Phase& p) {
  if (p.is_exact()) return {{"num", p.numerator()}, {"den", p.denominator()}};
  return {{"rad", p.to_radians()}};
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DiagramParseError(path, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

Phase phase_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw DiagramParseError(path, "phase must be an object");
  if (j.contains("rad")) {
    if (!j["rad"].is_number()) throw DiagramParseError(path + ".rad", "expected number");
    return Phase::radians(j["rad"].get<double>());
  }
  const json& num = field(j, "num", path);
  const json& den = field(j, "den", path);
  if (!num.is_number_integer()) throw DiagramParseError(path + ".num", "expected integer");
  if (!den.is_number_integer() || den.get<std::int64_t>() <= 0) {
    throw DiagramParseError(path + ".den", "expected positive integer");
  }
  return Phase::exact(num.get<std::int64_t>(), den.get<std::int64_t>());
}

VertexType kind_from_string(const std::string& s, const std::string& path) {
  if (s == "Z") return VertexType::Z;
  if (s == "X") return VertexType::X;
  if (s == "H") return VertexType::H;
  if (s == "in") return VertexType::Input;
  if (s == "out") return VertexType::Output;
  throw DiagramParseError(path, "unknown kind '" + s + "'");
}

}  // namespace

std::string serialize(const Diagram& d) {
  json j;
  j["inputs"] = json::array();
  for (VertexId v : d.inputs()) j["inputs"].push_back(std::to_string(v));
  j["outputs"] = json::array();
  for (VertexId v : d.outputs()) j["outputs"].push_back(std::to_string(v));
  j["nodes"] = json::array();
  for (const auto& [id, v] : d.vertices()) {
    json node{{"id", std::to_string(id)}, {"kind", std::string(to_string(v.type))}};
    if (is_spider(v.type)) node["phase"] = phase_to_json(v.phase);
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = json::array();
  for (const Edge& e : d.edges()) {
    j["edges"].push_back({std::to_string(e.a), std::to_string(e.b)});
  }
  return j.dump(2) + "\n";
}

Diagram deserialize(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DiagramParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!j.is_object()) throw DiagramParseError("$", "top level must be an object");

  Diagram d;
  std::map<std::string, VertexId> ids;
  const json& nodes = field(j, "nodes", "$");
  if (!nodes.is_array()) throw DiagramParseError("nodes", "expected array");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::string path = "nodes[" + std::to_string(k) + "]";
    const json& node = nodes[k];
    const json& id = field(node, "id", path);
    if (!id.is_string()) throw DiagramParseError(path + ".id", "expected string");
    const json& kind = field(node, "kind", path);
    if (!kind.is_string()) throw DiagramParseError(path + ".kind", "expected string");
    const VertexType type = kind_from_string(kind.get<std::string>(), path + ".kind");
    Phase phase;
    if (is_spider(type)) {
      phase = phase_from_json(field(node, "phase", path), path + ".phase");
    } else if (node.contains("phase")) {
      throw DiagramParseError(path + ".phase", "only Z/X nodes carry a phase");
    }
    if (!ids.emplace(id.get<std::string>(), d.add_vertex(type, phase)).second) {
      throw DiagramParseError(path + ".id", "duplicate id '" + id.get<std::string>() + "'");
    }
  }

  auto lookup = [&ids](const json& ref, const std::string& path) {
    if (!ref.is_string()) throw DiagramParseError(path, "expected node id string");
    auto it = ids.find(ref.get<std::string>());
    if (it == ids.end()) {
      throw DiagramParseError(path, "unknown node '" + ref.get<std::string>() + "'");
    }
    return it->second;
  };

  const json& edges = field(j, "edges", "$");
  if (!edges.is_array()) throw DiagramParseError("edges", "expected array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    if (!edges[k].is_array() || edges[k].size() != 2) {
      throw DiagramParseError(path, "edge must be a pair of ids");
    }
    d.add_edge(lookup(edges[k][0], path + "[0]"), lookup(edges[k][1], path + "[1]"));
  }

  auto order = [&](const char* key) {
    const json& list = field(j, key, "$");
    if (!list.is_array()) throw DiagramParseError(key, "expected array");
    std::vector<VertexId> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
      out.push_back(lookup(list[k], std::string(key) + "[" + std::to_string(k) + "]"));
    }
    return out;
  };
  std::vector<VertexId> inputs = order("inputs");
  std::vector<VertexId> outputs = order("outputs");
  try {
    d.set_boundary_order(std::move(inputs), std::move(outputs));
  } catch (const DiagramError& e) {
    throw DiagramParseError("inputs/outputs", e.what());
  }
  d.validate();
  return d;
}

}  // namespace zxq
