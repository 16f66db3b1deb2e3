// Copyright 2026 The gsys Authors.
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

#include "gsys/json_io.hpp"

#include <limits>
#include <string>

#include "gsys/errors.hpp"

namespace gsys {

namespace {

Json history_json(const MutationSequence& seq) {
  Json out = Json::array();
  for (std::size_t k : seq) out.push_back(k + 1);
  return out;
}

MutationSequence history_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("history must be an array");
  MutationSequence out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw ParseError("history entries must be integers");
    const auto k = e.get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
      throw IndexOutOfRange("history index " + std::to_string(k) + " outside 1.." +
                            std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

Json strings_json(const std::vector<std::string>& v) { return Json(v); }

Json vector_set_json(const VectorSet& vs) {
  Json out = Json::array();
  for (const IntVector& v : vs) out.push_back(json_of(v));
  return out;
}

}  // namespace

Json json_of(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(x.convert_to<long long>());
  }
  return Json(x.str());
}

Json json_of(const IntVector& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(json_of(x));
  return out;
}

Json json_of(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_of(m.row(i)));
  return out;
}

Json json_of(const MatrixSeed& seed) {
  return Json{{"b", json_of(seed.b.entries())},
              {"c", json_of(seed.c)},
              {"g", json_of(seed.g)},
              {"b0", json_of(seed.b0.entries())},
              {"history", history_json(seed.history)}};
}

Json json_of(const LaurentSeed& seed) {
  return Json{{"cluster", strings_json(seed.cluster_text())},
              {"b", json_of(seed.b.entries())},
              {"history", history_json(seed.history)}};
}

Json json_of(const CompletionResult& result) {
  Json retained = Json::array();
  for (const IntVector& c : result.retained) retained.push_back(json_of(c));
  Json out{{"retained", retained},
           {"replay", history_json(result.replay)},
           {"seed", json_of(result.seed)}};
  if (result.cluster) out["cluster"] = strings_json(result.cluster->cluster_text());
  return out;
}

Json json_of(const CanonicalSeed& node) {
  return Json{{"key", node.key},
              {"cluster", strings_json(node.cluster.cluster_text())},
              {"b", json_of(node.cluster.b.entries())},
              {"g", json_of(node.matrix.g)},
              {"history", history_json(node.matrix.history)}};
}

Json json_of(const ExchangeGraph& graph) {
  Json nodes = Json::array();
  for (const CanonicalSeed& n : graph.nodes) nodes.push_back(json_of(n));
  Json edges = Json::array();
  for (const GraphEdge& e : graph.edges) edges.push_back(Json{e.from, e.to, e.direction + 1});
  return Json{{"nodes", nodes}, {"edges", edges}, {"root", graph.root}, {"closed", graph.closed}};
}

Json json_of(const GSystemReport& report) {
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back(Json{{"condition", w.condition},
                             {"kind", w.kind},
                             {"clusters", strings_json(w.clusters)},
                             {"vectors", vector_set_json(w.vectors)},
                             {"other", vector_set_json(w.other)}});
  }
  return Json{{"mutation", report.mutation_ok},
              {"completion", report.completion_ok},
              {"uniqueness", report.uniqueness_ok},
              {"ok", report.ok()},
              {"identities_checked", report.identities_checked},
              {"witnesses", witnesses}};
}

Json json_of(const GCollection& collection) {
  Json clusters = Json::array();
  for (const GCluster& c : collection.clusters()) {
    clusters.push_back(Json{{"label", c.label()}, {"vectors", vector_set_json(c.vectors())}});
  }
  return Json{{"t0", collection.initial().label()}, {"clusters", clusters}};
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(j.get<unsigned long long>()) : Int(j.get<long long>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
      return Int(s);
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVector out;
  for (const Json& e : j) out.push_back(int_from_json(e));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
  std::vector<IntVector> rows;
  for (const Json& r : j) rows.push_back(vector_from_json(r));
  for (const IntVector& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("rows of different lengths");
  }
  return IntMatrix::from_rows(rows);
}

MatrixSeed matrix_seed_from_json(const Json& j) {
  MatrixSeed seed;
  seed.b = ExchangeMatrix(matrix_from_json(field(j, "b")));
  seed.c = matrix_from_json(field(j, "c"));
  seed.g = matrix_from_json(field(j, "g"));
  seed.b0 = ExchangeMatrix(matrix_from_json(field(j, "b0")));
  const std::size_t n = seed.b.size();
  if (seed.c.rows() != n || seed.c.cols() != n || seed.g.rows() != n || seed.g.cols() != n ||
      seed.b0.size() != n) {
    throw DimensionMismatch("seed matrices of different sizes");
  }
  seed.history = history_from_json(field(j, "history"), n);
  return seed;
}

LaurentSeed laurent_seed_from_json(const Json& j) {
  LaurentSeed seed;
  seed.b = ExchangeMatrix(matrix_from_json(field(j, "b")));
  const std::size_t n = seed.b.size();
  const Json& cluster = field(j, "cluster");
  if (!cluster.is_array() || cluster.size() != n) {
    throw DimensionMismatch("cluster size does not match the exchange matrix");
  }
  for (const Json& x : cluster) {
    if (!x.is_string()) throw ParseError("cluster entries must be strings");
    seed.cluster.push_back(parse_laurent(x.get<std::string>(), n));
  }
  seed.history = history_from_json(field(j, "history"), n);
  return seed;
}

GCollection gcollection_from_json(const Json& j) {
  const Json& t0 = field(j, "t0");
  const Json& clusters = field(j, "clusters");
  if (!t0.is_string() || !clusters.is_array()) throw ParseError("malformed G-collection");
  std::vector<GCluster> out;
  for (const Json& c : clusters) {
    const Json& label = field(c, "label");
    const Json& vectors = field(c, "vectors");
    if (!label.is_string() || !vectors.is_array()) throw ParseError("malformed cluster entry");
    VectorSet vs;
    for (const Json& v : vectors) vs.push_back(vector_from_json(v));
    out.emplace_back(label.get<std::string>(), std::move(vs));
  }
  return GCollection(std::move(out), t0.get<std::string>());
}

ExchangeMatrix parse_exchange_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what());
  }
  const IntMatrix m = matrix_from_json(j);
  if (!m.is_square()) {
    throw DimensionMismatch("exchange matrix must be square, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  return ExchangeMatrix(m);
}

}  // namespace gsys
