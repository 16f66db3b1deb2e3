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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gsys/cobongartz.hpp"
#include "gsys/errors.hpp"
#include "gsys/explorer.hpp"
#include "gsys/gsystem.hpp"
#include "gsys/json_io.hpp"
#include "gsys/laurent_seed.hpp"
#include "gsys/matrix_seed.hpp"
#include "gsys/surface.hpp"

namespace gsys::cli {

namespace {

// A library error attributed to the flag whose value caused it.
class FlagError : public std::runtime_error {
 public:
  FlagError(const std::string& flag, const std::string& what, int code)
      : std::runtime_error(flag + ": " + what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw FlagError(flag, e.what(), exit_code(e));
  }
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FlagError(flag, "cannot read '" + path + "'", 2);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MatrixInput {
  std::string inline_json;
  std::string path;

  void add_to(CLI::App* app) {
    auto* b = app->add_option("--b", inline_json, "exchange matrix as JSON rows");
    auto* f = app->add_option("--file", path, "file holding the exchange matrix JSON");
    b->excludes(f);
  }

  ExchangeMatrix load() const {
    if (!path.empty()) {
      const std::string text = read_file("--file", path);
      return with_flag("--file", [&] { return parse_exchange_matrix(text); });
    }
    if (inline_json.empty()) throw FlagError("--b", "an exchange matrix is required", 2);
    return with_flag("--b", [&] { return parse_exchange_matrix(inline_json); });
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// 1-based comma list to 0-based indices below n.
std::vector<std::size_t> parse_indices(const std::string& flag, const std::string& text,
                                       std::size_t n) {
  std::vector<std::size_t> out;
  for (const std::string& tok : split_list(text)) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
        tok.size() > 9) {
      throw FlagError(flag, "invalid index '" + tok + "'", 2);
    }
    const std::size_t k = std::stoul(tok);
    if (k < 1 || k > n) {
      throw FlagError(flag, "index " + tok + " outside 1.." + std::to_string(n), 2);
    }
    out.push_back(k - 1);
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k : v) out += (out.empty() ? "" : ",") + std::to_string(k + 1);
  return out.empty() ? "-" : out;
}

std::string join_texts(const std::vector<std::string>& v) {
  std::string out;
  for (const std::string& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

void print_triple(std::ostream& out, const MatrixSeed& s) {
  out << "  B = " << s.b.entries().to_string() << "\n";
  out << "  C = " << s.c.to_string() << "\n";
  out << "  G = " << s.g.to_string() << "\n";
}

int cmd_trace(const MatrixInput& in, const std::string& seq_text, bool with_cluster, bool json,
              std::ostream& out) {
  const ExchangeMatrix b0 = in.load();
  const MutationSequence seq = parse_indices("--seq", seq_text, b0.size());
  const std::vector<MatrixSeed> trace = apply_sequence(b0, seq);
  std::vector<LaurentSeed> clusters{LaurentSeed::initial(b0)};
  if (with_cluster) {
    for (std::size_t k : seq) clusters.push_back(mutate_cluster(clusters.back(), k));
  }
  if (json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
      Json j = json_of(trace[i]);
      if (with_cluster) j["cluster"] = clusters[i].cluster_text();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << "t" << i << ": ";
    if (i == 0) {
      out << "initial\n";
    } else {
      out << "mu_" << seq[i - 1] + 1 << ", history " << join_indices(trace[i].history) << "\n";
    }
    print_triple(out, trace[i]);
    if (with_cluster) out << "  cluster = " << join_texts(clusters[i].cluster_text()) << "\n";
  }
  return 0;
}

int cmd_complete(const MatrixInput& in, const std::string& seq_text, const std::string& u_text,
                 bool with_cluster, bool json, std::ostream& out) {
  const ExchangeMatrix b0 = in.load();
  const MutationSequence seq = parse_indices("--seq", seq_text, b0.size());
  const IndexSet u = parse_indices("--u", u_text, b0.size());
  const CompletionResult res = complete({b0, seq, u}, with_cluster);
  if (json) {
    out << json_of(res).dump(2) << "\n";
    return 0;
  }
  std::string retained;
  for (const IntVector& c : res.retained) retained += (retained.empty() ? "" : " ") + to_string(c);
  out << "retained: " << (retained.empty() ? "-" : retained) << "\n";
  out << "replay: " << join_indices(res.replay) << "\n";
  print_triple(out, res.seed);
  if (res.cluster) out << "  cluster = " << join_texts(res.cluster->cluster_text()) << "\n";
  return 0;
}

struct Caps {
  std::size_t max_nodes = 0;
  std::size_t max_depth = EnumerateOptions{}.max_depth;

  void add_to(CLI::App* app) {
    max_nodes = default_max_nodes();
    app->add_option("--max-nodes", max_nodes, "node cap (default from GSYS_MAX_NODES)");
    app->add_option("--max-depth", max_depth, "depth cap");
  }
  EnumerateOptions options() const {
    EnumerateOptions o;
    o.max_nodes = max_nodes;
    o.max_depth = max_depth;
    return o;
  }
};

std::string counts(const ExchangeGraph& g) {
  return std::to_string(g.nodes.size()) + " clusters, " + std::to_string(g.edges.size()) +
         " edges";
}

int cmd_enumerate(const MatrixInput& in, const Caps& caps, const std::string& dot, bool json,
                  std::ostream& out, std::ostream& err) {
  const ExchangeMatrix b0 = in.load();
  const ExchangeGraph g =
      with_flag("--max-nodes", [&] { return enumerate_bounded(b0, caps.options()); });
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw FlagError("--dot", "cannot write '" + dot + "'", 2);
    f << export_dot(g);
  }
  if (json) {
    out << json_of(g).dump(2) << "\n";
  } else {
    out << counts(g) << (g.closed ? ", closed" : ", not closed") << "\n";
  }
  if (!g.closed) {
    err << "error: enumeration cap reached before closure\n";
    return 4;
  }
  return 0;
}

int cmd_verify(const MatrixInput& in, const std::string& collection_path, const Caps& caps,
               bool skip_uniqueness, bool json, std::ostream& out) {
  GCollection coll = [&] {
    if (!collection_path.empty()) {
      const std::string text = read_file("--collection", collection_path);
      return with_flag("--collection", [&] {
        try {
          return gcollection_from_json(Json::parse(text));
        } catch (const Json::exception& e) {
          throw ParseError(e.what());
        }
      });
    }
    return to_gcollection(enumerate(in.load(), caps.options()));
  }();
  VerifyOptions opts;
  opts.check_uniqueness = !skip_uniqueness;
  const GSystemReport report = verify_gsystem(coll, opts);
  if (json) {
    out << json_of(report).dump(2) << "\n";
  } else {
    const auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
    out << "clusters: " << coll.size() << "\n";
    out << "mutation: " << verdict(report.mutation_ok) << "\n";
    out << "completion: " << verdict(report.completion_ok) << "\n";
    out << "uniqueness: " << (skip_uniqueness ? "skipped" : verdict(report.uniqueness_ok)) << "\n";
    out << "identities checked: " << report.identities_checked << "\n";
    for (const Witness& w : report.witnesses) {
      std::string vs;
      for (const IntVector& v : w.vectors) vs += " " + to_string(v);
      std::string os;
      for (const IntVector& v : w.other) os += " " + to_string(v);
      out << "witness " << w.condition << "/" << w.kind << " at " << join_texts(w.clusters)
          << ":" << vs << (os.empty() ? "" : " |" + os) << "\n";
    }
  }
  return report.ok() ? 0 : 3;
}

struct SurfaceArgs {
  int m = 0;
  std::string tri;
  std::string arc;
  std::string u;
  bool json = false;

  Polygon polygon() const {
    return with_flag("--m", [&] { return Polygon(m); });
  }
  Triangulation triangulation() const {
    const Polygon p = polygon();
    return with_flag("--tri", [&] { return parse_triangulation(p.size(), tri); });
  }
  Arc diagonal(const std::string& flag, const std::string& text) const {
    const Polygon p = polygon();
    return with_flag(flag, [&] {
      const Arc a = parse_arc(text);
      if (!p.is_diagonal(a)) throw PreconditionViolation(a.to_string() + " is not a diagonal");
      return a;
    });
  }
};

std::string arc_list(const std::vector<Arc>& arcs) {
  std::string out;
  for (const Arc& a : arcs) out += (out.empty() ? "" : ",") + a.to_string();
  return out;
}

int cmd_surface(const std::string& which, const SurfaceArgs& a, std::ostream& out) {
  if (which == "list") {
    const Polygon p = a.polygon();
    for (const Triangulation& t : enumerate_triangulations(p.size())) out << t.to_string() << "\n";
    return 0;
  }
  const Triangulation t = a.triangulation();
  if (which == "adjacency") {
    out << signed_adjacency(t).entries().to_string() << "\n";
  } else if (which == "flip") {
    const Arc tau = a.diagonal("--arc", a.arc);
    out << with_flag("--arc", [&] { return flip(t, tau); }).to_string() << "\n";
  } else if (which == "gvec") {
    const Arc gamma = a.diagonal("--arc", a.arc);
    const IntVector g = arc_g_vector(t, gamma);
    if (a.json) {
      const TPath p = minimal_t_path(t, gamma);
      Json steps = Json::array();
      for (const Arc& s : p.steps) steps.push_back(s.to_string());
      Json crossed = Json::array();
      for (const Arc& s : p.crossed) crossed.push_back(s.to_string());
      out << Json{{"g", json_of(g)}, {"crossed", crossed}, {"steps", steps}, {"vertices", p.vertices}}
                 .dump(2)
          << "\n";
    } else {
      out << json_of(g).dump() << "\n";
    }
  } else if (which == "complete") {
    std::vector<Arc> u;
    for (const std::string& tok : split_list(a.u)) u.push_back(a.diagonal("--u", tok));
    const Triangulation r = with_flag("--u", [&] { return cobongartz_tri(u, t); });
    out << arc_list(r.sorted_arcs()) << "\n";
  }
  return 0;
}

}  // namespace

int exit_code(const std::exception& e) {
  if (const auto* f = dynamic_cast<const FlagError*>(&e)) return f->code();
  if (dynamic_cast<const CapExceeded*>(&e)) return 4;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e) ||
      dynamic_cast<const PreconditionViolation*>(&e) ||
      dynamic_cast<const NotSkewSymmetrizable*>(&e) || dynamic_cast<const SingularBasis*>(&e)) {
    return 2;
  }
  return 3;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster-algebra combinatorics: seeds, completions, G-systems and polygons", "gsys"};
  app.require_subcommand(1);

  MatrixInput in;
  std::string seq;
  std::string u;
  bool with_cluster = false;
  bool json = false;
  std::string dot;
  std::string collection;
  bool skip_uniqueness = false;
  Caps caps;
  SurfaceArgs sa;
  std::string surface_cmd;

  auto* trace = app.add_subcommand("trace", "print the (B, C, G) trace of a mutation sequence");
  in.add_to(trace);
  trace->add_option("--seq", seq, "1-based comma-separated directions");
  trace->add_flag("--cluster", with_cluster, "also print Laurent clusters");
  trace->add_flag("--json", json, "JSON output");

  auto* comp = app.add_subcommand("complete", "co-Bongartz completion of initial variables");
  in.add_to(comp);
  comp->add_option("--seq", seq, "1-based directions from the initial seed to t");
  comp->add_option("--u", u, "1-based initial variables to keep");
  comp->add_flag("--cluster", with_cluster, "also print the Laurent cluster");
  comp->add_flag("--json", json, "JSON output");

  auto* en = app.add_subcommand("enumerate", "enumerate the exchange graph");
  in.add_to(en);
  caps.add_to(en);
  en->add_option("--dot", dot, "write the graph in DOT format to this path");
  en->add_flag("--json", json, "JSON output");

  auto* ver = app.add_subcommand("verify", "check the G-system conditions");
  in.add_to(ver);
  caps.add_to(ver);
  ver->add_option("--collection", collection, "G-collection JSON file instead of a matrix");
  ver->add_flag("--skip-uniqueness", skip_uniqueness, "skip the uniqueness condition");
  ver->add_flag("--json", json, "JSON output");

  auto* surf = app.add_subcommand("surface", "triangulations of a convex polygon");
  surf->require_subcommand(1);
  const auto leaf = [&](const char* name, const char* help, bool needs_tri) {
    auto* s = surf->add_subcommand(name, help);
    s->add_option("--m", sa.m, "number of polygon vertices")->required();
    if (needs_tri) s->add_option("--tri", sa.tri, "diagonals, e.g. 0-2,2-4,0-4")->required();
    s->callback([&surface_cmd, name] { surface_cmd = name; });
    return s;
  };
  leaf("list", "list all triangulations", false);
  leaf("adjacency", "signed adjacency matrix", true);
  leaf("flip", "flip one diagonal", true)->add_option("--arc", sa.arc, "diagonal a-b")->required();
  auto* gv = leaf("gvec", "g-vector of an arc", true);
  gv->add_option("--arc", sa.arc, "diagonal a-b")->required();
  gv->add_flag("--json", sa.json, "include the minimal T-path");
  leaf("complete", "co-Bongartz completion of compatible diagonals", true)
      ->add_option("--u", sa.u, "diagonals to keep, e.g. 1-4")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*trace) return cmd_trace(in, seq, with_cluster, json, out);
    if (*comp) return cmd_complete(in, seq, u, with_cluster, json, out);
    if (*en) return cmd_enumerate(in, caps, dot, json, out, err);
    if (*ver) return cmd_verify(in, collection, caps, skip_uniqueness, json, out);
    return cmd_surface(surface_cmd, sa, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace gsys::cli
