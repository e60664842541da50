#include "patterns.hpp"

#include <filesystem>
#include <regex>

#include "cominor/embeddings.hpp"
#include "cominor/error.hpp"
#include "cominor/generators.hpp"
#include "cominor/schemes.hpp"

namespace cli {

using namespace cominor;

namespace {

std::optional<Graph> named_graph(const std::string& s) {
  std::smatch m;
  static const std::regex numbered("([KCP])([0-9]+)");
  if (std::regex_match(s, m, numbered)) {
    const int n = std::stoi(m[2]);
    if (m[1] == "K") return Graph::complete(n);
    if (m[1] == "C") return Graph::cycle(n);
    return Graph::path(n);
  }
  if (s == "K23+") return gen_k23_plus();
  if (s == "petersen") return gen_petersen();
  if (s == "icosahedron") return gen_icosahedron();
  return std::nullopt;
}

std::optional<Digraph> named_digraph(const std::string& s) {
  std::smatch m;
  static const std::regex numbered("(DC|CP|W1_|W2_)([0-9]+)");
  if (std::regex_match(s, m, numbered)) {
    const int n = std::stoi(m[2]);
    if (m[1] == "DC") return Digraph::directed_cycle(n);
    if (m[1] == "CP") return directed_wheel_plus(n);
    if (m[1] == "W1_") return directed_wheel_w1(n);
    return directed_wheel_w2(n);
  }
  if (auto g = named_graph(s)) return Digraph::biorientation(*g);
  return std::nullopt;
}

}  // namespace

AnyGraph load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) return read_edge_list_file(source);
  if (auto g = named_graph(source)) return *g;
  if (auto d = named_digraph(source)) return *d;
  fail(ErrorKind::kParse, "no such file or built-in graph: " + source);
}

Graph load_undirected(const std::string& source) {
  auto any = load_graph(source);
  if (auto* g = std::get_if<Graph>(&any)) return *g;
  fail(ErrorKind::kParse, source + " is directed; an undirected graph is required");
}

Digraph load_directed(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    if (auto d = named_digraph(source)) return *d;
  }
  auto any = load_graph(source);
  if (auto* d = std::get_if<Digraph>(&any)) return *d;
  return Digraph::biorientation(std::get<Graph>(any));
}

SchemePtr make_pattern_scheme(const PatternArgs& a) {
  if (a.kind == "tree") return make_tree_scheme(gen_tree(a.n, a.seed), 0);
  if (a.kind == "cactus") return make_cactus_scheme(gen_cactus(a.n, a.seed), 0);
  if (a.kind == "snake") return make_snake_scheme(gen_snake(a.n), 0, 1);
  if (a.kind == "fan") return make_snake_scheme(gen_fan(a.n), 0, 1);
  if (a.kind == "universal") return make_universal_scheme(a.h);
  if (a.kind == "binary") return make_binary_scheme(a.h);
  const Graph g = load_undirected(a.kind);
  const auto live = g.vertices();
  if (live.empty()) fail(ErrorKind::kDomain, "empty pattern");
  const int r = live.front();
  if (is_connected(g) && g.edge_count() + 1 == live.size()) return make_tree_scheme(g, r);
  try {
    return make_cactus_scheme(g, r);
  } catch (const GraphError&) {
  }
  for (const Edge& e : g.edges())
    for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (g.degree(v) != 2) continue;
      try {
        return make_snake_scheme(g, u, v);
      } catch (const GraphError&) {
      }
    }
  fail(ErrorKind::kDomain, "no contractible ordering scheme is known for pattern " + a.kind);
}

}  // namespace cli
