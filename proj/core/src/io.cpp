#include "cominor/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace cominor {

namespace {

[[noreturn]] void parse_error(int line_no, const std::string& msg) {
  fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_error(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size() || value < 0) parse_error(line_no, "bad vertex id '" + tok + "'");
  return value;
}

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

template <class G>
std::string dead_line(const G& g) {
  std::string line;
  for (int v = 0; v < g.capacity(); ++v)
    if (!g.is_live(v)) line += " " + std::to_string(v);
  return line.empty() ? line : "# dead" + line + "\n";
}

}  // namespace

AnyGraph parse_edge_list(std::istream& in) {
  std::optional<int> n;
  std::vector<Edge> undirected_edges, arcs;
  std::vector<int> dead;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      if (toks[0] == "#" && toks.size() >= 2 && toks[1] == "dead")
        for (std::size_t i = 2; i < toks.size(); ++i) dead.push_back(parse_int(toks[i], line_no));
      continue;
    }
    const auto hash = std::find_if(toks.begin(), toks.end(), [](const std::string& t) { return t[0] == '#'; });
    toks.erase(hash, toks.end());
    if (toks[0] == "n") {
      if (toks.size() != 2) parse_error(line_no, "header must be 'n <count>'");
      if (n) parse_error(line_no, "duplicate header");
      n = parse_int(toks[1], line_no);
      continue;
    }
    if (!n) parse_error(line_no, "edge before 'n <count>' header");
    if (toks.size() == 2) {
      undirected_edges.push_back({parse_int(toks[0], line_no), parse_int(toks[1], line_no)});
    } else if (toks.size() == 3 && toks[1] == ">") {
      arcs.push_back({parse_int(toks[0], line_no), parse_int(toks[2], line_no)});
    } else {
      parse_error(line_no, "expected 'u v' or 'u > v'");
    }
    const Edge& e = toks.size() == 2 ? undirected_edges.back() : arcs.back();
    if (e.u >= *n || e.v >= *n) parse_error(line_no, "vertex id out of range");
    if (e.u == e.v) parse_error(line_no, "loop");
  }
  if (!n) fail(ErrorKind::kParse, "missing 'n <count>' header");
  if (!undirected_edges.empty() && !arcs.empty())
    fail(ErrorKind::kParse, "file mixes edges and arcs");
  for (int v : dead)
    if (v >= *n) fail(ErrorKind::kParse, "dead id out of range");
  if (!arcs.empty()) {
    Digraph d = Digraph::from_arcs(*n, arcs);
    for (int v : dead)
      if (d.is_live(v)) d.remove_vertex(v);
    return d;
  }
  Graph g = Graph::from_edges(*n, undirected_edges);
  for (int v : dead)
    if (g.is_live(v)) g.remove_vertex(v);
  return g;
}

AnyGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph parse_graph(const std::string& text) {
  AnyGraph any = parse_edge_list(text);
  if (auto* g = std::get_if<Graph>(&any)) return *g;
  fail(ErrorKind::kParse, "expected an undirected edge list");
}

Digraph parse_digraph(const std::string& text) {
  AnyGraph any = parse_edge_list(text);
  if (auto* d = std::get_if<Digraph>(&any)) return *d;
  // An edge-free file is both; treat it as a digraph on the same vertices.
  const Graph& g = std::get<Graph>(any);
  if (g.edge_count() == 0) {
    Digraph d(g.capacity());
    for (int v = 0; v < g.capacity(); ++v)
      if (!g.is_live(v)) d.remove_vertex(v);
    return d;
  }
  fail(ErrorKind::kParse, "expected an arc list");
}

AnyGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kParse, "cannot open " + path);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.capacity()) + "\n" + dead_line(g);
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string to_edge_list(const Digraph& d) {
  std::string out = "n " + std::to_string(d.capacity()) + "\n" + dead_line(d);
  for (const Edge& a : d.arcs()) out += std::to_string(a.u) + " > " + std::to_string(a.v) + "\n";
  return out;
}

std::string host_hash(const Graph& g) { return fnv1a(to_edge_list(g)); }
std::string host_hash(const Digraph& d) { return fnv1a(to_edge_list(d)); }

}  // namespace cominor
