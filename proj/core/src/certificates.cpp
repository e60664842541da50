#include "cominor/certificates.hpp"

#include <json.hpp>

#include "cominor/error.hpp"

namespace cominor {

using nlohmann::json;

namespace {

json arc_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge arc_from(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::kParse, "certificate: arc must be [u, v]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::string pattern_text(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_edge_list(x); }, g);
}

json branch_sets(const std::vector<std::vector<int>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

json model_json(const MinorEmbedding& mu) {
  return {{"kind", "minor"}, {"branch_sets", branch_sets(mu.branch_sets)}, {"apex", mu.apex}};
}

json model_json(const ButterflyEmbedding& b) {
  std::vector<std::vector<int>> sets;
  json parts = json::array();
  for (const auto& br : b.branch) {
    sets.push_back(br.vertices());
    json arcs = json::array();
    for (const Edge& a : br.arcs) arcs.push_back(arc_json(a));
    parts.push_back({{"in", br.in_part},
                     {"in_root", br.in_root},
                     {"out", br.out_part},
                     {"out_root", br.out_root},
                     {"arcs", arcs}});
  }
  json real = json::array();
  for (const auto& [p, h] : b.realization) real.push_back(json::array({arc_json(p), arc_json(h)}));
  return {{"kind", "butterfly"}, {"branch_sets", branch_sets(sets)}, {"apex", b.apex},
          {"parts", parts},      {"realization", real}};
}

json model_json(const SubdivisionEmbedding& s) {
  std::vector<std::vector<int>> sets;
  for (int v : s.branch) sets.push_back(v >= 0 ? std::vector<int>{v} : std::vector<int>{});
  json paths = json::array();
  for (const auto& [a, p] : s.paths) paths.push_back({{"arc", arc_json(a)}, {"path", p}});
  return {{"kind", "subdivision"}, {"branch_sets", branch_sets(sets)}, {"apex", -1},
          {"paths", paths},        {"tag", s.tag}};
}

template <class G>
std::string hash_of(const G& g) {
  return host_hash(g);
}

}  // namespace

std::string Certificate::kind() const {
  switch (model.index()) {
    case 0: return "minor";
    case 1: return "butterfly";
    default: return "subdivision";
  }
}

Certificate make_certificate(const Graph& host, const Graph& pattern, MinorEmbedding mu) {
  return {pattern, host_hash(host), std::move(mu)};
}
Certificate make_certificate(const Graph& host, const Graph& pattern, SubdivisionEmbedding s) {
  return {pattern, host_hash(host), std::move(s)};
}
Certificate make_certificate(const Digraph& host, const Digraph& pattern, ButterflyEmbedding b) {
  return {pattern, host_hash(host), std::move(b)};
}
Certificate make_certificate(const Digraph& host, const Digraph& pattern, SubdivisionEmbedding s) {
  return {pattern, host_hash(host), std::move(s)};
}

std::string to_json(const Certificate& c, int indent) {
  json j = std::visit([](const auto& m) { return model_json(m); }, c.model);
  j["pattern"] = pattern_text(c.pattern);
  j["host_hash"] = c.host_hash;
  return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Certificate c;
    c.pattern = parse_edge_list(j.at("pattern").get<std::string>());
    c.host_hash = j.at("host_hash").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    const int apex = j.value("apex", -1);
    if (kind == "minor") {
      MinorEmbedding mu;
      mu.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
      mu.apex = apex;
      c.model = std::move(mu);
    } else if (kind == "butterfly") {
      ButterflyEmbedding b;
      b.apex = apex;
      for (const auto& p : j.at("parts")) {
        ButterflyBranch br;
        br.in_part = p.at("in").get<std::vector<int>>();
        br.in_root = p.at("in_root").get<int>();
        br.out_part = p.at("out").get<std::vector<int>>();
        br.out_root = p.at("out_root").get<int>();
        for (const auto& a : p.at("arcs")) br.arcs.push_back(arc_from(a));
        b.branch.push_back(std::move(br));
      }
      for (const auto& r : j.at("realization")) {
        if (!r.is_array() || r.size() != 2) fail(ErrorKind::kParse, "certificate: bad realization");
        b.realization.push_back({arc_from(r[0]), arc_from(r[1])});
      }
      c.model = std::move(b);
    } else if (kind == "subdivision") {
      SubdivisionEmbedding s;
      for (const auto& set : j.at("branch_sets")) {
        const auto vs = set.get<std::vector<int>>();
        if (vs.size() > 1) fail(ErrorKind::kParse, "certificate: subdivision branch set not a singleton");
        s.branch.push_back(vs.empty() ? -1 : vs[0]);
      }
      for (const auto& p : j.at("paths"))
        s.paths.push_back({arc_from(p.at("arc")), p.at("path").get<std::vector<int>>()});
      s.tag = j.value("tag", "");
      c.model = std::move(s);
    } else {
      fail(ErrorKind::kParse, "certificate: unknown kind '" + kind + "'");
    }
    return c;
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("certificate: ") + e.what());
  }
}

Check check_certificate(const Certificate& c, const AnyGraph& host) {
  const std::string h = std::visit([](const auto& g) { return hash_of(g); }, host);
  if (h != c.host_hash) return Check::failure("host hash mismatch: " + h + " vs " + c.host_hash);
  const bool directed_host = std::holds_alternative<Digraph>(host);
  const bool directed_pattern = std::holds_alternative<Digraph>(c.pattern);
  if (directed_host != directed_pattern)
    return Check::failure("pattern and host differ in directedness");
  if (const auto* mu = std::get_if<MinorEmbedding>(&c.model)) {
    if (directed_host) return Check::failure("minor certificate on a digraph");
    return verify_minor(std::get<Graph>(host), std::get<Graph>(c.pattern), *mu);
  }
  if (const auto* b = std::get_if<ButterflyEmbedding>(&c.model)) {
    if (!directed_host) return Check::failure("butterfly certificate on an undirected graph");
    return verify_butterfly(std::get<Digraph>(host), std::get<Digraph>(c.pattern), *b);
  }
  const auto& s = std::get<SubdivisionEmbedding>(c.model);
  if (directed_host)
    return verify_subdivision(std::get<Digraph>(host), std::get<Digraph>(c.pattern), s);
  return verify_subdivision(std::get<Graph>(host), std::get<Graph>(c.pattern), s);
}

}  // namespace cominor
