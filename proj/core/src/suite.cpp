#include "cominor/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cominor/connectivity.hpp"
#include "cominor/digraph_finder.hpp"
#include "cominor/error.hpp"
#include "cominor/generators.hpp"
#include "cominor/iso.hpp"
#include "cominor/minor_finder.hpp"
#include "cominor/orderings.hpp"
#include "cominor/outerplanar.hpp"
#include "cominor/schemes.hpp"

namespace cominor {

namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::string tree_code(const Graph& t) {
  const auto shape = classify_tree(t);
  std::string best;
  for (int c : shape.centers) {
    auto code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 10) fail(ErrorKind::kDomain, "all_trees: n must lie in 1..10");
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const auto& t : level)
      for (int v = 0; v < size - 1; ++v) {
        Graph g = t;
        const int leaf = g.add_vertex();
        g.add_edge(v, leaf);
        if (seen.insert(tree_code(g)).second) next.push_back(std::move(g));
      }
    level = std::move(next);
  }
  return level;
}

std::pair<int, int> check_leaf_deletions(const Graph& h) {
  const auto ts = recognize_maximal_outerplanar(h);
  if (!ts) return {1, 1};
  if (h.vertex_count() < 4) return {0, 0};
  int checks = 0, failures = 0;
  const Graph& t = ts->dual;
  for (int leaf = 0; leaf < static_cast<int>(ts->triangles.size()); ++leaf) {
    if (t.degree(leaf) > 1) continue;
    ++checks;
    const Triangle tri = ts->triangles[leaf];
    int v = -1;
    for (int x : tri)
      if (h.degree(x) == 2) v = x;
    if (v < 0) {
      ++failures;
      continue;
    }
    Graph smaller = h;
    smaller.remove_vertex(v);
    const auto ts2 = recognize_maximal_outerplanar(smaller);
    if (!ts2) {
      ++failures;
      continue;
    }
    std::vector<int> index;
    bool ok = ts2->triangles.size() + 1 == ts->triangles.size();
    for (const Triangle& x : ts2->triangles) {
      auto it = std::find(ts->triangles.begin(), ts->triangles.end(), x);
      if (it == ts->triangles.end() || it - ts->triangles.begin() == leaf) ok = false;
      index.push_back(static_cast<int>(it - ts->triangles.begin()));
    }
    if (ok) {
      for (const Edge& e : ts2->dual.edges())
        if (!t.has_edge(index[e.u], index[e.v])) ok = false;
      if (ts2->dual.edge_count() + t.degree(leaf) != t.edge_count()) ok = false;
    }
    failures += !ok;
  }
  return {checks, failures};
}

std::pair<int, int> check_boundary_contractions(const Graph& h) {
  const auto ts = recognize_maximal_outerplanar(h);
  if (!ts) return {1, 1};
  const int n = h.vertex_count();
  if (n < 4) return {0, 0};
  int checks = 0, failures = 0;
  const Graph& t = ts->dual;
  for (int i = 0; i < n; ++i) {
    const int a = ts->outer_cycle[i], b = ts->outer_cycle[(i + 1) % n];
    ++checks;
    int f = -1;
    for (int k = 0; k < static_cast<int>(ts->triangles.size()); ++k) {
      const auto& tri = ts->triangles[k];
      if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b)) f = k;
    }
    const auto ts2 = recognize_maximal_outerplanar(contract_edge(h, undirected(a, b)));
    bool ok = false;
    if (f >= 0 && ts2)
      for (int g : t.neighbors(f))
        if (are_isomorphic(contract_edge(t, undirected(f, g)), ts2->dual)) ok = true;
    failures += !ok;
  }
  return {checks, failures};
}

int brute_force_fan_separator(const Graph& g, int v, const std::vector<int>& s) {
  std::vector<int> others;
  for (int x : g.vertices())
    if (x != v) others.push_back(x);
  const int m = static_cast<int>(others.size());
  if (m > 20) fail(ErrorKind::kDomain, "brute_force_fan_separator: too many vertices");
  int best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<char> removed(g.capacity(), 0), seen(g.capacity(), 0);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) removed[others[i]] = 1;
    std::vector<int> stack{v};
    seen[v] = 1;
    bool hit = false;
    while (!stack.empty() && !hit) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(x)) {
        if (seen[w] || removed[w]) continue;
        if (std::find(s.begin(), s.end(), w) != s.end()) {
          hit = true;
          break;
        }
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    if (!hit) best = size;
  }
  return best;
}

namespace {

using Clock = std::chrono::steady_clock;

CriterionReport report(int id, std::string title) {
  CriterionReport r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) { return seed * 1'000'003ULL + i; }

struct Tally {
  int runs = 0;
  int passed = 0;
  int invariant = 0;
  int hypothesis = 0;
  int other = 0;
  std::string first_error;

  template <class F>
  void run(F&& f) {
    ++runs;
    try {
      if (f()) ++passed;
    } catch (const GraphError& e) {
      if (e.kind() == ErrorKind::kInvariantViolation) ++invariant;
      else if (e.kind() == ErrorKind::kHypothesis) ++hypothesis;
      else ++other;
      if (first_error.empty()) first_error = e.what();
    }
  }

  bool clean() const { return passed == runs && invariant == 0 && hypothesis == 0 && other == 0; }

  std::string str() const {
    std::ostringstream os;
    os << passed << "/" << runs << " verified, " << invariant << " invariant violations, "
       << hypothesis << " hypothesis errors";
    if (!first_error.empty()) os << " (first: " << first_error << ")";
    return os.str();
  }
};

SchemePtr family_scheme(const std::string& family, int t, std::uint64_t seed) {
  if (family == "tree") return make_tree_scheme(gen_tree(t, seed), 0);
  if (family == "cactus") return make_cactus_scheme(gen_cactus(t, seed), 0);
  if (family == "snake") return make_snake_scheme(gen_snake(t), 0, 1);
  if (family == "universal") return make_universal_scheme(t == 3 ? 0 : 1);
  fail(ErrorKind::kDomain, "unknown family " + family);
}

std::vector<std::string> families_for(int t) {
  std::vector<std::string> f{"tree", "cactus"};
  if (t % 3 == 0) f.push_back("snake");
  if (t == 3 || t == 6) f.push_back("universal");
  return f;
}

CriterionReport criterion_minor_totality(const SuiteOptions& o) {
  auto r = report(1, "apex minor totality (500 instances)");
  const auto start = Clock::now();
  Tally tally;
  for (int i = 0; i < 500; ++i) {
    const auto seed = mix(o.seed, i);
    std::mt19937_64 rng(seed);
    const int t = 3 + i % 4;
    const auto fams = families_for(t);
    const auto& family = fams[(i / 4) % fams.size()];
    const int n = t + 1 + static_cast<int>(rng() % static_cast<unsigned>(18 - t));
    tally.run([&] {
      const Graph g = gen_min_degree_graph(n, t, seed);
      const auto scheme = family_scheme(family, t, seed);
      const auto res = find_apex_minor(g, *scheme);
      return verify_minor(g, res.pattern, res.embedding).ok &&
             res.embedding.branch_sets[res.embedding.apex].size() == 1;
    });
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = tally.clean() && r.seconds < 60;
  r.detail = tally.str() + ", " + std::to_string(r.seconds) + " s (limit 60 s)";
  return r;
}

CriterionReport criterion_tightness(const SuiteOptions& o) {
  auto r = report(2, "K_t excludes every family pattern on t+1 vertices");
  int checks = 0, no = 0;
  for (int t = 2; t <= 6; ++t) {
    const int size = t + 1;
    std::vector<Graph> patterns;
    for (int s = 0; s < 5; ++s) {
      patterns.push_back(gen_tree(size, mix(o.seed, s)));
      patterns.push_back(make_cactus_scheme(gen_cactus(size, mix(o.seed, s)), 0)->host());
    }
    if (size % 3 == 0) patterns.push_back(gen_snake(size));
    if (size == 3) patterns.push_back(gen_universal(0));
    if (size == 6) patterns.push_back(gen_universal(1));
    for (const auto& h : patterns) {
      ++checks;
      no += oracle_minor(Graph::complete(t), h, o.budget).verdict == Verdict::kNo;
    }
  }
  r.pass = checks > 0 && no == checks;
  r.detail = std::to_string(no) + "/" + std::to_string(checks) + " answered no";
  return r;
}

CriterionReport criterion_planar_anchors(const SuiteOptions& o) {
  auto r = report(3, "icosahedron excludes K5 and K_{2,3}+");
  SearchBudget b = o.budget;
  b.nodes = std::min<std::int64_t>(b.nodes, 10'000'000);
  const Graph ico = gen_icosahedron();
  const auto k5 = oracle_minor(ico, Graph::complete(5), b);
  const auto k23 = oracle_minor(ico, gen_k23_plus(), b);
  r.pass = k5.verdict == Verdict::kNo && k23.verdict == Verdict::kNo;
  r.detail = std::string("K5: ") + to_string(k5.verdict) + " (" + std::to_string(k5.nodes) +
             " nodes), K23+: " + to_string(k23.verdict) + " (" + std::to_string(k23.nodes) +
             " nodes)";
  return r;
}

Graph relabeled(const Graph& g, const std::vector<int>& f, int cap) {
  Graph out(cap);
  std::vector<char> live(cap, 0);
  for (int v : g.vertices()) live[f[v]] = 1;
  for (int v = 0; v < cap; ++v)
    if (!live[v]) out.remove_vertex(v);
  for (const Edge& e : g.edges()) out.add_edge(f[e.u], f[e.v]);
  return out;
}

Graph shifted(const Graph& g, int offset) {
  std::vector<int> f(g.capacity());
  for (int v = 0; v < g.capacity(); ++v) f[v] = v + offset;
  return relabeled(g, f, g.capacity() + offset);
}

SchemePtr triangle_on(int a, int b, int z, Root root) {
  const int cap = std::max({a, b, z}) + 1;
  Graph tri = relabeled(Graph::complete(3), {a, b, z}, cap);
  return make_single_ordering_scheme(tri, std::move(root), {a, b, z}, "triangle");
}

SchemePtr glue_on_contractible(SchemePtr base, int fresh) {
  const auto edges = base->contractible_edges();
  if (edges.empty()) fail(ErrorKind::kDomain, "glue corpus: base has no contractible edge");
  const Edge e = edges.front().edge;
  return glue_schemes(base, triangle_on(e.u, e.v, fresh, {e.u, e.v}), 3);
}

}  // namespace

VerifyResult verify_scheme(const OrderingScheme& scheme) {
  const auto m = materialize(scheme);
  if (m.truncated) {
    VerifyResult r;
    r.ok = false;
    return r;
  }
  std::optional<Root> root;
  if (!scheme.root().empty()) root = scheme.root();
  return verify_contractible(scheme.host(), m.orderings, root);
}

std::vector<SchemePtr> glue_corpus() {
  std::vector<SchemePtr> out;
  const Graph s5 = gen_snake(5), s6 = gen_snake(6);
  const auto snake5 = make_snake_scheme(s5, 0, 1);
  const auto snake6 = make_snake_scheme(s6, 0, 1);
  // Shared root vertex.
  out.push_back(glue_schemes(snake5, make_tree_scheme(shifted(Graph::path(3), 4), 4), 2));
  out.push_back(glue_schemes(
      snake5, restrict_root(make_snake_scheme(shifted(gen_snake(4), 4), 4, 5), {4}), 2));
  // Shared contractible edge.
  const Edge e = contractible_edge_for_snake(s6, 0, 1);
  out.push_back(glue_schemes(snake6, triangle_on(e.u, e.v, 6, {e.u, e.v}), 3));
  {
    std::vector<int> f{e.u, e.v, 6, 7};
    const Graph g = relabeled(gen_snake(4), f, 8);
    out.push_back(glue_schemes(snake6, make_snake_scheme(g, e.u, e.v), 3));
  }
  // Disjoint union.
  out.push_back(glue_schemes(make_tree_scheme(Graph::path(3), 0),
                             restrict_root(make_snake_scheme(shifted(gen_snake(4), 3), 3, 4), {}),
                             1));
  out.push_back(glue_schemes(make_universal_scheme(0),
                             restrict_root(make_tree_scheme(shifted(Graph::path(3), 3), 3), {}), 1));
  // Nested and mixed bases.
  out.push_back(glue_schemes(out.front(), make_tree_scheme(shifted(Graph::path(2), 6), 6), 2));
  out.push_back(glue_schemes(make_cactus_scheme(gen_cactus(5, 7), 0), triangle_on(4, 9, 10, {4}), 2));
  out.push_back(glue_on_contractible(make_binary_scheme(1), 5));
  out.push_back(glue_on_contractible(make_universal_scheme(1), 6));
  return out;
}

namespace {

CriterionReport criterion_orderings(const SuiteOptions& o) {
  auto r = report(4, "contractible-ordering verifier on scheme corpus");
  int ok = 0, total = 0;
  std::string failed;
  auto check = [&](const std::string& name, auto make) {
    ++total;
    try {
      const SchemePtr s = make();
      if (verify_scheme(*s).ok) ++ok;
      else if (failed.empty()) failed = name;
    } catch (const GraphError& e) {
      if (failed.empty()) failed = name + ": " + e.what();
    }
  };
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : all_trees(n)) check("tree", [&] { return make_tree_scheme(t, 0); });
  for (int n = 3; n <= 9; ++n) check("snake", [&] { return make_snake_scheme(gen_snake(n), 0, 1); });
  for (int h = 0; h <= 1; ++h) check("universal", [&] { return make_universal_scheme(h); });
  for (int h = 1; h <= 2; ++h) check("binary", [&] { return make_binary_scheme(h); });
  for (int i = 0; i < 10; ++i)
    check("cactus", [&] { return make_cactus_scheme(gen_cactus(4 + i % 5, mix(o.seed, i)), 0); });
  for (const auto& s : glue_corpus()) check("glue", [&] { return s; });
  // C4 and K4 have no recursive ordering, so no candidate set is contractible.
  int rejected = 0, candidates = 0;
  for (const Graph& h : {Graph::cycle(4), Graph::complete(4)}) {
    Ordering w{0, 1, 2, 3};
    std::vector<Ordering> all;
    do {
      all.push_back(w);
      ++candidates;
      rejected += !verify_contractible(h, {w}, std::nullopt).ok;
    } while (std::next_permutation(w.begin(), w.end()));
    ++candidates;
    rejected += !verify_contractible(h, all, std::nullopt).ok;
  }
  r.pass = ok == total && rejected == candidates;
  r.detail = std::to_string(ok) + "/" + std::to_string(total) + " schemes verified, " +
             std::to_string(rejected) + "/" + std::to_string(candidates) +
             " C4/K4 candidate sets rejected";
  if (!failed.empty()) r.detail += " (first failure: " + failed + ")";
  return r;
}

Graph random_maximal_outerplanar(int n, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<int> boundary{0, 1, 2};
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  for (int z = 3; z < n; ++z) {
    const auto i = rng() % boundary.size();
    const int a = boundary[i], b = boundary[(i + 1) % boundary.size()];
    g.add_edge(z, a);
    g.add_edge(z, b);
    boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i) + 1, z);
  }
  return g;
}

CriterionReport criterion_weak_dual(const SuiteOptions& o) {
  auto r = report(5, "weak dual leaf deletion and boundary contraction");
  std::vector<Graph> corpus;
  for (int n = 3; n <= 10; ++n) {
    corpus.push_back(gen_snake(n));
    corpus.push_back(gen_fan(n));
  }
  corpus.push_back(gen_universal(0));
  corpus.push_back(gen_universal(1));
  corpus.push_back(gen_binary(1));
  corpus.push_back(gen_binary(2));
  std::mt19937_64 rng(mix(o.seed, 5000));
  for (int i = 0; i < 30; ++i) corpus.push_back(random_maximal_outerplanar(5 + i % 6, rng));
  int checks = 0, failures = 0;
  for (const auto& h : corpus) {
    const auto [c1, f1] = check_leaf_deletions(h);
    const auto [c2, f2] = check_boundary_contractions(h);
    checks += c1 + c2;
    failures += f1 + f2;
  }
  r.pass = failures == 0 && checks >= 200;
  r.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
  return r;
}

}  // namespace

namespace {

Digraph host_digraph(int min_out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = min_out + 1 + static_cast<int>(rng() % 10);
  return gen_min_outdegree_digraph(n, min_out, seed);
}

CriterionReport criterion_apex_butterfly(const SuiteOptions& o) {
  auto r = report(6, "apex in-arborescence butterfly minors (300 digraphs)");
  Tally tally;
  for (int i = 0; i < 300; ++i) {
    const auto seed = mix(o.seed, 6000 + i);
    const int t = 2 + i % 4;
    tally.run([&] {
      const Digraph tree = gen_inarborescence(t, seed);
      const Digraph d = host_digraph(t, seed);
      const auto res = find_apex_inarb_butterfly(d, tree);
      const auto& apex = res.embedding.branch[res.embedding.apex];
      return verify_butterfly(d, res.pattern, res.embedding).ok && apex.vertices().size() == 1;
    });
  }
  r.pass = tally.clean();
  r.detail = tally.str();
  return r;
}

bool sink_free_k4(const Digraph& h) {
  if (h.vertex_count() != 4 || h.underlying().edge_count() != 6) return false;
  for (int v : h.vertices())
    if (h.out_degree(v) == 0) return false;
  return true;
}

CriterionReport criterion_wheels(const SuiteOptions& o) {
  auto r = report(7, "directed wheel subdivisions (300 digraphs)");
  Tally tally;
  int t3 = 0;
  for (int i = 0; i < 300; ++i) {
    const auto seed = mix(o.seed, 7000 + i);
    const int t = 2 + i % 4;
    tally.run([&] {
      const Digraph d = host_digraph(t, seed);
      const auto res = find_wheel_subdivision(d, t);
      const bool ok = verify_subdivision(d, res.pattern, res.embedding).ok &&
                      verify_subdivision(d, directed_wheel_plus(t), res.plus).ok &&
                      verify_subdivision(d, directed_wheel_w2(t), res.w2).ok;
      if (ok && t == 3) ++t3;
      return ok;
    });
  }
  const bool k4 = sink_free_k4(directed_wheel_plus(3)) && sink_free_k4(directed_wheel_w2(3)) &&
                  !are_isomorphic(directed_wheel_plus(3), directed_wheel_w2(3));
  r.pass = tally.clean() && t3 >= 50 && k4;
  r.detail = tally.str() + ", " + std::to_string(t3) + " t=3 instances with both K4 orientations" +
             (k4 ? "" : " (C3+/W3^2 are not the sink-free K4 orientations)");
  return r;
}

CriterionReport criterion_two_block(const SuiteOptions& o) {
  auto r = report(8, "two-block wheels C(k1,k2)");
  Tally tally;
  const std::pair<int, int> ks[] = {{2, 1}, {2, 2}, {3, 2}};
  for (int j = 0; j < 3; ++j) {
    const auto [k1, k2] = ks[j];
    for (int i = 0; i < 50; ++i) {
      const auto seed = mix(o.seed, 8000 + 100 * j + i);
      tally.run([&] {
        const Digraph d = host_digraph(k1 + k2 - 1, seed);
        const auto res = find_two_block_wheel(d, k1, k2);
        return verify_subdivision(d, res.pattern, res.embedding).ok;
      });
    }
  }
  r.pass = tally.clean();
  r.detail = tally.str();
  return r;
}

Digraph from_mask(int n, std::uint64_t m) {
  Digraph d(n);
  int b = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) {
        if ((m >> b) & 1) d.add_arc(u, v);
        ++b;
      }
  return d;
}

std::vector<Digraph> digraphs_up_to(int n_max) {
  std::vector<Digraph> out;
  std::set<std::uint64_t> seen;
  for (int n = 1; n <= n_max; ++n)
    for (std::uint64_t m = 0; m < (1ULL << (n * (n - 1))); ++m) {
      Digraph d = from_mask(n, m);
      if (seen.insert(canonical_code(d)).second) out.push_back(std::move(d));
    }
  return out;
}

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

CriterionReport criterion_butterfly_oracles(const SuiteOptions& o) {
  auto r = report(9, "operation-sequence and branch-set butterfly oracles agree");
  long agree = 0, disagree = 0, budget = 0, bad_cert = 0, pairs = 0;
  auto compare = [&](const Digraph& host, const Digraph& pattern) {
    ++pairs;
    const auto a = oracle_butterfly(host, pattern, o.budget, ButterflyMode::kOperationSequence);
    const auto b = oracle_butterfly(host, pattern, o.budget, ButterflyMode::kBranchSet);
    if (a.verdict == Verdict::kBudgetExceeded || b.verdict == Verdict::kBudgetExceeded) ++budget;
    else if (a.verdict == b.verdict) ++agree;
    else ++disagree;
    if (b.certificate && !verify_butterfly(host, pattern, *b.certificate)) ++bad_cert;
  };
  const auto patterns = digraphs_up_to(3);
  for (const auto& h : digraphs_up_to(5))
    for (const auto& p : patterns) compare(h, p);
  const long exhaustive = pairs;
  std::mt19937_64 rng(mix(o.seed, 9000));
  for (int i = 0; i < 1000; ++i) {
    const int hn = 1 + static_cast<int>(rng() % 6);
    const int pn = 1 + static_cast<int>(rng() % 4);
    const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
    const Digraph host = random_digraph(hn, p, rng);
    compare(host, random_digraph(pn, p, rng));
  }
  r.pass = disagree == 0 && budget == 0 && bad_cert == 0;
  r.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree (" +
             std::to_string(exhaustive) + " exhaustive), " + std::to_string(disagree) +
             " disagreements, " + std::to_string(budget) + " over budget, " +
             std::to_string(bad_cert) + " bad certificates";
  return r;
}

CriterionReport criterion_fans(const SuiteOptions& o) {
  auto r = report(10, "fan size equals minimum separator (1000 triples)");
  std::mt19937_64 rng(mix(o.seed, 10000));
  int match = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    std::bernoulli_distribution coin(p), pick(0.4);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    const int v = static_cast<int>(rng() % n);
    std::vector<int> s;
    for (int w = 0; w < n; ++w)
      if (w != v && pick(rng)) s.push_back(w);
    if (s.empty()) s.push_back((v + 1 + static_cast<int>(rng() % (n - 1))) % n);
    const int fan = static_cast<int>(max_fan(g, v, s).fan.paths.size());
    const int sep = brute_force_fan_separator(g, v, s);
    if (fan == sep) ++match;
    else if (first.empty())
      first = "n=" + std::to_string(n) + " fan=" + std::to_string(fan) + " sep=" + std::to_string(sep);
  }
  r.pass = match == 1000;
  r.detail = std::to_string(match) + "/1000 triples match";
  if (!first.empty()) r.detail += " (first mismatch: " + first + ")";
  return r;
}

}  // namespace

CriterionReport run_criterion(int id, const SuiteOptions& options) {
  using Fn = CriterionReport (*)(const SuiteOptions&);
  static constexpr Fn table[kCriteria] = {
      criterion_minor_totality, criterion_tightness,     criterion_planar_anchors,
      criterion_orderings,      criterion_weak_dual,     criterion_apex_butterfly,
      criterion_wheels,         criterion_two_block,     criterion_butterfly_oracles,
      criterion_fans};
  if (id < 1 || id > kCriteria) fail(ErrorKind::kDomain, "no criterion " + std::to_string(id));
  const auto start = Clock::now();
  CriterionReport r;
  try {
    r = table[id - 1](options);
  } catch (const GraphError& e) {
    r = report(id, "aborted");
    r.detail = e.what();
  }
  if (r.seconds == 0) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionReport> run_suite(const SuiteOptions& options, const std::vector<int>& ids) {
  std::vector<CriterionReport> out;
  if (ids.empty())
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, options));
  else
    for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace cominor
