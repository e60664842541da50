#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cominor/certificates.hpp"
#include "cominor/digraph_finder.hpp"
#include "cominor/error.hpp"
#include "cominor/generators.hpp"
#include "cominor/minor_finder.hpp"
#include "cominor/oracle.hpp"
#include "cominor/suite.hpp"
#include "patterns.hpp"

using namespace cominor;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kHypothesisExit = 2, kInvariantExit = 3, kBudgetExit = 4,
            kDataError = 65, kUsage = 64 };

struct Globals {
  std::uint64_t seed = 1;
  std::int64_t budget_nodes = 10'000'000;
  std::int64_t budget_ms = 60'000;
  std::string out;
  SearchBudget budget() const { return {budget_nodes, budget_ms}; }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::kParse, "cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::kParse, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::kParse, "bad vertex id '" + tok + "'");
    }
  }
  return out;
}

std::string digest(const AnyGraph& g) {
  return std::visit([](const auto& x) { return host_hash(x); }, g);
}

// Re-checks a certificate after a JSON round trip and emits it. Throws an
// invariant violation when the finder output does not verify.
int emit_certificate(const Globals& g, const std::string& op, const Certificate& cert,
                     const AnyGraph& host, const json& counters, Clock::time_point start) {
  const std::string text = to_json(cert);
  const Check check = check_certificate(certificate_from_json(text), host);
  if (!check.ok) fail(ErrorKind::kInvariantViolation, op + " produced an invalid certificate: " + check.violation);
  std::clog << op << ": certificate verified (" << counters.dump() << ", " << since(start) << " s)\n";
  if (g.out.empty()) {
    std::cout << text << "\n";
    return kOk;
  }
  write_file(g.out, text + "\n");
  json report{{"operation", op},         {"input_digest", digest(host)},
              {"outcome", "found"},      {"certificate_path", g.out},
              {"counters", counters},    {"seconds", since(start)}};
  std::cout << report.dump(2) << "\n";
  return kOk;
}

void emit_json(const Globals& g, const json& j) {
  if (!g.out.empty()) write_file(g.out, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
}

}  // namespace

namespace cmd {

struct GenArgs {
  std::string kind;
  int n = 0, h = 0, t = 0;
};

int gen(const Globals& g, const GenArgs& a) {
  AnyGraph out;
  const auto& k = a.kind;
  if (k == "universal") out = gen_universal(a.h);
  else if (k == "binary") out = gen_binary(a.h);
  else if (k == "snake") out = gen_snake(a.n);
  else if (k == "fan") out = gen_fan(a.n);
  else if (k == "tree") out = gen_tree(a.n, g.seed);
  else if (k == "cactus") out = gen_cactus(a.n, g.seed);
  else if (k == "min-degree") out = gen_min_degree_graph(a.n, a.t, g.seed);
  else if (k == "min-outdegree") out = gen_min_outdegree_digraph(a.n, a.t, g.seed);
  else if (k == "inarb") out = gen_inarborescence(a.n, g.seed);
  else if (k == "subcubic-inarb") out = gen_subcubic_inarborescence(a.n, g.seed);
  else if (k == "complete") out = Graph::complete(a.n);
  else if (k == "cycle") out = Graph::cycle(a.n);
  else if (k == "path") out = Graph::path(a.n);
  else out = cli::load_graph(k);
  const std::string text = std::visit([](const auto& x) { return to_edge_list(x); }, out);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_file(g.out, text);
    std::cout << json{{"operation", "gen"}, {"kind", k}, {"path", g.out}, {"input_digest", digest(out)}}.dump(2)
              << "\n";
  }
  return kOk;
}

json counterexample_json(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return {{"ordering", c->omega}, {"s", c->s}, {"i", c->i}, {"j", c->j}, {"reason", c->reason}};
}

int verify_ordering(const Globals& g, const std::string& host_src,
                    const std::vector<std::string>& orderings, const std::string& file,
                    const std::string& root_text) {
  const Graph h = cli::load_undirected(host_src);
  std::vector<Ordering> omegas;
  for (const auto& o : orderings) omegas.push_back(parse_ids(o));
  if (!file.empty()) {
    std::stringstream ss(read_file(file));
    std::string line;
    while (std::getline(ss, line))
      if (!line.empty() && line[0] != '#') omegas.push_back(parse_ids(line));
  }
  if (omegas.empty()) fail(ErrorKind::kParse, "no orderings given");
  std::optional<Root> root;
  if (!root_text.empty()) root = parse_ids(root_text);
  json rec = json::array();
  for (const auto& w : omegas) rec.push_back(is_permutation_of(h, w) && is_recursive_ordering(h, w));
  const VerifyResult v = verify_contractible(h, omegas, root);
  emit_json(g, {{"operation", "verify-ordering"},
                {"input_digest", host_hash(h)},
                {"recursive", rec},
                {"contractible", v.ok},
                {"counterexample", counterexample_json(v.counterexample)}});
  return v.ok ? kOk : kNegative;
}

int make_scheme(const Globals& g, const cli::PatternArgs& p, std::size_t cap) {
  const auto start = Clock::now();
  const SchemePtr s = cli::make_pattern_scheme(p);
  const Materialized m = materialize(*s, cap);
  std::optional<Root> root;
  if (!s->root().empty()) root = s->root();
  const VerifyResult v = verify_contractible(s->host(), m.orderings, root);
  json edges = json::array();
  for (const auto& e : s->contractible_edges()) edges.push_back({e.edge.u, e.edge.v});
  emit_json(g, {{"operation", "make-scheme"},
                {"name", s->name()},
                {"pattern", to_edge_list(s->host())},
                {"root", s->root()},
                {"initial", s->initial()},
                {"orderings", m.orderings.size()},
                {"truncated", m.truncated},
                {"contractible_edges", edges},
                {"verified", v.ok && !m.truncated},
                {"counterexample", counterexample_json(v.counterexample)},
                {"seconds", since(start)}});
  if (m.truncated) return kNegative;
  if (!v.ok) fail(ErrorKind::kInvariantViolation, "scheme " + s->name() + " failed verification");
  return kOk;
}

int find_minor(const Globals& g, const std::string& host_src, const cli::PatternArgs& p) {
  const auto start = Clock::now();
  const Graph host = cli::load_undirected(host_src);
  const SchemePtr s = cli::make_pattern_scheme(p);
  const auto res = find_apex_minor(host, *s);
  const json counters{{"steps", res.stats.steps},
                      {"separations", res.stats.separations},
                      {"contractions", res.stats.contractions},
                      {"additions", res.stats.additions}};
  return emit_certificate(g, "find-minor", make_certificate(host, res.pattern, res.embedding), host,
                          counters, start);
}

int find_butterfly(const Globals& g, const std::string& host_src, const std::string& tree_src,
                   int n) {
  const auto start = Clock::now();
  const Digraph host = cli::load_directed(host_src);
  const Digraph tree = tree_src.empty() ? gen_inarborescence(n, g.seed) : cli::load_directed(tree_src);
  const auto res = find_apex_inarb_butterfly(host, tree);
  return emit_certificate(g, "find-butterfly", make_certificate(host, res.pattern, res.embedding), host,
                          {{"steps", res.steps}, {"separations", res.separations}}, start);
}

int find_wheel(const Globals& g, const std::string& host_src, int t, const std::string& variant) {
  const auto start = Clock::now();
  const Digraph host = cli::load_directed(host_src);
  const auto res = find_wheel_subdivision(host, t);
  const json counters{{"steps", res.steps}, {"separations", res.separations}};
  Certificate cert = make_certificate(host, res.pattern, res.embedding);
  if (variant == "plus") cert = make_certificate(host, directed_wheel_plus(t), res.plus);
  else if (variant == "w2") cert = make_certificate(host, directed_wheel_w2(t), res.w2);
  else if (variant != "wheel") fail(ErrorKind::kParse, "unknown wheel variant " + variant);
  return emit_certificate(g, "find-wheel", cert, host, counters, start);
}

int find_two_block(const Globals& g, const std::string& host_src, int k1, int k2) {
  const auto start = Clock::now();
  const Digraph host = cli::load_directed(host_src);
  const auto res = find_two_block_wheel(host, k1, k2);
  return emit_certificate(g, "find-two-block", make_certificate(host, res.pattern, res.embedding), host,
                          json::object(), start);
}

}  // namespace cmd

namespace cmd {

template <class Cert>
int oracle_outcome(const Globals& g, const std::string& mode, const OracleResult<Cert>& r,
                   const AnyGraph& host, std::optional<Certificate> cert, Clock::time_point start) {
  json j{{"operation", "oracle"},
         {"mode", mode},
         {"input_digest", digest(host)},
         {"verdict", to_string(r.verdict)},
         {"nodes", r.nodes},
         {"seconds", since(start)}};
  if (cert) {
    const Check c = check_certificate(*cert, host);
    if (!c.ok) fail(ErrorKind::kInvariantViolation, "oracle certificate rejected: " + c.violation);
    j["certificate"] = json::parse(to_json(*cert));
  }
  emit_json(g, j);
  std::clog << "oracle " << mode << ": " << to_string(r.verdict) << " after " << r.nodes << " nodes\n";
  switch (r.verdict) {
    case Verdict::kYes: return kOk;
    case Verdict::kNo: return kNegative;
    default: return kBudgetExit;
  }
}

int oracle(const Globals& g, const std::string& mode, const std::string& host_src,
           const std::string& pattern_src) {
  const auto start = Clock::now();
  if (mode == "minor" || mode == "subdivision") {
    const Graph host = cli::load_undirected(host_src);
    const Graph pattern = cli::load_undirected(pattern_src);
    if (mode == "minor") {
      const auto r = oracle_minor(host, pattern, g.budget());
      std::optional<Certificate> c;
      if (r.certificate) c = make_certificate(host, pattern, *r.certificate);
      return oracle_outcome(g, mode, r, host, c, start);
    }
    const auto r = oracle_subdivision(host, pattern, g.budget());
    std::optional<Certificate> c;
    if (r.certificate) c = make_certificate(host, pattern, *r.certificate);
    return oracle_outcome(g, mode, r, host, c, start);
  }
  const Digraph host = cli::load_directed(host_src);
  const Digraph pattern = cli::load_directed(pattern_src);
  if (mode == "dsubdivision") {
    const auto r = oracle_subdivision(host, pattern, g.budget());
    std::optional<Certificate> c;
    if (r.certificate) c = make_certificate(host, pattern, *r.certificate);
    return oracle_outcome(g, mode, r, host, c, start);
  }
  ButterflyMode bm;
  if (mode == "butterfly") bm = ButterflyMode::kBranchSet;
  else if (mode == "butterfly-opseq") bm = ButterflyMode::kOperationSequence;
  else fail(ErrorKind::kParse, "unknown oracle mode " + mode);
  const auto r = oracle_butterfly(host, pattern, g.budget(), bm);
  std::optional<Certificate> c;
  if (r.certificate) c = make_certificate(host, pattern, *r.certificate);
  return oracle_outcome(g, mode, r, host, c, start);
}

int check_cert(const Globals& g, const std::string& cert_path, const std::string& host_src) {
  const Certificate cert = certificate_from_json(read_file(cert_path));
  const AnyGraph host = cli::load_graph(host_src);
  const Check c = check_certificate(cert, host);
  emit_json(g, {{"operation", "check-cert"},
                {"input_digest", digest(host)},
                {"kind", cert.kind()},
                {"valid", c.ok},
                {"violation", c.violation}});
  return c.ok ? kOk : kNegative;
}

int suite(const Globals& g, const std::vector<int>& ids) {
  SuiteOptions o;
  o.seed = g.seed;
  o.budget = g.budget();
  json arr = json::array();
  bool all = true;
  for (int id : ids.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10} : ids) {
    const auto r = run_criterion(id, o);
    std::clog << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << r.detail << " ["
              << r.seconds << " s]\n";
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                   {"seconds", r.seconds}});
    all = all && r.pass;
  }
  emit_json(g, {{"operation", "suite"}, {"seed", g.seed}, {"criteria", arr}, {"pass", all}});
  return all ? kOk : kNegative;
}

}  // namespace cmd

int main(int argc, char** argv) {
  CLI::App app{"Constructive minor and butterfly-minor search"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--budget-nodes", g.budget_nodes, "oracle search-node budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-ms", g.budget_ms, "oracle wall-clock budget in ms")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write the main result to this path");

  std::function<int()> run;

  cmd::GenArgs gen;
  auto* s_gen = app.add_subcommand("gen", "generate an instance as an edge list");
  s_gen->add_option("--kind", gen.kind, "universal|binary|snake|fan|tree|cactus|min-degree|"
                                        "min-outdegree|inarb|subcubic-inarb|complete|cycle|path|<name>")
      ->required();
  s_gen->add_option("--n", gen.n, "vertex count");
  s_gen->add_option("--h", gen.h, "height");
  s_gen->add_option("--t", gen.t, "minimum (out-)degree");
  s_gen->callback([&] { run = [&] { return cmd::gen(g, gen); }; });

  std::string host, pattern_file, root, tree, mode, cert, variant = "wheel";
  std::vector<std::string> orderings;
  auto* s_vo = app.add_subcommand("verify-ordering", "brute-force contractible-ordering check");
  s_vo->add_option("--host", host)->required();
  s_vo->add_option("--ordering", orderings, "comma-separated vertex ids (repeatable)");
  s_vo->add_option("--orderings-file", pattern_file, "one ordering per line");
  s_vo->add_option("--root", root, "comma-separated root vertices");
  s_vo->callback([&] { run = [&] { return cmd::verify_ordering(g, host, orderings, pattern_file, root); }; });

  cli::PatternArgs pat;
  std::size_t cap = 20000;
  auto add_pattern = [&](CLI::App* s) {
    s->add_option("--pattern", pat.kind, "tree|cactus|snake|fan|universal|binary|<edge-list file>")
        ->required();
    s->add_option("--n", pat.n, "pattern vertex count");
    s->add_option("--h", pat.h, "pattern height");
  };
  auto* s_ms = app.add_subcommand("make-scheme", "materialize an ordering scheme and verify it");
  add_pattern(s_ms);
  s_ms->add_option("--cap", cap, "materialization cap");
  s_ms->callback([&] {
    pat.seed = g.seed;
    run = [&] { return cmd::make_scheme(g, pat, cap); };
  });

  auto* s_fm = app.add_subcommand("find-minor", "find an apex-extended pattern minor");
  s_fm->add_option("--host", host)->required();
  add_pattern(s_fm);
  s_fm->callback([&] {
    pat.seed = g.seed;
    run = [&] { return cmd::find_minor(g, host, pat); };
  });

  int n = 0, t = 0, k1 = 0, k2 = 0;
  auto* s_fb = app.add_subcommand("find-butterfly", "find T+ as a butterfly minor");
  s_fb->add_option("--host", host)->required();
  auto* tree_opt = s_fb->add_option("--tree", tree, "in-arborescence edge list");
  s_fb->add_option("--n", n, "size of a random in-arborescence")->excludes(tree_opt);
  s_fb->callback([&] {
    if (tree.empty() && n <= 0) throw CLI::ValidationError("find-butterfly", "--tree or --n is required");
    run = [&] { return cmd::find_butterfly(g, host, tree, n); };
  });

  auto* s_fw = app.add_subcommand("find-wheel", "find a directed wheel subdivision");
  s_fw->add_option("--host", host)->required();
  s_fw->add_option("--t", t)->required();
  s_fw->add_option("--variant", variant, "wheel|plus|w2")->check(CLI::IsMember({"wheel", "plus", "w2"}));
  s_fw->callback([&] { run = [&] { return cmd::find_wheel(g, host, t, variant); }; });

  auto* s_tb = app.add_subcommand("find-two-block", "find a two-block wheel subdivision");
  s_tb->add_option("--host", host)->required();
  s_tb->add_option("--k1", k1)->required();
  s_tb->add_option("--k2", k2)->required();
  s_tb->callback([&] { run = [&] { return cmd::find_two_block(g, host, k1, k2); }; });

  std::string pattern;
  auto* s_or = app.add_subcommand("oracle", "exhaustive containment test");
  s_or->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"minor", "subdivision", "dsubdivision", "butterfly", "butterfly-opseq"}));
  s_or->add_option("--host", host)->required();
  s_or->add_option("--pattern", pattern)->required();
  s_or->callback([&] { run = [&] { return cmd::oracle(g, mode, host, pattern); }; });

  auto* s_cc = app.add_subcommand("check-cert", "verify a JSON certificate against a host");
  s_cc->add_option("--cert", cert)->required();
  s_cc->add_option("--host", host)->required();
  s_cc->callback([&] { run = [&] { return cmd::check_cert(g, cert, host); }; });

  std::vector<int> ids;
  auto* s_su = app.add_subcommand("suite", "run the acceptance corpus");
  s_su->add_option("--criteria", ids, "criterion ids (default all)")->delimiter(',')->check(CLI::Range(1, kCriteria));
  s_su->callback([&] { run = [&] { return cmd::suite(g, ids); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return run();
  } catch (const GraphError& e) {
    std::clog << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kHypothesis: return kHypothesisExit;
      case ErrorKind::kInvariantViolation:
      case ErrorKind::kContractStep:
      case ErrorKind::kNotButterfly: return kInvariantExit;
      default: return kDataError;
    }
  } catch (const std::exception& e) {
    std::clog << "error: " << e.what() << "\n";
    return kDataError;
  }
}
