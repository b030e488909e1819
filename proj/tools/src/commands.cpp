#include "bipmc/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bipmc/census.hpp"
#include "bipmc/classify.hpp"
#include "bipmc/cli/dot.hpp"
#include "bipmc/cli/graph_file.hpp"
#include "bipmc/cli/report.hpp"
#include "bipmc/construct.hpp"
#include "bipmc/ears.hpp"
#include "bipmc/kext.hpp"
#include "bipmc/matching.hpp"
#include "bipmc/recognize.hpp"
#include "bipmc/transform.hpp"

namespace bipmc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += to_string(v);
  }
  return s;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string dot_path;
  std::string out_path;

  void export_dot(const BipGraph& g) const {
    if (!dot_path.empty()) write_text(dot_path, to_dot(g));
  }
  void emit_graph(const BipGraph& g, const std::string& comment) const {
    if (out_path.empty()) out << render_graph(g, comment);
    else write_graph_file(out_path, g, comment);
    export_dot(g);
  }
};

int cmd_check(const Context& c, const std::string& file) {
  const BipGraph g = read_graph_file(file);
  c.export_dot(g);
  const MatchabilityCertificate cert = is_matchable(g);
  const bool mc = is_matching_covered(g);
  c.out << "n: " << g.n() << "\nm: " << g.m() << '\n';
  c.out << "matchable: " << yes_no(cert.verdict) << '\n';
  if (!cert.verdict && !cert.violator.empty()) {
    c.out << "hall_violator: " << join_vertices(cert.violator) << '\n';
    c.out << "neighbors: " << join_vertices(cert.neighbors) << '\n';
  }
  c.out << "matching_covered: " << yes_no(mc) << '\n';
  if (mc) c.out << "minimal: " << yes_no(is_minimal_mc(g)) << '\n';
  return mc ? kOk : kNegative;
}

int cmd_classify(const Context& c, const std::string& file, bool json) {
  const BipGraph g = read_graph_file(file);
  c.export_dot(g);
  if (!is_matching_covered(g) || !is_minimal_mc(g)) {
    c.err << "not a minimal matching covered graph\n";
    return kNegative;
  }
  const ExtremalReport r = classify_extremal(g);
  const BoundCheck b = evaluate_bounds(g);
  if (json) {
    Json j = to_json(r);
    j["bounds"] = to_json(b);
    c.out << j.dump(2) << '\n';
    return kOk;
  }
  c.out << "n: " << r.n << "\nm: " << r.m << "\n|V2|: " << r.v2 << "\n|E2|: " << r.e2 << "\n|V3|: " << r.v3
        << "\n|E3|: " << r.e3 << "\n|E3,2|: " << r.e32 << '\n';
  static constexpr const char* names[5] = {"H0", "H1", "H2", "H3", "H4"};
  for (int k = 0; k < 5; ++k)
    c.out << names[k] << ": " << yes_no(r.flags[k]) << " (slack " << r.slacks[k] << ")\n";
  for (const BoundResult& x : b.bounds) {
    c.out << "bound " << x.name << ": " << x.lhs << " vs " << x.rhs
          << (x.exempt ? " exempt" : x.holds ? " holds" : " FAILS") << '\n';
  }
  return kOk;
}

int cmd_ears(const Context& c, const std::string& file) {
  const BipGraph g = read_graph_file(file);
  c.export_dot(g);
  if (!is_matching_covered(g)) {
    c.err << "not matching covered\n";
    return kNegative;
  }
  const EarDecomposition ed = find_ear_decomposition(g);
  const EarVerification v = verify_ear_decomposition(g, ed);
  if (!v.ok) throw Error(ErrorCode::kInvariantViolation, "ear decomposition failed verification: " + v.violation);
  c.out << "cycle: " << join_vertices(ed.initial_cycle.vertices) << '\n';
  for (std::size_t i = 0; i < ed.ears.size(); ++i)
    c.out << "ear " << i + 1 << ": " << join_vertices(ed.ears[i].vertices) << '\n';
  c.out << "ears: " << ed.ears.size() << '\n';
  return kOk;
}

int cmd_retract(const Context& c, const std::string& file) {
  const BipGraph g = read_graph_file(file);
  const Retract r = partial_retract(g);
  std::string comment = "retract: " + std::to_string(r.trace.size()) + " bicontractions";
  if (!r.trace.empty()) comment += "\ntrace: " + join_vertices(r.trace);
  c.emit_graph(r.graph, comment);
  return kOk;
}

void print_witness(const Context& c, const char* label, const LeafMatchingWitness& w) {
  c.out << label << " tree: " << canonical_code(w.tree) << " (" << w.tree.size() << " vertices)\n";
}

int cmd_recognize(const Context& c, const std::string& file) {
  const BipGraph g = read_graph_file(file);
  c.export_dot(g);
  if (!is_matching_covered(g) || !is_minimal_mc(g)) {
    c.err << "not a minimal matching covered graph\n";
    return kNegative;
  }
  bool any = false;
  const RetractRecognition h0 = recognize_h0(g);
  c.out << "H0: " << yes_no(h0.verdict) << '\n';
  if (h0.verdict && h0.witness) print_witness(c, "  retract", *h0.witness);
  const RetractRecognition h1 = recognize_h1(g);
  c.out << "H1: " << yes_no(h1.verdict) << '\n';
  if (h1.verdict && h1.witness) print_witness(c, "  retract", *h1.witness);
  any = h0.verdict || h1.verdict;
  const char* names[3] = {"H2", "H3", "H4"};
  std::optional<LeafMatchingWitness> ws[3] = {recognize_h2(g), recognize_h3(g), recognize_h4(g)};
  for (int i = 0; i < 3; ++i) {
    c.out << names[i] << ": " << yes_no(ws[i].has_value()) << '\n';
    if (ws[i]) {
      print_witness(c, " ", *ws[i]);
      any = true;
    }
  }
  return any ? kOk : kNegative;
}

int cmd_construct(const Context& c, const std::string& kind, const std::string& tree_spec, int k, int p, int q,
                  int r) {
  BipGraph g;
  std::string comment;
  if (kind == "leafmatch") {
    if (tree_spec.empty()) throw Error(ErrorCode::kBadParams, "leafmatch needs --tree");
    g = leaf_matching(parse_tree_spec(tree_spec)).graph;
    comment = "leaf matching of " + tree_spec;
  } else if (kind == "kleafmatch") {
    if (tree_spec.empty()) throw Error(ErrorCode::kBadParams, "kleafmatch needs --tree");
    g = k_leaf_matching(parse_tree_spec(tree_spec), k).graph;
    comment = std::to_string(k) + "-leaf matching of " + tree_spec;
  } else if (kind == "J") {
    g = J(p, r).graph;
    comment = "J(" + std::to_string(p) + "," + std::to_string(r) + ")";
  } else if (kind == "doublestar") {
    g = double_star_graph(p, q, k);
    comment = "double star graph p=" + std::to_string(p) + " q=" + std::to_string(q) + " k=" + std::to_string(k);
  } else {
    throw Error(ErrorCode::kBadParams, "unknown construction " + kind);
  }
  comment += "\nn=" + std::to_string(g.n()) + " m=" + std::to_string(g.m());
  c.emit_graph(g, comment);
  return kOk;
}

int cmd_kext(const Context& c, const std::string& file, int k, bool bounds, bool json) {
  const BipGraph g = read_graph_file(file);
  c.export_dot(g);
  const KExtendReport rep = is_k_extendable(g, k);
  Json j = to_json(rep);
  if (!json) {
    c.out << k << "-extendable: " << yes_no(rep.verdict) << '\n';
    if (!rep.verdict) {
      c.out << "reason: " << rep.reason << '\n';
      if (!rep.violator.empty()) {
        c.out << "violator: " << join_vertices(rep.violator) << '\n';
        c.out << "neighbors: " << join_vertices(rep.neighbors) << '\n';
      }
      if (!rep.failing.empty()) c.out << "failing matching: " << join_ints(rep.failing) << '\n';
    }
  }
  int code = rep.verdict ? kOk : kNegative;
  if (bounds && rep.verdict) {
    if (!is_minimal_k_extendable(g, k)) {
      c.err << "not minimal " << k << "-extendable\n";
      code = kNegative;
    } else {
      const BoundsReport b = bounds_report(g, k);
      if (json) {
        j["bounds"] = to_json(b);
      } else {
        c.out << "G[V" << k + 2 << "] forest: " << yes_no(b.forest) << '\n';
        for (const BoundLine& l : b.lines) {
          c.out << (l.conjecture ? "conjecture " : "bound ") << l.name << ": " << l.lhs << " vs " << l.rhs
                << " slack " << l.slack << (l.holds ? "" : " FAILS") << '\n';
        }
      }
    }
  }
  if (json) c.out << j.dump(2) << '\n';
  return code;
}

int cmd_census(const Context& c, const CensusOptions& opt, const std::string& dir) {
  std::ofstream records;
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    records.open(std::filesystem::path(dir) / "records.jsonl");
    if (!records) throw Error(ErrorCode::kNotFound, "cannot write to " + dir);
  }
  const CensusSummary s = run_census(opt, [&](const CensusRecord& r) {
    if (records.is_open()) records << to_json(r).dump() << '\n';
  });
  const std::string doc = to_json(s).dump(2) + "\n";
  if (!dir.empty()) write_text((std::filesystem::path(dir) / "summary.json").string(), doc);
  c.out << doc;
  return s.violations.empty() && s.engine_disagreements == 0 ? kOk : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite matching-covered graph toolkit", "bipmc"};
  app.require_subcommand(1);
  std::string dot_path;
  app.add_option("--dot", dot_path, "Write a DOT rendering of the input or result graph");

  std::string file;
  std::string out_path;
  bool json = false;

  auto* check = app.add_subcommand("check", "Matching covered and minimality tests");
  check->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Extremal class report of a minimal matching covered graph");
  classify->add_option("file", file)->required();
  classify->add_flag("--json", json);

  auto* ears = app.add_subcommand("ears", "Ear decomposition");
  ears->add_option("file", file)->required();

  auto* retract = app.add_subcommand("retract", "Partial retract");
  retract->add_option("file", file)->required();
  retract->add_option("-o,--out", out_path);

  auto* recognize = app.add_subcommand("recognize", "Extremal class recognizers with witnesses");
  recognize->add_option("file", file)->required();

  std::string kind, tree_spec;
  int k = 1, p = 0, q = 0, r = 0;
  auto* construct = app.add_subcommand("construct", "Build leafmatch, kleafmatch, J or doublestar graphs");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"leafmatch", "kleafmatch", "J", "doublestar"}));
  construct->add_option("--tree", tree_spec, "Tree spec: 'star P', 'path N', 'doublestar P Q', 'edges N u-v ...'");
  construct->add_option("-k", k);
  construct->add_option("-p,--p", p);
  construct->add_option("-q,--q", q);
  construct->add_option("-r,--r", r);
  construct->add_option("-o,--out", out_path);

  bool bounds = false;
  int kk = 1;
  auto* kext = app.add_subcommand("kext", "k-extendability");
  kext->add_option("file", file)->required();
  kext->add_option("-k", kk)->required()->check(CLI::NonNegativeNumber);
  kext->add_flag("--bounds", bounds);
  kext->add_flag("--json", json);

  CensusOptions copt;
  std::string dir;
  auto* census = app.add_subcommand("census", "Exhaustive census of small bipartite graphs");
  census->add_option("--max-n", copt.max_n)->required()->check(CLI::Range(1, 16));
  census->add_option("--k", copt.k_max)->check(CLI::Range(1, 3));
  census->add_option("--jobs", copt.jobs)->check(CLI::PositiveNumber);
  census->add_option("--shard-depth", copt.shard_depth)->check(CLI::NonNegativeNumber);
  census->add_option("--out", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  Context ctx{out, err, dot_path, out_path};
  try {
    if (*check) return cmd_check(ctx, file);
    if (*classify) return cmd_classify(ctx, file, json);
    if (*ears) return cmd_ears(ctx, file);
    if (*retract) return cmd_retract(ctx, file);
    if (*recognize) return cmd_recognize(ctx, file);
    if (*construct) return cmd_construct(ctx, kind, tree_spec, k, p, q, r);
    if (*kext) return cmd_kext(ctx, file, kk, bounds, json);
    if (*census) return cmd_census(ctx, copt, dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace bipmc::cli
