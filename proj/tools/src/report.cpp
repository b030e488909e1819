#include "bipmc/cli/report.hpp"

#include "bipmc/graph.hpp"

namespace bipmc::cli {

namespace {

constexpr const char* kClassNames[5] = {"h0", "h1", "h2", "h3", "h4"};

Json vertices(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(to_string(v));
  return out;
}

}  // namespace

Json to_json(const ExtremalReport& r) {
  Json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["m"] = r.m;
  j["v2"] = r.v2;
  j["e2"] = r.e2;
  j["v3"] = r.v3;
  j["e3"] = r.e3;
  j["e32"] = r.e32;
  j["minimal_mc"] = r.is_minimal_mc;
  Json flags, slacks;
  for (int c = 0; c < 5; ++c) {
    flags[kClassNames[c]] = r.flags[c];
    slacks[kClassNames[c]] = r.slacks[c];
  }
  j["flags"] = flags;
  j["slacks"] = slacks;
  return j;
}

Json to_json(const BoundCheck& b) {
  Json j = Json::array();
  for (const BoundResult& x : b.bounds) {
    j.push_back({{"name", x.name}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"holds", x.holds},
                 {"exempt", x.exempt}, {"slack", x.slack}});
  }
  return j;
}

Json to_json(const EarDecomposition& ed) {
  Json j;
  j["schema"] = 1;
  j["initial_cycle"] = {{"vertices", vertices(ed.initial_cycle.vertices)}, {"edges", ed.initial_cycle.edges}};
  Json ears = Json::array();
  for (const Ear& e : ed.ears) ears.push_back({{"vertices", vertices(e.vertices)}, {"edges", e.edges}});
  j["ears"] = ears;
  return j;
}

Json to_json(const KExtendReport& r) {
  Json j;
  j["schema"] = 1;
  j["k"] = r.k;
  j["extendable"] = r.verdict;
  j["engine"] = r.engine == KExtEngine::kDirect ? "direct" : "hall";
  if (!r.verdict) {
    j["reason"] = r.reason;
    if (!r.failing.empty()) j["failing_matching"] = r.failing;
    if (!r.violator.empty()) {
      j["violator"] = vertices(r.violator);
      j["neighbors"] = vertices(r.neighbors);
    }
  }
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["schema"] = 1;
  j["k"] = r.k;
  j["forest"] = r.forest;
  j["size_threshold_reached"] = r.size_threshold_reached;
  Json lines = Json::array();
  for (const BoundLine& l : r.lines) {
    lines.push_back({{"name", l.name}, {"conjecture", l.conjecture}, {"lhs", l.lhs}, {"rhs", l.rhs},
                     {"holds", l.holds}, {"slack", l.slack}});
  }
  j["lines"] = lines;
  return j;
}

Json to_json(const LeafMatchingWitness& w) {
  Json j;
  Json edges = Json::array();
  for (auto [u, v] : w.tree.edges()) edges.push_back({u, v});
  j["tree"] = {{"n", w.tree.size()}, {"edges", edges}, {"code", canonical_code(w.tree)}};
  j["tree_to_host"] = vertices(w.tree_to_host);
  j["tree_prime_to_host"] = vertices(w.tree_prime_to_host);
  j["iso"] = w.iso;
  j["pairing"] = w.pairing;
  return j;
}

Json to_json(const CensusRecord& r) {
  Json j;
  j["schema"] = 1;
  j["canonical"] = r.canonical;
  j["n"] = r.n;
  j["m"] = r.m;
  j["matching_covered"] = r.matching_covered;
  j["minimal_mc"] = r.minimal_mc;
  if (r.minimal_mc) {
    Json flags, slacks, rec;
    for (int c = 0; c < 5; ++c) {
      flags[kClassNames[c]] = r.extremal.flags[c];
      slacks[kClassNames[c]] = r.extremal.slacks[c];
      rec[kClassNames[c]] = r.recognized[c];
    }
    j["flags"] = flags;
    j["slacks"] = slacks;
    j["recognized"] = rec;
    j["agreement"] = r.agreement;
  }
  Json ks = Json::array();
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    const KRecord& kr = r.k[i];
    Json x;
    x["k"] = static_cast<int>(i) + 1;
    x["extendable"] = kr.extendable;
    x["minimal"] = kr.minimal;
    if (kr.extendable) x["essential_connectivity"] = kr.essential_connectivity;
    if (!kr.slacks.empty()) {
      Json s;
      for (const auto& [name, v] : kr.slacks) s[name] = v;
      x["slacks"] = s;
    }
    ks.push_back(x);
  }
  j["k"] = ks;
  return j;
}

Json to_json(const CensusSummary& s) {
  auto viol = [](const std::vector<Violation>& vs) {
    Json a = Json::array();
    for (const Violation& v : vs) a.push_back({{"check", v.check}, {"canonical", v.canonical}, {"detail", v.detail}});
    return a;
  };
  Json j;
  j["schema"] = s.schema;
  j["max_n"] = s.max_n;
  j["k_max"] = s.k_max;
  j["graphs"] = s.graphs;
  j["matching_covered"] = s.matching_covered;
  j["minimal_mc"] = s.minimal_mc;
  Json counts = Json::object();
  for (const auto& [n, m] : s.counts) {
    Json c = Json::object();
    for (const auto& [k, v] : m) c[k] = v;
    counts[std::to_string(n)] = c;
  }
  j["counts"] = counts;
  j["violations"] = viol(s.violations);
  j["conjecture_notes"] = viol(s.conjecture_notes);
  Json members = Json::object();
  for (const auto& [k, v] : s.members) members[k] = v;
  j["members"] = members;
  j["engine_disagreements"] = s.engine_disagreements;
  j["seconds"] = s.seconds;
  return j;
}

}  // namespace bipmc::cli
