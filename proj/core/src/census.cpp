#include "bipmc/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "bipmc/canonical.hpp"
#include "bipmc/construct.hpp"
#include "bipmc/kext.hpp"
#include "bipmc/matching.hpp"
#include "bipmc/recognize.hpp"

namespace bipmc {

namespace {

struct Generator {
  const EnumerationOptions& opt;
  int s;  // columns
  int t;  // rows
  int row_min;
  std::vector<std::uint32_t> masks;
  int worker;
  int workers;
  long shard_counter = 0;
  std::vector<BipGraph>* out;

  bool connected(const RowGraph& g) const {
    // Union of columns reachable through rows, starting from row 0.
    std::uint32_t cols = g.rows[0];
    std::vector<char> used(g.row_count(), 0);
    used[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < g.row_count(); ++i) {
        if (!used[i] && (g.rows[i] & cols)) {
          used[i] = 1;
          cols |= g.rows[i];
          grew = true;
        }
      }
    }
    const std::uint32_t all = s == 32 ? ~0u : (1u << s) - 1;
    return cols == all && std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
  }

  bool accepted(const RowGraph& child, const Canonization& canon) const {
    const int added = child.row_count() - 1;
    int last = -1;
    for (int i = 0; i < child.row_count(); ++i) {
      if (canon.row_label[i] == added) last = i;
    }
    if (last == added || child.rows[last] == child.rows[added]) return true;
    return canonize(child, added).form == canonize(child, last).form;
  }

  bool column_room(const RowGraph& g) const {
    const int remaining = t - g.row_count();
    int edges = 0;
    for (int j = 0; j < s; ++j) {
      int d = 0;
      for (std::uint32_t r : g.rows) d += r >> j & 1u;
      if (d + remaining < opt.min_degree) return false;
    }
    for (std::uint32_t r : g.rows) edges += std::popcount(r);
    if (opt.edge_margin >= 0) {
      const int n = s + t;
      if (2 * (edges + remaining * row_min) > 3 * n - 6 + 2 * opt.edge_margin) return false;
    }
    return true;
  }

  void leaf(const RowGraph& g, const Canonization& canon) {
    if (!connected(g)) return;
    for (int j = 0; j < s; ++j) {
      int d = 0;
      for (std::uint32_t r : g.rows) d += r >> j & 1u;
      if (d < opt.min_degree) return;
    }
    if (opt.edge_margin >= 0) {
      int edges = 0;
      for (std::uint32_t r : g.rows) edges += std::popcount(r);
      if (2 * edges > 3 * (s + t) - 6 + 2 * opt.edge_margin) return;
    }
    if (s == t && canonize(transpose(g)).form < canon.form) return;
    out->push_back(to_bip_graph(canon.form));
  }

  void extend(const RowGraph& g) {
    const int depth = g.row_count();
    if (depth == std::min(opt.shard_depth, t - 1) && workers > 1) {
      if (shard_counter++ % workers != worker) return;
    }
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t mask : masks) {
      RowGraph child = g;
      child.rows.push_back(mask);
      if (!column_room(child)) continue;
      Canonization canon = canonize(child);
      if (!accepted(child, canon)) continue;
      if (!seen.insert(canon.form.rows).second) continue;
      if (child.row_count() == t) {
        leaf(child, canon);
      } else {
        extend(canon.form);
      }
    }
  }
};

}  // namespace

void enumerate_bipartite(const EnumerationOptions& opt, const std::function<void(const BipGraph&)>& fn) {
  for (const BipGraph& g : enumerate_bipartite(opt)) fn(g);
}

std::vector<BipGraph> enumerate_bipartite(const EnumerationOptions& opt) {
  if (opt.max_n > opt.budget_n) {
    throw Error(ErrorCode::kBudgetExceeded, "enumeration budget is n <= " + std::to_string(opt.budget_n));
  }
  std::vector<std::pair<std::string, BipGraph>> all;
  std::mutex mu;
  const int workers = std::max(1, opt.jobs);
  for (int n = std::max(1, opt.min_n); n <= opt.max_n; ++n) {
    if (n == 1) {
      if (opt.min_degree <= 0) all.push_back({"0,1:0", BipGraph(0, 1, {})});
      continue;
    }
    for (int s = 1; 2 * s <= n; ++s) {
      const int t = n - s;
      const int row_min = std::max(1, opt.min_degree);
      std::vector<std::uint32_t> masks;
      for (std::uint32_t m = 1; m < (1u << s); ++m) {
        if (std::popcount(m) >= row_min) masks.push_back(m);
      }
      auto work = [&](int w) {
        std::vector<BipGraph> local;
        Generator gen{opt, s, t, row_min, masks, w, workers, 0, &local};
        RowGraph root;
        root.cols = s;
        gen.extend(root);
        std::lock_guard<std::mutex> lock(mu);
        for (auto& g : local) all.push_back({canonical_form(g), std::move(g)});
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.second.n() != y.second.n()) return x.second.n() < y.second.n();
    return x.first < y.first;
  });
  std::vector<BipGraph> out;
  out.reserve(all.size());
  for (auto& [code, g] : all) out.push_back(std::move(g));
  return out;
}

namespace {

struct Context {
  std::string theta;
  std::string c4;
  std::string c6;
};

struct Outcome {
  CensusRecord record;
  std::vector<Violation> violations;
  std::vector<Violation> notes;
  long disagreements = 0;
};

Outcome examine(const BipGraph& g, const CensusOptions& opt, const Context& ctx) {
  Outcome o;
  CensusRecord& r = o.record;
  r.canonical = canonical_form(g);
  r.n = g.n();
  r.m = g.m();
  auto fail = [&](std::string check, std::string detail = {}) {
    o.violations.push_back({std::move(check), r.canonical, std::move(detail)});
  };
  r.matching_covered = is_matching_covered(g);
  if (r.matching_covered) {
    if (!is_two_connected(g)) fail("mc_two_connected");
    r.minimal_mc = removable_edges(g).empty();
  }
  r.extremal = extremal_counts(g);
  r.extremal.is_minimal_mc = r.minimal_mc;
  if (r.minimal_mc) {
    const auto& f = r.extremal.flags;
    const bool is_c4 = r.canonical == ctx.c4, is_c6 = r.canonical == ctx.c6;
    r.recognized[kH2] = recognize_h2(g).has_value();
    r.recognized[kH3] = recognize_h3(g).has_value();
    r.recognized[kH4] = recognize_h4(g).has_value();
    r.recognized[kH0] = recognize_h0(g).verdict;
    r.recognized[kH1] = recognize_h1(g).verdict;
    for (int i = 0; i < 5; ++i) {
      if (r.recognized[i] != f[i]) {
        r.agreement = false;
        fail("recognizer_h" + std::to_string(i), "flag " + std::to_string(f[i]) + " recognizer " + std::to_string(r.recognized[i]));
      }
    }
    BoundCheck bc = evaluate_bounds(g);
    for (const auto& b : bc.bounds) {
      if (!b.holds && !b.exempt) fail("bound_" + b.name, std::to_string(b.lhs) + " vs " + std::to_string(b.rhs));
    }
    if (!high_degree_part_is_forest(g, 3)) fail("forest_v3");
    if (f[kH2] && !is_c4) {
      if (!e2_is_perfect_matching_of_v2(g)) fail("e2_perfect_matching");
      if (!counting_identities(g).all()) fail("counting_identities");
      if (!f[kH0]) fail("poset_h2_in_h0");
    }
    if (f[kH3] && !f[kH2]) fail("poset_h3_in_h2");
    if (f[kH4] && !is_c6 && !f[kH2]) fail("poset_h4_in_h2");
    if (f[kH1] && !f[kH0]) fail("poset_h1_in_h0");
    if ((f[kH3] && f[kH4]) && r.canonical != ctx.theta) fail("theta_h3_h4");
    if ((f[kH1] && f[kH2]) && r.canonical != ctx.theta) fail("theta_h1_h2");
  }
  for (int k = 1; k <= opt.k_max; ++k) {
    KRecord kr;
    KExtendReport rep;
    try {
      rep = is_k_extendable(g, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvariantViolation) throw;
      ++o.disagreements;
      fail("engine_agreement_k" + std::to_string(k), e.what());
      r.k.push_back(kr);
      continue;
    }
    kr.extendable = rep.verdict;
    if (k == 1 && g.n() >= 4 && kr.extendable != r.matching_covered) fail("k1_equals_mc");
    if (kr.extendable) {
      if (g.min_degree() < k + 1) fail("min_degree_k" + std::to_string(k));
      kr.essential_connectivity = essential_edge_connectivity(g);
      if (kr.essential_connectivity < 2 * k) fail("essential_connectivity_k" + std::to_string(k));
      kr.minimal = superfluous_edges(g, k).empty();
      if (kr.minimal) {
        BoundsReport br = evaluate_kext_bounds(g, k);
        if (!br.forest) fail("forest_k" + std::to_string(k));
        for (const auto& line : br.lines) {
          kr.slacks.push_back({line.name, line.slack});
          if (line.holds) continue;
          Violation v{line.name + "_k" + std::to_string(k), r.canonical, std::to_string(line.lhs) + " vs " + std::to_string(line.rhs)};
          if (line.conjecture) o.notes.push_back(v); else o.violations.push_back(v);
        }
        if (k == 2 && g.n() >= 12 && 2 * g.m() > 5 * g.n() - 20) fail("size_k2");
      }
    }
    r.k.push_back(kr);
  }
  return o;
}

}  // namespace

CensusSummary run_census(const CensusOptions& opt, const std::function<void(const CensusRecord&)>& sink) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationOptions eo;
  eo.max_n = opt.max_n;
  eo.jobs = opt.jobs;
  eo.shard_depth = opt.shard_depth;
  std::vector<BipGraph> graphs = enumerate_bipartite(eo);
  Context ctx{canonical_form(leaf_matching(Tree::star(3)).graph), canonical_form(leaf_matching(Tree::path(2)).graph),
              canonical_form(leaf_matching(Tree::star(2)).graph)};
  std::vector<Outcome> outcomes(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex err_mu;
  auto work = [&]() {
    for (;;) {
      std::size_t i = next++;
      if (i >= graphs.size()) return;
      try {
        outcomes[i] = examine(graphs[i], opt, ctx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!error) error = std::current_exception();
        next = graphs.size();
        return;
      }
    }
  };
  const int workers = std::max(1, opt.jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  CensusSummary s;
  s.max_n = opt.max_n;
  s.k_max = opt.k_max;
  const char* names[5] = {"H0", "H1", "H2", "H3", "H4"};
  for (Outcome& o : outcomes) {
    const CensusRecord& r = o.record;
    auto& c = s.counts[r.n];
    ++s.graphs;
    ++c["graphs"];
    if (r.matching_covered) {
      ++s.matching_covered;
      ++c["matching_covered"];
    }
    if (r.minimal_mc) {
      ++s.minimal_mc;
      ++c["minimal_mc"];
      for (int i = 0; i < 5; ++i) {
        if (r.extremal.flags[i]) ++c[names[i]];
      }
      if (r.extremal.flags[kH3] && r.extremal.flags[kH4]) s.members["H3&H4"].push_back(r.canonical);
      if (r.extremal.flags[kH1] && r.extremal.flags[kH2]) s.members["H1&H2"].push_back(r.canonical);
    }
    for (std::size_t k = 0; k < r.k.size(); ++k) {
      const std::string tag = "k" + std::to_string(k + 1);
      if (r.k[k].extendable) ++c[tag + "_extendable"];
      if (r.k[k].minimal) {
        ++c[tag + "_minimal"];
        for (const auto& [name, slack] : r.k[k].slacks) {
          if (slack == 0) {
            ++c[tag + "_tight_" + name];
            if (k >= 1 && name.rfind("conj_", 0) == 0) s.members[tag + "_tight_" + name].push_back(r.canonical);
          }
        }
      }
    }
    s.engine_disagreements += o.disagreements;
    for (auto& v : o.violations) s.violations.push_back(std::move(v));
    for (auto& v : o.notes) s.conjecture_notes.push_back(std::move(v));
    if (sink) sink(r);
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

bool same_summary(const CensusSummary& x, const CensusSummary& y) {
  auto same_v = [](const std::vector<Violation>& a, const std::vector<Violation>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].check != b[i].check || a[i].canonical != b[i].canonical || a[i].detail != b[i].detail) return false;
    }
    return true;
  };
  return x.schema == y.schema && x.max_n == y.max_n && x.k_max == y.k_max && x.graphs == y.graphs &&
         x.matching_covered == y.matching_covered && x.minimal_mc == y.minimal_mc && x.counts == y.counts &&
         same_v(x.violations, y.violations) && same_v(x.conjecture_notes, y.conjecture_notes) &&
         x.members == y.members && x.engine_disagreements == y.engine_disagreements;
}

}  // namespace bipmc
