#include <doctest.h>

#include <algorithm>
#include <set>

#include "bipmc/canonical.hpp"
#include "bipmc/census.hpp"
#include "bipmc/isomorphism.hpp"
#include "support.hpp"

using namespace bipmc;
using namespace bipmc::testing;

namespace {

// All connected simple bipartite graphs on a+b vertices with min degree >= 2, one per class.
std::set<std::string> brute_force(int n) {
  std::set<std::string> out;
  for (int a = 1; a <= n / 2; ++a) {
    const int b = n - a;
    const int cells = a * b;
    for (long mask = 0; mask < (1L << cells); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (int c = 0; c < cells; ++c)
        if (mask >> c & 1) e.push_back({c / b, c % b});
      const BipGraph g = build(a, b, e);
      if (g.min_degree() < 2 || !is_connected(g)) continue;
      out.insert(canonical_form(g));
    }
  }
  return out;
}

std::vector<std::string> forms(const std::vector<BipGraph>& gs) {
  std::vector<std::string> out;
  for (const BipGraph& g : gs) out.push_back(canonical_form(g));
  return out;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("enumeration at n <= 4 is just C4") {
    EnumerationOptions opt;
    opt.max_n = 4;
    const auto gs = enumerate_bipartite(opt);
    REQUIRE(gs.size() == 1);
    CHECK(are_isomorphic(gs[0], cycle(2)));
  }

  TEST_CASE("enumeration at n <= 6 contains the expected graphs") {
    EnumerationOptions opt;
    opt.max_n = 6;
    const auto fs = forms(enumerate_bipartite(opt));
    const std::set<std::string> set(fs.begin(), fs.end());
    CHECK(set.size() == fs.size());
    CHECK(set.count(canonical_form(cycle(3))));
    CHECK(set.count(canonical_form(complete(3, 3))));
    CHECK(set.count(canonical_form(complete(2, 3))));
    CHECK(set.count(canonical_form(complete(2, 4))));
    for (const BipGraph& g : enumerate_bipartite(opt)) {
      CHECK(g.min_degree() >= 2);
      CHECK(is_connected(g));
      CHECK(g.is_simple());
      CHECK(g.a_count() <= g.b_count());
    }
  }

  TEST_CASE("enumeration matches brute force") {
    for (int n = 4; n <= 8; ++n) {
      EnumerationOptions opt;
      opt.max_n = n;
      opt.min_n = n;
      const auto fs = forms(enumerate_bipartite(opt));
      const std::set<std::string> got(fs.begin(), fs.end());
      CHECK(got.size() == fs.size());
      CHECK(got == brute_force(n));
    }
  }

  TEST_CASE("no isomorphic pairs at n <= 7") {
    EnumerationOptions opt;
    opt.max_n = 7;
    const auto gs = enumerate_bipartite(opt);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i].n() == gs[j].n() && gs[i].m() == gs[j].m()) CHECK_FALSE(are_isomorphic(gs[i], gs[j]));
  }

  TEST_CASE("shard invariance") {
    EnumerationOptions a;
    a.max_n = 9;
    a.jobs = 1;
    a.shard_depth = 1;
    EnumerationOptions b = a;
    b.jobs = 4;
    b.shard_depth = 3;
    CHECK(forms(enumerate_bipartite(a)) == forms(enumerate_bipartite(b)));
  }

  TEST_CASE("edge margin filter") {
    EnumerationOptions opt;
    opt.max_n = 8;
    opt.edge_margin = 0;
    for (const BipGraph& g : enumerate_bipartite(opt)) CHECK(2 * g.m() <= 3 * g.n() - 6);
  }

  TEST_CASE("census at n <= 8") {
    CensusOptions opt;
    opt.max_n = 8;
    opt.k_max = 2;
    opt.jobs = 2;
    long seen = 0;
    std::vector<std::string> order;
    const CensusSummary s = run_census(opt, [&](const CensusRecord& r) {
      ++seen;
      order.push_back(r.canonical);
    });
    CHECK(seen == s.graphs);
    CHECK(s.violations.empty());
    CHECK(s.engine_disagreements == 0);
    const std::string th = canonical_form(theta());
    REQUIRE(s.members.count("H3&H4"));
    CHECK(s.members.at("H3&H4") == std::vector<std::string>{th});
    REQUIRE(s.members.count("H1&H2"));
    CHECK(s.members.at("H1&H2") == std::vector<std::string>{th});
    CHECK(std::find(order.begin(), order.end(), th) != order.end());

    opt.jobs = 1;
    opt.shard_depth = 1;
    const CensusSummary again = run_census(opt);
    CHECK(same_summary(s, again));
  }
}
