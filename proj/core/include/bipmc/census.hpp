#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bipmc/classify.hpp"
#include "bipmc/graph.hpp"

namespace bipmc {

struct EnumerationOptions {
  int max_n = 10;
  int min_n = 1;
  int min_degree = 2;
  int edge_margin = -1;  // keep 2m <= 3n-6 + 2*margin when >= 0
  int jobs = 1;
  int shard_depth = 2;
  int budget_n = 12;
};

// One graph per isomorphism class of connected simple bipartite graphs meeting the filters.
// Smaller class is A. Callbacks may run on several threads at once.
void enumerate_bipartite(const EnumerationOptions& opt, const std::function<void(const BipGraph&)>& fn);
std::vector<BipGraph> enumerate_bipartite(const EnumerationOptions& opt);

struct KRecord {
  bool extendable = false;
  bool minimal = false;
  int essential_connectivity = -1;  // when extendable
  std::vector<std::pair<std::string, long>> slacks;  // bound name -> slack, when minimal
};

struct CensusRecord {
  std::string canonical;
  int n = 0;
  int m = 0;
  bool matching_covered = false;
  bool minimal_mc = false;
  ExtremalReport extremal;
  std::array<bool, 5> recognized{};  // h0..h4 from the recognizers
  bool agreement = true;
  std::vector<KRecord> k;  // index k-1
};

struct Violation {
  std::string check;
  std::string canonical;
  std::string detail;
};

struct CensusSummary {
  int schema = 1;
  int max_n = 0;
  int k_max = 0;
  long graphs = 0;
  long matching_covered = 0;
  long minimal_mc = 0;
  std::map<int, std::map<std::string, long>> counts;  // n -> class -> count
  std::vector<Violation> violations;                  // theorem failures
  std::vector<Violation> conjecture_notes;            // negative conjecture slacks
  std::map<std::string, std::vector<std::string>> members;  // "H1&H2", "H3&H4", tight families
  long engine_disagreements = 0;
  double seconds = 0;
};

struct CensusOptions {
  int max_n = 10;
  int k_max = 1;
  int jobs = 1;
  int shard_depth = 2;
};

// Records go to sink from a single thread, sorted by canonical form.
CensusSummary run_census(const CensusOptions& opt, const std::function<void(const CensusRecord&)>& sink = {});

// Summaries compare equal ignoring runtime.
bool same_summary(const CensusSummary& x, const CensusSummary& y);

}  // namespace bipmc
