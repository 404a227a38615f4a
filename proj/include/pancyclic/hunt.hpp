#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/pipeline.hpp"
#include "pancyclic/util.hpp"

namespace pancyclic {

struct HuntReport {
  int n_lo = 1, n_hi = 0;
  long long graphs_scanned = 0;
  long long hypothesis_hits = 0;
  // graph6 of hypothesis graphs the reference search finds non-pancyclic
  std::vector<std::string> counterexamples;
  // graph6 where the certifier came up short though the cycles exist
  std::vector<std::string> disagreements;
  // provenance family -> {fallback count, total}
  std::map<std::string, std::pair<long long, long long>> route_use;
  std::string to_json() const;
};

// Exhaustive labeled scan over all graphs with at most n_max (<= 7) vertices.
// jobs > 1 shards the stream across that many worker threads.
HuntReport hunt(int n_max, const PipelineParams& params = {}, int jobs = 1);
// Same scan over a graph6 corpus file, one graph per line.
HuntReport hunt_file(const std::string& path, const PipelineParams& params = {});

struct LemmaTestResult {
  std::string name;
  long long trials = 0;
  long long checked = 0;  // instances that actually exercised the contract
  long long violations = 0;
  long long stalls = 0;  // honest structural refusals, counted separately
  std::vector<std::string> notes;
  bool pass() const { return violations == 0; }
  std::string to_json() const;
};

Expected<LemmaTestResult> lemma_test(const std::string& name, long long trials,
                                     uint64_t seed);
const std::vector<std::string>& lemma_test_names();

}  // namespace pancyclic
