#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfmaps/perm_group.hpp"
#include "sqfmaps/structure.hpp"
#include "sqfmaps/triples.hpp"

namespace sqf {

struct SylowSummary {
  std::uint64_t prime = 0;
  std::size_t order = 0;
  std::string tag;  // IsoClassTag::to_string of the Sylow subgroup
};

struct TripleSummary {
  TripleKind kind = TripleKind::Regular;
  std::optional<GeneratingTriple> witness;
  SearchStats stats;
};

// Structural report on an arbitrary permutation group.
struct AnalysisReport {
  std::size_t degree = 0;
  std::size_t order = 0;
  bool solvable = false;
  std::vector<SylowSummary> sylow;
  HypothesisReport hypothesis;
  std::vector<TripleSummary> triples;  // regular, reversing, rotary
};

struct AnalyzeOptions {
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
};

AnalysisReport analyze(const PermGroup& G, const AnalyzeOptions& opts = {});

std::string to_text(const AnalysisReport& r);
// One JSON object on a single line.
std::string to_record(const AnalysisReport& r);

}  // namespace sqf
