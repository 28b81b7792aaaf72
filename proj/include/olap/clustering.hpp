#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "olap/labels.hpp"
#include "olap/matrix.hpp"
#include "olap/query.hpp"
#include "olap/rational.hpp"

namespace olap {

// A pool of equivalent-or-similar queries. `frequency` counts log
// occurrences, not distinct queries, so duplicates keep their weight.
struct QueryCluster {
  std::string id;  // "C1", or "C1/C2" after a merge
  std::set<ParsedQuery> queries;
  std::size_t frequency = 0;

  bool operator==(const QueryCluster&) const = default;
};

// Collapse a flat occurrence list into singleton clusters C1..Cn ordered by
// first appearance; repeated queries raise the owning cluster's frequency.
std::vector<QueryCluster> dedupe_and_count(std::span<const ParsedQuery> occurrences);

// Pairwise similarity of singleton clusters (entry = jaccard of the two
// representative queries, diagonal 0). Throws if a cluster holds more than
// one query or two clusters hold the same query — run dedupe_and_count first.
SimilarityMatrix build_matrix(std::span<const QueryCluster> clusters);

// How the similarity of two groups is derived from member-pair similarity.
enum class LinkageMode {
  max_similarity,  // best cross pair (default; rewards any strong overlap)
  complete,        // worst cross pair (merges only uniformly similar pools)
};

// Group-to-group similarity over the base singleton matrix: the max (or min,
// for complete linkage) base entry across all cross pairs. `a` and `b` are
// disjoint, non-empty sets of base indices.
Rational linkage(const SimilarityMatrix& base, std::span<const std::size_t> a,
                 std::span<const std::size_t> b,
                 LinkageMode mode = LinkageMode::max_similarity);

// Linkage between two clusters computed directly from their query sets;
// equals linkage() over the base matrix entries of the same members.
Rational cluster_linkage(const QueryCluster& a, const QueryCluster& b,
                         LinkageMode mode = LinkageMode::max_similarity);

struct MergeStep {
  std::string left;
  std::string right;
  std::string merged;
  Rational similarity;  // linkage value at merge time

  bool operator==(const MergeStep&) const = default;
};

struct ClusterResult {
  std::vector<QueryCluster> clusters;
  std::vector<MergeStep> trace;
};

// Greedy agglomeration down to `target_k` clusters, linking through the base
// singleton matrix. Ties on linkage prefer the pair with the larger combined
// frequency, then the leftmost pair in creation order. If the input already
// has <= target_k clusters it is returned unchanged with an empty trace.
ClusterResult agglomerate(std::vector<QueryCluster> clusters, std::size_t target_k = 3,
                          LinkageMode mode = LinkageMode::max_similarity);

// One "merge <left> <right> sim=<p/q> -> <merged>" line per step.
std::string render_trace(const std::vector<MergeStep>& trace);

// The three behavioral pools, by decreasing recurrence.
struct PreferencePools {
  QueryCluster consensual;
  QueryCluster semi_conflicting;
  QueryCluster conflicting;

  const QueryCluster& pool(PoolLabel label) const;
  QueryCluster& pool(PoolLabel label);

  bool operator==(const PreferencePools&) const = default;
};

// Rank exactly three clusters by frequency: the most recurrent analyses are
// consensual, then semi-conflicting, then conflicting. Ties keep the earlier
// cluster first. Throws when given any other cluster count, advising a
// target-k adjustment.
PreferencePools label_pools(std::vector<QueryCluster> clusters);

}  // namespace olap
