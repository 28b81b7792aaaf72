#include "olap/clustering.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "olap/error.hpp"
#include "olap/similarity.hpp"

namespace olap {

std::vector<QueryCluster> dedupe_and_count(std::span<const ParsedQuery> occurrences) {
  std::vector<QueryCluster> clusters;
  std::map<ParsedQuery, std::size_t> index;
  for (const ParsedQuery& q : occurrences) {
    auto [it, inserted] = index.try_emplace(q, clusters.size());
    if (inserted)
      clusters.push_back({"C" + std::to_string(clusters.size() + 1), {q}, 1});
    else
      ++clusters[it->second].frequency;
  }
  return clusters;
}

SimilarityMatrix build_matrix(std::span<const QueryCluster> clusters) {
  std::vector<ParsedQuery> representatives;
  representatives.reserve(clusters.size());
  std::set<ParsedQuery> seen;
  for (const QueryCluster& c : clusters) {
    if (c.queries.size() != 1)
      throw Error("cluster '" + c.id + "' is not a singleton; the base matrix is built before merging");
    if (!seen.insert(*c.queries.begin()).second)
      throw Error("clusters '" + c.id + "' and an earlier one hold the same query; dedupe first");
    representatives.push_back(*c.queries.begin());
  }
  return build_matrix(std::span<const ParsedQuery>(representatives));
}

Rational linkage(const SimilarityMatrix& base, std::span<const std::size_t> a,
                 std::span<const std::size_t> b, LinkageMode mode) {
  if (a.empty() || b.empty()) throw Error("linkage over an empty cluster");
  bool first = true;
  Rational best;
  for (std::size_t i : a)
    for (std::size_t j : b) {
      const Rational& s = base.at(i, j);
      if (first || (mode == LinkageMode::max_similarity ? best < s : s < best)) best = s;
      first = false;
    }
  return best;
}

Rational cluster_linkage(const QueryCluster& a, const QueryCluster& b, LinkageMode mode) {
  if (a.queries.empty() || b.queries.empty()) throw Error("linkage over an empty cluster");
  bool first = true;
  Rational best;
  for (const ParsedQuery& qa : a.queries)
    for (const ParsedQuery& qb : b.queries) {
      Rational s = jaccard(qa, qb);
      if (first || (mode == LinkageMode::max_similarity ? best < s : s < best)) best = s;
      first = false;
    }
  return best;
}

ClusterResult agglomerate(std::vector<QueryCluster> clusters, std::size_t target_k,
                          LinkageMode mode) {
  if (target_k == 0) throw Error("cluster target must be positive");
  ClusterResult result;
  if (clusters.size() <= target_k) {
    result.clusters = std::move(clusters);
    return result;
  }

  SimilarityMatrix base = build_matrix(clusters);

  // Active clusters, each carrying the base-matrix indices of its members.
  std::vector<std::vector<std::size_t>> members(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) members[i] = {i};
  std::vector<std::size_t> active(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) active[i] = i;

  while (active.size() > target_k) {
    // Best pair: highest linkage, then highest combined frequency, then the
    // leftmost pair in creation order (the scan order makes that the first
    // non-improving tie encountered).
    std::size_t best_a = 0, best_b = 1;
    Rational best_link;
    bool found = false;
    for (std::size_t a = 0; a + 1 < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        Rational s = linkage(base, members[active[a]], members[active[b]], mode);
        if (found) {
          if (s < best_link) continue;
          if (best_link == s) {
            std::size_t freq = clusters[active[a]].frequency + clusters[active[b]].frequency;
            std::size_t best_freq =
                clusters[active[best_a]].frequency + clusters[active[best_b]].frequency;
            if (freq <= best_freq) continue;
          }
        }
        found = true;
        best_link = s;
        best_a = a;
        best_b = b;
      }

    std::size_t ia = active[best_a];
    std::size_t ib = active[best_b];
    QueryCluster& left = clusters[ia];
    QueryCluster& right = clusters[ib];
    result.trace.push_back({left.id, right.id, left.id + "/" + right.id, best_link});

    left.id += "/" + right.id;
    left.queries.insert(right.queries.begin(), right.queries.end());
    left.frequency += right.frequency;
    members[ia].insert(members[ia].end(), members[ib].begin(), members[ib].end());
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_b));
  }

  result.clusters.reserve(active.size());
  for (std::size_t i : active) result.clusters.push_back(std::move(clusters[i]));
  return result;
}

std::string render_trace(const std::vector<MergeStep>& trace) {
  std::string out;
  for (const MergeStep& step : trace) {
    out += "merge " + step.left + " " + step.right + " sim=" + step.similarity.fraction_str() +
           " -> " + step.merged + "\n";
  }
  return out;
}

const QueryCluster& PreferencePools::pool(PoolLabel label) const {
  switch (label) {
    case PoolLabel::consensual: return consensual;
    case PoolLabel::semi_conflicting: return semi_conflicting;
    case PoolLabel::conflicting: return conflicting;
  }
  return conflicting;
}

QueryCluster& PreferencePools::pool(PoolLabel label) {
  return const_cast<QueryCluster&>(std::as_const(*this).pool(label));
}

PreferencePools label_pools(std::vector<QueryCluster> clusters) {
  if (clusters.size() != kPoolLabels.size())
    throw Error("pool labeling needs exactly " + std::to_string(kPoolLabels.size()) +
                " clusters, got " + std::to_string(clusters.size()) +
                "; adjust the cluster target k");
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const QueryCluster& a, const QueryCluster& b) {
                     return a.frequency > b.frequency;
                   });
  PreferencePools pools;
  for (std::size_t i = 0; i < clusters.size(); ++i)
    pools.pool(kPoolLabels[i]) = std::move(clusters[i]);
  return pools;
}

}  // namespace olap
