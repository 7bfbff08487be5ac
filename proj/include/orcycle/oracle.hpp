#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orcycle/graph.hpp"
#include "orcycle/pattern.hpp"

namespace orcycle {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000ULL;
};

/// Tri-state outcome: an exhausted budget is distinct from a certified
/// absence and must never be read as one.
enum class SearchStatus { found, absent, budget_exceeded };

struct CycleSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<CycleWitness> witness;
    std::uint64_t nodes_expanded = 0;
};

/// Exact backtracking search for a directed cycle on exactly ell distinct
/// vertices, optionally through a given vertex. Complete: absent is returned
/// only when no such cycle exists. Pruned by distance-to-root bounds; the
/// search is rooted at the through-vertex when one is given.
CycleSearchResult has_cycle_exact(const OrientedGraph& g, int ell,
                                  std::optional<Vertex> through = std::nullopt,
                                  SearchBudget budget = {});

/// True iff some closed walk of length ell exists, decided by boolean
/// adjacency-matrix powering (O(log ell) squarings).
bool has_closed_walk(const OrientedGraph& g, long long ell);

/// A concrete closed walk of length ell (ell+1 vertices, first == last),
/// or nullopt when none exists.
std::optional<std::vector<Vertex>> extract_closed_walk(const OrientedGraph& g, long long ell);

struct PatternSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<std::vector<Vertex>> embedding; // embedding[i] = image of pattern position i
    std::uint64_t nodes_expanded = 0;
};

/// Exact backtracking over injective maps realizing the pattern's forward and
/// backward edges.
PatternSearchResult contains_pattern(const OrientedGraph& g, const CyclePattern& p,
                                     SearchBudget budget = {});

/// Every oriented graph on n labeled vertices exactly once (3^{n(n-1)/2}
/// states); n <= 6. An optional minimum-semidegree filter is pushed into the
/// generation as a degree-potential prune.
void enumerate_oriented(int n, std::optional<int> min_semidegree,
                        const std::function<void(const OrientedGraph&)>& fn);
/// Same universe for general digraphs (4 states per pair); n <= 5.
void enumerate_digraphs(int n, std::optional<int> min_semidegree,
                        const std::function<void(const OrientedGraph&)>& fn);
std::uint64_t count_oriented(int n, std::optional<int> min_semidegree = std::nullopt);

struct ThresholdConfig {
    int jobs = 1;
    int samples = 32;            // randomized lower-bound probes (non-exhaustive n)
    std::uint64_t seed = 0;
    Mode mode = Mode::oriented;
    SearchBudget budget = {};
};

/// Bounds on the least minimum semidegree forcing an ell-cycle on n vertices.
/// lower and upper bound the threshold itself; the witness attaining
/// lower - 1 is kept and re-checkable. exhaustive implies lower == upper.
struct ThresholdRecord {
    int ell = 0;
    int n = 0;
    Mode mode = Mode::oriented;
    int lower = 0;
    int upper = 0;
    int witness_min_semidegree = 0;
    std::optional<OrientedGraph> lower_witness;
    std::string lower_provenance;
    std::string upper_provenance;
    bool exhaustive = false;
};

ThresholdRecord threshold_search(int ell, int n, ThresholdConfig cfg = {});

/// Max edge count of an ell-cycle-free digraph on n vertices, closed form:
/// C(n,2) + (ell-2) n / 2. Exact as a double at desk scale.
double ex_di_formula(int ell, int n);
/// Brute-force maximum over all digraphs on n <= 4 labeled vertices.
int ex_di_brute(int ell, int n);

struct SplitExperimentConfig {
    std::uint64_t trials = 0;
    double alpha = 0.0;              // margin in the (3/8 + alpha - u^{-3/8}) u bound
    bool lemma_faithful = true;      // when false, threshold_fraction * u is used directly
    double threshold_fraction = 0.0;
    double failure_tolerance = 1e-2;
};

struct SplitExperimentReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double failure_frequency = 0.0;
    double threshold = 0.0;       // absolute semidegree bound tested per split
    int min_observed = 0;         // smallest min-semidegree seen over all splits
    double per_vertex_bound = 0.0; // n^{-2}
    double union_bound = 0.0;      // 2/n
    double tail_bound = 0.0;       // 2 exp(-(1-2^{-3/8})^2 u^{1/4} / 12)
    bool within_tolerance = true;
};

/// Samples uniform subsets U of size n/2 and measures how often the induced
/// minimum semidegree falls below the configured bound. n must be even.
SplitExperimentReport random_split_experiment(const OrientedGraph& g,
                                              const SplitExperimentConfig& cfg,
                                              std::uint64_t seed);

/// Exact girth via per-vertex BFS; nullopt when the graph is acyclic.
std::optional<int> shortest_cycle(const OrientedGraph& g);

} // namespace orcycle
