#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orcycle/graph.hpp"
#include "orcycle/oracle.hpp"

namespace orcycle {

/// Five-vertex gadget around x: edges xa, xz, az, zb, zy, by, which packs
/// x->y paths of lengths 2 (xzy), 3 (xazy) and 4 (xazby) into one place.
struct Butterfly {
    Vertex x, a, z, b, y;

    bool validate(const OrientedGraph& g) const;
    /// The x->y subpath of the requested length (2, 3 or 4).
    std::vector<Vertex> xy_path(int length) const;
};

struct PathConstants {
    double eps = 1e-4;
    double c = 1.0;
    double c_prime = 1e5; // 10 c / eps
};

/// What a finder actually did: the named sets it materialized, the branch it
/// returned from, and whether it had to leave the procedure for the oracle.
struct FinderTrace {
    std::vector<std::pair<std::string, VertexSet>> sets;
    std::string branch;
    bool hypothesis_met = false;
    bool fallback_used = false;
    bool oracle_budget_exceeded = false;
    std::optional<PathConstants> constants;

    void record(const std::string& name, const VertexSet& s) { sets.emplace_back(name, s); }
    const VertexSet* find(const std::string& name) const;
};

struct ButterflyResult {
    std::optional<Butterfly> butterfly;
    FinderTrace trace;
};

struct CycleFindResult {
    std::optional<CycleWitness> witness;
    FinderTrace trace;

    bool found() const { return witness.has_value(); }
};

struct PathFindResult {
    std::optional<std::vector<Vertex>> path;
    FinderTrace trace;

    bool found() const { return path.has_value(); }
};

/// Picks an edge az inside N+(x), then an edge by inside N+(z). Succeeds
/// whenever the minimum semidegree is at least floor(n/3)+1.
ButterflyResult find_butterfly(const OrientedGraph& g, Vertex x);

/// A 3-cycle through u. Guaranteed when the minimum semidegree is at least
/// ceil(2n/5): the low-outdegree vertex x of N+(u) must have an outneighbour
/// in N-(u). Falls back to scanning every x in N+(u) before giving up.
CycleFindResult find_3cycle_through(const OrientedGraph& g, Vertex u);

/// A 4-cycle through x, by the two-condition case split on sets X of
/// outneighbours and Y of inneighbours (both of size floor(n/3)+1).
CycleFindResult find_4cycle_through(const OrientedGraph& g, Vertex x);

/// A 5-cycle through x: edge ya inside N-(x) plus an x->y path of length 3
/// avoiding a, or of length 4.
CycleFindResult find_5cycle_through(const OrientedGraph& g, Vertex x);

/// A 6-cycle through x: butterfly at x spliced with a y->x return path of
/// length 2, 3 (avoiding a) or 4 (avoiding z).
CycleFindResult find_6cycle_through(const OrientedGraph& g, Vertex x);

/// A directed x->y path of length 3, 4 or 5 whose interior avoids `avoid`.
/// Layered enumeration over X = N+(x), Y = N-(y): X-Y edge, then a common
/// fresh middle vertex, then a fresh bridging edge. Complete for these three
/// lengths. doc_c, when given, is recorded in the trace constants.
PathFindResult find_path_345(const OrientedGraph& g, Vertex x, Vertex y, const VertexSet& avoid,
                             std::optional<double> doc_c = std::nullopt);

/// An ell-cycle through x for ell >= 7: butterfly at x, greedy path of length
/// ell-7 out of y, return path of length 3/4/5 back to x, spliced with the
/// butterfly subpath of complementary length. ell in {4,5,6} dispatches to
/// the specialized finders. Any failed step falls back to bounded oracle
/// backtracking with the fallback flagged.
CycleFindResult find_lcycle_through(const OrientedGraph& g, Vertex x, int ell);

} // namespace orcycle
