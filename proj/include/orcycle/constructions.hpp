#pragma once

#include <cstdint>
#include <vector>

#include "orcycle/graph.hpp"

namespace orcycle {

/// Partition of n vertices into k cyclic classes as equal as possible; the
/// larger classes take the lower indices. Vertices are labeled contiguously
/// class by class.
struct BlowupSpec {
    int k = 0;
    int n = 0;
    std::vector<int> class_sizes;
    std::vector<int> class_offsets; // class_offsets[i] = first vertex of class i

    int class_of(Vertex v) const;
};

BlowupSpec blowup_spec(int k, int n);

/// Blow-up of a directed k-cycle: all edges from class i to class i+1 (mod k)
/// and nothing else. Minimum semidegree is exactly floor(n/k).
OrientedGraph blowup_cycle(int k, int n);

struct GraphWithVertex {
    OrientedGraph graph;
    Vertex u;
};

/// Blow-up of a 3-cycle with one vertex removed from the largest class and a
/// fresh vertex u inserted "between" classes 1 and 2 (edges V1 -> u -> V2).
/// Any cycle through u has length = 1 mod 3; minimum semidegree floor((n-1)/3).
GraphWithVertex blowup_with_waypoint(int n);

/// n = 5m-1 vertices: classes A, B of size 2m-1 and C of size m, complete
/// one-way edges A->B->C->A, regular tournaments inside A and B, and a vertex
/// u with N+(u) = B, N-(u) = A. Minimum semidegree 2m-1 = floor(2n/5) and u
/// lies on no 3-cycle.
GraphWithVertex extremal_3cycle_vertex(int m);

/// Vertex i beats i+1, ..., i+(n-1)/2 (mod n); n must be odd.
OrientedGraph rotational_tournament(int n);

/// The 5-vertex gadget on (x,a,z,b,y) = (0,1,2,3,4) with edges
/// xa, xz, az, zb, zy, by; it carries x->y paths of lengths 2, 3 and 4.
OrientedGraph butterfly_gadget();

/// Complete bipartite digraph with class sizes ceil(n/2), floor(n/2):
/// all cross edges in both directions. No odd closed walk exists.
OrientedGraph complete_bipartite_digraph(int n);

/// Random oriented graph with minimum semidegree at least target_semi * n,
/// built from a random circulant backbone plus randomized augmentation and a
/// random relabeling. Deterministic per (n, target_semi, seed).
OrientedGraph random_degree_conditioned(int n, double target_semi, std::uint64_t seed);

} // namespace orcycle
