#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orcycle/graph.hpp"
#include "orcycle/pattern.hpp"

namespace orcycle {

/// Decomposition ell = r(t+2) + (a-r)(t+1) used to wind closed walks around a
/// pair of cycles of lengths t+1 and t+2 sharing a vertex.
struct WindingPlan {
    int t = 0;
    long long a = 0;
    long long r = 0;

    long long length() const { return r * (t + 2) + (a - r) * (t + 1); }
};

/// a = floor(ell/(t+1)), r = ell mod (t+1); a plan exists iff r <= a.
std::optional<WindingPlan> winding_plan(long long ell, int t);

enum class WalkKind {
    directed_path,
    directed_cycle,
    path_with_triangle,
    path_with_two_triangles,
    path_with_square,
};

/// Target walk for an arbitrarily oriented cycle pattern together with the
/// direction-preserving homomorphism from pattern positions to shape
/// vertices. k is the cycle length (directed_cycle), k2 the path length, k1
/// (and k1_second) the gadget attachment indices on the path.
struct WalkShape {
    WalkKind kind = WalkKind::directed_path;
    int k = 0;
    int k1 = 0;
    int k1_second = 0;
    int k2 = 0;
    OrientedGraph shape;
    std::vector<int> hom; // pattern position -> shape vertex (original traversal order)
    bool reversed = false; // true if the traversal was flipped to normalize the type
};

/// Shape graphs on their own, without a homomorphism; used both internally
/// and to drive greedy embedding directly.
WalkShape make_path_shape(int len);
WalkShape make_cycle_shape(int k);
WalkShape make_triangle_shape(int k1, int k2);
WalkShape make_two_triangle_shape(int k1a, int k1b, int k2);
WalkShape make_square_shape(int k1, int k2);

/// Builds the walk shape for a pattern by cycle-type: 0 maps into a directed
/// path, t >= 3 into a directed t-cycle, t = 1 hangs a transitive triangle
/// off a path at the first cyclic ffb, t = 2 uses two ffb triangles when two
/// occur, else the single fffb square. The homomorphism is verified before
/// returning.
WalkShape pattern_to_walk(const CyclePattern& p);

/// Positional check: pattern letter f at i demands shape edge hom[i]->hom[i+1],
/// letter b the reverse.
bool homomorphism_respects_pattern(const CyclePattern& p, const WalkShape& w);

struct ClosedWalkWitness {
    std::vector<Vertex> vertices; // length ell + 1, first == last
    std::string strategy;

    long long length() const { return static_cast<long long>(vertices.size()) - 1; }
    bool validate(const OrientedGraph& g) const;
};

/// Strategy ladder: wind a short cycle whose length divides ell; else wind a
/// transitive-triangle cycle pair C1/C2 (path found by BFS, capped at length
/// 50); else the boolean-matrix oracle decides and extracts. NotFound is
/// certified by the final rung.
std::optional<ClosedWalkWitness> closed_walk_of_length(const OrientedGraph& g, long long ell);

/// Iterated out-neighbourhood growth X1 = N+(x), X_{i+1} = N+(X_i) u X_i.
/// Stops with a 3-cycle witness (found inside X_i plus x), at a fixpoint, or
/// once |X_i| > n/2. triangle_free_mode skips the triangle checks.
struct GrowthReport {
    enum class Stop { triangle_found, fixpoint, past_half };

    std::vector<VertexSet> sets; // X_1 .. X_k
    Stop stop = Stop::fixpoint;
    std::optional<CycleWitness> triangle;
    int iterations = 0;
};

GrowthReport grow_reachable(const OrientedGraph& g, Vertex x, bool triangle_free_mode = false);

/// Greedy embedding of a walk shape: paths by successor choice, triangles via
/// an edge inside N+(u), squares via a directed P2 inside N+(u) or the
/// sink/source pair argument. Shape vertices may map to repeated graph
/// vertices; adjacent ones never collide (no loops).
struct EmbedResult {
    std::optional<std::vector<Vertex>> image; // shape vertex -> graph vertex
    std::string failed_element;

    bool found() const { return image.has_value(); }
};

EmbedResult embed_walk_greedy(const OrientedGraph& g, const WalkShape& w);

} // namespace orcycle
