#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orcycle {

using Vertex = int;

enum class Errc {
    loop_edge,
    antiparallel_violation,
    duplicate_edge,
    out_of_range,
    bad_params,
    even_order,
    odd_order,
    infeasible,
    empty_set,
    too_large,
    wrong_mode,
    pattern_too_short,
    bad_pattern,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Fixed-universe vertex set backed by 64-bit words. Vertices are 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.set(v);
        return s;
    }

    static VertexSet from_vertices(int universe, const std::vector<Vertex>& vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(Vertex v) const {
        return v >= 0 && v < n_ && (w_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
    }

    void set(Vertex v) {
        check_range(v);
        w_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }

    void reset(Vertex v) {
        check_range(v);
        w_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    /// Sets every vertex in [lo, hi).
    void set_range(Vertex lo, Vertex hi);

    int count() const;
    bool empty() const { return count() == 0; }
    bool any() const { return !empty(); }

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    /// Removes every member of o.
    VertexSet& subtract(const VertexSet& o);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    VertexSet minus(const VertexSet& o) const {
        VertexSet r = *this;
        r.subtract(o);
        return r;
    }

    bool intersects(const VertexSet& o) const;
    int intersection_count(const VertexSet& o) const;

    /// Smallest member, or -1 when empty.
    Vertex first() const;
    /// Smallest member strictly greater than v, or -1.
    Vertex next_after(Vertex v) const;

    std::vector<Vertex> to_vector() const;
    /// The first k members in ascending order (fewer if the set is smaller).
    VertexSet take(int k) const;

    bool operator==(const VertexSet& o) const = default;

    class iterator {
    public:
        iterator(const VertexSet* s, Vertex v) : s_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next_after(v_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* s_;
        Vertex v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void check_range(Vertex v) const {
        if (v < 0 || v >= n_) throw Error(Errc::out_of_range, "vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

enum class Mode { oriented, general_digraph };

struct DegreeSummary {
    int min_out = 0;
    int min_in = 0;
    int min_semi = 0;
};

/// Loop-free digraph with at most one edge per ordered pair. In oriented mode
/// antiparallel pairs are rejected as well. Immutable once constructed;
/// in-neighbourhoods are mirrored from the out-rows so both directions are
/// O(1) to query.
class OrientedGraph {
public:
    OrientedGraph() = default;

    static OrientedGraph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                        Mode mode);
    /// Builds from complete out-rows; validates the loop/antiparallel invariants wholesale.
    static OrientedGraph from_adjacency(std::vector<VertexSet> out_rows, Mode mode);

    int order() const { return n_; }
    Mode mode() const { return mode_; }

    bool edge(Vertex u, Vertex v) const { return out_[u].test(v); }
    const VertexSet& out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    const VertexSet& in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(Vertex v) const { return out(v).count(); }
    int in_degree(Vertex v) const { return in(v).count(); }

    std::uint64_t edge_count() const;
    /// All edges sorted by (tail, head).
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    DegreeSummary degree_summary() const;

    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    Mode mode_ = Mode::oriented;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// Result of deleting a vertex set: the remaining graph relabeled contiguously,
/// plus the map from new labels back to the original ones.
struct InducedGraph {
    OrientedGraph graph;
    std::vector<Vertex> retained; // retained[new] = old
};

InducedGraph induced_without(const OrientedGraph& g, const VertexSet& removed);

/// Some edge with both ends in X, or nullopt iff X is independent.
/// Scans members in ascending order, so the result is deterministic.
std::optional<std::pair<Vertex, Vertex>> find_edge_within(const OrientedGraph& g, const VertexSet& x);

/// A vertex of X whose outdegree inside X is at most (|X|-1)/2; ties broken
/// by smallest index. Oriented mode only.
Vertex low_outdegree_vertex(const OrientedGraph& g, const VertexSet& x);

std::optional<int> bfs_distance(const OrientedGraph& g, Vertex x, Vertex y);
/// Max distance over ordered pairs; nullopt when some pair is unreachable.
std::optional<int> diameter(const OrientedGraph& g);

/// e(X): number of edges with both ends in X.
std::uint64_t edges_within(const OrientedGraph& g, const VertexSet& x);
/// N^+(X): union of out-neighbourhoods over X.
VertexSet out_neighborhood(const OrientedGraph& g, const VertexSet& x);
VertexSet in_neighborhood(const OrientedGraph& g, const VertexSet& x);
/// Minimum semidegree of the subgraph induced on U, computed without
/// materializing the subgraph. U must be nonempty.
int min_semidegree_within(const OrientedGraph& g, const VertexSet& u);

/// A directed cycle given by its vertex sequence (closing edge implied).
struct CycleWitness {
    std::vector<Vertex> vertices;
    std::optional<Vertex> through;

    int length() const { return static_cast<int>(vertices.size()); }
    bool validate(const OrientedGraph& g) const;
};

} // namespace orcycle
