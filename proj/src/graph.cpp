#include "orcycle/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace orcycle {

void VertexSet::set_range(Vertex lo, Vertex hi) {
    if (lo < 0 || hi > n_ || lo > hi) throw Error(Errc::out_of_range, "bad range");
    for (Vertex v = lo; v < hi; ++v) {
        if (v % 64 == 0 && v + 64 <= hi) {
            w_[static_cast<std::size_t>(v) / 64] = ~std::uint64_t{0};
            v += 63;
        } else {
            w_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        }
    }
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (n_ != o.n_) throw Error(Errc::bad_params, "universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (n_ != o.n_) throw Error(Errc::bad_params, "universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    if (n_ != o.n_) throw Error(Errc::bad_params, "universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (n_ != o.n_) throw Error(Errc::bad_params, "universe mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

int VertexSet::intersection_count(const VertexSet& o) const {
    if (n_ != o.n_) throw Error(Errc::bad_params, "universe mismatch");
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

Vertex VertexSet::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

Vertex VertexSet::next_after(Vertex v) const {
    if (v < 0) return first();
    std::size_t i = static_cast<std::size_t>(v) / 64;
    if (i >= w_.size()) return -1;
    std::uint64_t w = w_[i] & ~((std::uint64_t{2} << (v % 64)) - 1);
    while (true) {
        if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
        if (++i >= w_.size()) return -1;
        w = w_[i];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> vs;
    vs.reserve(static_cast<std::size_t>(count()));
    for (Vertex v : *this) vs.push_back(v);
    return vs;
}

VertexSet VertexSet::take(int k) const {
    VertexSet s(n_);
    for (Vertex v : *this) {
        if (k-- <= 0) break;
        s.set(v);
    }
    return s;
}

OrientedGraph OrientedGraph::from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                            Mode mode) {
    if (n < 0) throw Error(Errc::bad_params, "negative order");
    std::vector<VertexSet> out(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error(Errc::out_of_range, "edge endpoint out of range");
        if (u == v) throw Error(Errc::loop_edge, "loop edge");
        if (out[static_cast<std::size_t>(u)].test(v)) throw Error(Errc::duplicate_edge, "duplicate edge");
        if (mode == Mode::oriented && out[static_cast<std::size_t>(v)].test(u))
            throw Error(Errc::antiparallel_violation, "antiparallel pair in oriented mode");
        out[static_cast<std::size_t>(u)].set(v);
    }
    return from_adjacency(std::move(out), mode);
}

OrientedGraph OrientedGraph::from_adjacency(std::vector<VertexSet> out_rows, Mode mode) {
    OrientedGraph g;
    g.n_ = static_cast<int>(out_rows.size());
    g.mode_ = mode;
    g.out_ = std::move(out_rows);
    g.in_.assign(static_cast<std::size_t>(g.n_), VertexSet(g.n_));
    for (Vertex u = 0; u < g.n_; ++u) {
        if (g.out_[static_cast<std::size_t>(u)].universe() != g.n_)
            throw Error(Errc::bad_params, "row universe mismatch");
        if (g.out_[static_cast<std::size_t>(u)].test(u)) throw Error(Errc::loop_edge, "loop edge");
        for (Vertex v : g.out_[static_cast<std::size_t>(u)]) g.in_[static_cast<std::size_t>(v)].set(u);
    }
    if (mode == Mode::oriented) {
        for (Vertex u = 0; u < g.n_; ++u)
            if (g.out_[static_cast<std::size_t>(u)].intersects(g.in_[static_cast<std::size_t>(u)]))
                throw Error(Errc::antiparallel_violation, "antiparallel pair in oriented mode");
    }
    return g;
}

std::uint64_t OrientedGraph::edge_count() const {
    std::uint64_t m = 0;
    for (Vertex v = 0; v < n_; ++v) m += static_cast<std::uint64_t>(out_degree(v));
    return m;
}

std::vector<std::pair<Vertex, Vertex>> OrientedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    es.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out(u)) es.emplace_back(u, v);
    return es;
}

DegreeSummary OrientedGraph::degree_summary() const {
    DegreeSummary d;
    if (n_ == 0) return d;
    d.min_out = d.min_in = n_;
    for (Vertex v = 0; v < n_; ++v) {
        d.min_out = std::min(d.min_out, out_degree(v));
        d.min_in = std::min(d.min_in, in_degree(v));
    }
    d.min_semi = std::min(d.min_out, d.min_in);
    return d;
}

InducedGraph induced_without(const OrientedGraph& g, const VertexSet& removed) {
    if (removed.universe() != g.order()) throw Error(Errc::out_of_range, "set universe mismatch");
    std::vector<Vertex> retained;
    std::vector<Vertex> new_label(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!removed.test(v)) {
            new_label[static_cast<std::size_t>(v)] = static_cast<Vertex>(retained.size());
            retained.push_back(v);
        }
    }
    const int m = static_cast<int>(retained.size());
    std::vector<VertexSet> rows(static_cast<std::size_t>(m), VertexSet(m));
    for (Vertex nu = 0; nu < m; ++nu) {
        for (Vertex v : g.out(retained[static_cast<std::size_t>(nu)])) {
            Vertex nv = new_label[static_cast<std::size_t>(v)];
            if (nv >= 0) rows[static_cast<std::size_t>(nu)].set(nv);
        }
    }
    return InducedGraph{OrientedGraph::from_adjacency(std::move(rows), g.mode()), std::move(retained)};
}

std::optional<std::pair<Vertex, Vertex>> find_edge_within(const OrientedGraph& g, const VertexSet& x) {
    for (Vertex u : x) {
        VertexSet heads = g.out(u) & x;
        Vertex v = heads.first();
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

Vertex low_outdegree_vertex(const OrientedGraph& g, const VertexSet& x) {
    if (g.mode() != Mode::oriented) throw Error(Errc::wrong_mode, "oriented mode required");
    if (!x.any()) throw Error(Errc::empty_set, "empty set");
    Vertex best = -1;
    int best_deg = 0;
    for (Vertex v : x) {
        int d = g.out(v).intersection_count(x);
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

std::optional<int> bfs_distance(const OrientedGraph& g, Vertex x, Vertex y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw Error(Errc::out_of_range, "vertex out of range");
    if (x == y) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    dist[static_cast<std::size_t>(x)] = 0;
    std::deque<Vertex> q{x};
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex v : g.out(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                if (v == y) return dist[static_cast<std::size_t>(v)];
                q.push_back(v);
            }
        }
    }
    return std::nullopt;
}

std::optional<int> diameter(const OrientedGraph& g) {
    int diam = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        dist[static_cast<std::size_t>(x)] = 0;
        int seen = 1;
        std::deque<Vertex> q{x};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex v : g.out(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
                    ++seen;
                    q.push_back(v);
                }
            }
        }
        if (seen < g.order()) return std::nullopt;
    }
    return diam;
}

std::uint64_t edges_within(const OrientedGraph& g, const VertexSet& x) {
    std::uint64_t e = 0;
    for (Vertex u : x) e += static_cast<std::uint64_t>(g.out(u).intersection_count(x));
    return e;
}

VertexSet out_neighborhood(const OrientedGraph& g, const VertexSet& x) {
    VertexSet r(g.order());
    for (Vertex u : x) r |= g.out(u);
    return r;
}

VertexSet in_neighborhood(const OrientedGraph& g, const VertexSet& x) {
    VertexSet r(g.order());
    for (Vertex u : x) r |= g.in(u);
    return r;
}

int min_semidegree_within(const OrientedGraph& g, const VertexSet& u) {
    int best = g.order();
    for (Vertex v : u) {
        best = std::min(best, g.out(v).intersection_count(u));
        best = std::min(best, g.in(v).intersection_count(u));
    }
    return best;
}

bool CycleWitness::validate(const OrientedGraph& g) const {
    const std::size_t len = vertices.size();
    if (len < 2) return false;
    if (g.mode() == Mode::oriented && len < 3) return false;
    VertexSet seen(g.order());
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (!g.edge(vertices[i], vertices[(i + 1) % len])) return false;
    }
    if (through && !seen.test(*through)) return false;
    return true;
}

} // namespace orcycle
