#include "orcycle/walks.hpp"

#include <algorithm>

#include "orcycle/oracle.hpp"

namespace orcycle {

std::optional<WindingPlan> winding_plan(long long ell, int t) {
    if (t < 1 || ell < 1) throw Error(Errc::bad_params, "need t >= 1 and ell >= 1");
    WindingPlan plan;
    plan.t = t;
    plan.a = ell / (t + 1);
    plan.r = ell % (t + 1);
    if (plan.r > plan.a) return std::nullopt;
    return plan;
}

namespace {

OrientedGraph path_graph(int len) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < len; ++i) es.emplace_back(i, i + 1);
    return OrientedGraph::from_edge_list(len + 1, es, Mode::oriented);
}

} // namespace

WalkShape make_path_shape(int len) {
    WalkShape w;
    w.kind = WalkKind::directed_path;
    w.k2 = len;
    w.shape = path_graph(len);
    return w;
}

WalkShape make_cycle_shape(int k) {
    if (k < 3) throw Error(Errc::bad_params, "cycle shape needs k >= 3");
    WalkShape w;
    w.kind = WalkKind::directed_cycle;
    w.k = k;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    w.shape = OrientedGraph::from_edge_list(k, es, Mode::oriented);
    return w;
}

WalkShape make_triangle_shape(int k1, int k2) {
    if (k1 < 0 || k1 > k2) throw Error(Errc::bad_params, "attachment off the path");
    WalkShape w;
    w.kind = WalkKind::path_with_triangle;
    w.k1 = k1;
    w.k2 = k2;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k2; ++i) es.emplace_back(i, i + 1);
    const Vertex zc = k2 + 1, yc = k2 + 2; // transitive triangle k1 -> zc -> yc, k1 -> yc
    es.emplace_back(k1, zc);
    es.emplace_back(zc, yc);
    es.emplace_back(k1, yc);
    w.shape = OrientedGraph::from_edge_list(k2 + 3, es, Mode::oriented);
    return w;
}

WalkShape make_two_triangle_shape(int k1a, int k1b, int k2) {
    if (k1a < 0 || k1a > k2 || k1b < 0 || k1b > k2)
        throw Error(Errc::bad_params, "attachment off the path");
    WalkShape w;
    w.kind = WalkKind::path_with_two_triangles;
    w.k1 = k1a;
    w.k1_second = k1b;
    w.k2 = k2;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k2; ++i) es.emplace_back(i, i + 1);
    const Vertex z1 = k2 + 1, y1 = k2 + 2, z2 = k2 + 3, y2 = k2 + 4;
    es.emplace_back(k1a, z1);
    es.emplace_back(z1, y1);
    es.emplace_back(k1a, y1);
    es.emplace_back(k1b, z2);
    es.emplace_back(z2, y2);
    es.emplace_back(k1b, y2);
    w.shape = OrientedGraph::from_edge_list(k2 + 5, es, Mode::oriented);
    return w;
}

WalkShape make_square_shape(int k1, int k2) {
    if (k1 < 0 || k1 > k2) throw Error(Errc::bad_params, "attachment off the path");
    WalkShape w;
    w.kind = WalkKind::path_with_square;
    w.k1 = k1;
    w.k2 = k2;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k2; ++i) es.emplace_back(i, i + 1);
    const Vertex s1 = k2 + 1, s2 = k2 + 2, s3 = k2 + 3; // fffb square k1,s1,s2,s3
    es.emplace_back(k1, s1);
    es.emplace_back(s1, s2);
    es.emplace_back(s2, s3);
    es.emplace_back(k1, s3);
    w.shape = OrientedGraph::from_edge_list(k2 + 4, es, Mode::oriented);
    return w;
}

namespace {

/// First cyclic position j with q[j..j+len-1] == needle, or -1.
int find_cyclic(const std::string& q, const std::string& needle) {
    const int n = static_cast<int>(q.size());
    const int m = static_cast<int>(needle.size());
    for (int j = 0; j < n; ++j) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = q[static_cast<std::size_t>((j + i) % n)] == needle[static_cast<std::size_t>(i)];
        if (ok) return j;
    }
    return -1;
}

/// Heights h[0..m] of the walk spelled by letters; h[0] = 0.
std::vector<int> heights(const std::string& letters) {
    std::vector<int> h{0};
    for (char c : letters) h.push_back(h.back() + (c == 'f' ? 1 : -1));
    return h;
}

} // namespace

WalkShape pattern_to_walk(const CyclePattern& p) {
    const int len = p.length();
    const int raw_type = p.forward_count() - p.backward_count();
    const bool reversed = raw_type < 0;
    const CyclePattern q = reversed ? reversed_traversal(p) : p;
    const int t = cycle_type(p);

    WalkShape w;
    std::vector<int> hom_q(static_cast<std::size_t>(len), 0);

    if (t == 0) {
        auto h = heights(q.str());
        const int lo = *std::min_element(h.begin(), h.end());
        w = make_path_shape(len);
        for (int i = 0; i < len; ++i) hom_q[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] - lo;
    } else if (t >= 3) {
        auto h = heights(q.str());
        w = make_cycle_shape(t);
        for (int i = 0; i < len; ++i)
            hom_q[static_cast<std::size_t>(i)] = ((h[static_cast<std::size_t>(i)] % t) + t) % t;
    } else if (t == 1) {
        const int j = find_cyclic(q.str(), "ffb");
        if (j < 0) throw std::logic_error("type-1 pattern without a cyclic ffb");
        // arc letters after the ffb, ending back at its first vertex
        std::string arc;
        for (int i = 0; i < len - 3; ++i) arc.push_back(q.at((j + 3 + i) % len));
        auto h = heights(arc);
        const int lo = *std::min_element(h.begin(), h.end());
        const int hi = *std::max_element(h.begin(), h.end());
        w = make_triangle_shape(-lo, hi - lo);
        for (int i = 0; i <= len - 3; ++i)
            hom_q[static_cast<std::size_t>((j + 3 + i) % len)] = h[static_cast<std::size_t>(i)] - lo;
        hom_q[static_cast<std::size_t>(j)] = w.k1;      // consistent: arc ends at height 0
        hom_q[static_cast<std::size_t>((j + 1) % len)] = w.k2 + 1;
        hom_q[static_cast<std::size_t>((j + 2) % len)] = w.k2 + 2;
    } else { // t == 2
        std::vector<int> occ;
        for (int j = 0; j < len; ++j) {
            if (q.at(j) == 'f' && q.at((j + 1) % len) == 'f' && q.at((j + 2) % len) == 'b')
                occ.push_back(j);
        }
        if (occ.size() >= 2) {
            // two ffb occurrences are always disjoint (adjacent starts contradict)
            const int j1 = occ[0], j2 = occ[1];
            const int arc_a_len = (j2 - j1 - 3 + len) % len;
            const int arc_b_len = len - 6 - arc_a_len;
            std::string arc_a, arc_b;
            for (int i = 0; i < arc_a_len; ++i) arc_a.push_back(q.at((j1 + 3 + i) % len));
            for (int i = 0; i < arc_b_len; ++i) arc_b.push_back(q.at((j2 + 3 + i) % len));
            auto ha = heights(arc_a);
            auto hb = heights(arc_b);
            const int mid = ha.back(); // height of the second attachment
            int lo = 0, hi = 0;
            for (int v : ha) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            for (int v : hb) {
                lo = std::min(lo, mid + v);
                hi = std::max(hi, mid + v);
            }
            w = make_two_triangle_shape(-lo, mid - lo, hi - lo);
            for (int i = 0; i <= arc_a_len; ++i)
                hom_q[static_cast<std::size_t>((j1 + 3 + i) % len)] = ha[static_cast<std::size_t>(i)] - lo;
            for (int i = 0; i <= arc_b_len; ++i)
                hom_q[static_cast<std::size_t>((j2 + 3 + i) % len)] = mid + hb[static_cast<std::size_t>(i)] - lo;
            hom_q[static_cast<std::size_t>(j1)] = w.k1;
            hom_q[static_cast<std::size_t>((j1 + 1) % len)] = w.k2 + 1;
            hom_q[static_cast<std::size_t>((j1 + 2) % len)] = w.k2 + 2;
            hom_q[static_cast<std::size_t>(j2)] = w.k1_second;
            hom_q[static_cast<std::size_t>((j2 + 1) % len)] = w.k2 + 3;
            hom_q[static_cast<std::size_t>((j2 + 2) % len)] = w.k2 + 4;
        } else {
            const int j = find_cyclic(q.str(), "fffb");
            if (j < 0) throw std::logic_error("type-2 pattern with neither two ffb nor fffb");
            std::string arc;
            for (int i = 0; i < len - 4; ++i) arc.push_back(q.at((j + 4 + i) % len));
            auto h = heights(arc);
            const int lo = *std::min_element(h.begin(), h.end());
            const int hi = *std::max_element(h.begin(), h.end());
            w = make_square_shape(-lo, hi - lo);
            for (int i = 0; i <= len - 4; ++i)
                hom_q[static_cast<std::size_t>((j + 4 + i) % len)] = h[static_cast<std::size_t>(i)] - lo;
            hom_q[static_cast<std::size_t>(j)] = w.k1;
            hom_q[static_cast<std::size_t>((j + 1) % len)] = w.k2 + 1;
            hom_q[static_cast<std::size_t>((j + 2) % len)] = w.k2 + 2;
            hom_q[static_cast<std::size_t>((j + 3) % len)] = w.k2 + 3;
        }
    }

    // pull the homomorphism back to the original traversal order
    w.reversed = reversed;
    w.hom.assign(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i)
        w.hom[static_cast<std::size_t>(i)] =
            reversed ? hom_q[static_cast<std::size_t>((len - i) % len)] : hom_q[static_cast<std::size_t>(i)];
    if (!homomorphism_respects_pattern(p, w))
        throw std::logic_error("pattern homomorphism failed its own verification");
    return w;
}

bool homomorphism_respects_pattern(const CyclePattern& p, const WalkShape& w) {
    const int len = p.length();
    if (static_cast<int>(w.hom.size()) != len) return false;
    for (int i = 0; i < len; ++i) {
        const int a = w.hom[static_cast<std::size_t>(i)];
        const int b = w.hom[static_cast<std::size_t>((i + 1) % len)];
        if (a < 0 || a >= w.shape.order() || b < 0 || b >= w.shape.order()) return false;
        if (p.at(i) == 'f' ? !w.shape.edge(a, b) : !w.shape.edge(b, a)) return false;
    }
    return true;
}

bool ClosedWalkWitness::validate(const OrientedGraph& g) const {
    if (vertices.size() < 2) return false;
    if (vertices.front() != vertices.back()) return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        Vertex u = vertices[i], v = vertices[i + 1];
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) return false;
        if (!g.edge(u, v)) return false;
    }
    return true;
}

namespace {

std::optional<ClosedWalkWitness> wind_divisor_cycle(const OrientedGraph& g, long long ell) {
    for (long long a = 3; a <= g.order(); ++a) {
        if (ell % a != 0) continue;
        auto probe = has_cycle_exact(g, static_cast<int>(a));
        if (probe.status != SearchStatus::found) continue;
        const auto& cyc = probe.witness->vertices;
        ClosedWalkWitness w;
        w.strategy = "divisor-winding";
        const long long rounds = ell / a;
        for (long long r = 0; r < rounds; ++r)
            w.vertices.insert(w.vertices.end(), cyc.begin(), cyc.end());
        w.vertices.push_back(cyc.front());
        return w;
    }
    return std::nullopt;
}

std::optional<ClosedWalkWitness> wind_triangle_pair(const OrientedGraph& g, long long ell) {
    if (g.mode() != Mode::oriented) return std::nullopt;
    for (Vertex x = 0; x < g.order(); ++x) {
        auto edge = find_edge_within(g, g.out(x));
        if (!edge) continue;
        auto [z, y] = *edge; // transitive triangle: x->z, x->y, z->y
        // y -> x path avoiding z, shortest first; its length t gives cycles of
        // lengths t+1 (close with xy... the pair is yPx + xy and yPx + xz + zy)
        VertexSet removed(g.order());
        removed.set(z);
        auto sub = induced_without(g, removed);
        Vertex ys = -1, xs = -1;
        for (Vertex i = 0; i < sub.graph.order(); ++i) {
            if (sub.retained[static_cast<std::size_t>(i)] == y) ys = i;
            if (sub.retained[static_cast<std::size_t>(i)] == x) xs = i;
        }
        auto dist = bfs_distance(sub.graph, ys, xs);
        if (!dist || *dist < 1 || *dist > 50) continue;
        const int t = *dist;
        auto plan = winding_plan(ell, t);
        if (!plan) continue;
        // reconstruct one shortest y->x path in the subgraph
        std::vector<Vertex> path{ys};
        Vertex cur = ys;
        int remaining = t;
        while (cur != xs) {
            Vertex step = -1;
            for (Vertex nxt : sub.graph.out(cur)) {
                auto d = bfs_distance(sub.graph, nxt, xs);
                if (d && *d == remaining - 1) {
                    step = nxt;
                    break;
                }
            }
            if (step < 0) throw std::logic_error("shortest-path reconstruction diverged");
            path.push_back(step);
            cur = step;
            --remaining;
        }
        std::vector<Vertex> p_orig;
        for (Vertex v : path) p_orig.push_back(sub.retained[static_cast<std::size_t>(v)]);
        ClosedWalkWitness w;
        w.strategy = "triangle-winding";
        // r rounds of C2 = yPx z y, then a-r rounds of C1 = yPx y
        for (long long i = 0; i < plan->r; ++i) {
            w.vertices.insert(w.vertices.end(), p_orig.begin(), p_orig.end());
            w.vertices.push_back(z);
        }
        for (long long i = 0; i < plan->a - plan->r; ++i)
            w.vertices.insert(w.vertices.end(), p_orig.begin(), p_orig.end());
        w.vertices.push_back(y);
        return w;
    }
    return std::nullopt;
}

} // namespace

std::optional<ClosedWalkWitness> closed_walk_of_length(const OrientedGraph& g, long long ell) {
    if (ell < 3) throw Error(Errc::bad_params, "need ell >= 3");
    if (auto w = wind_divisor_cycle(g, ell)) {
        if (!w->validate(g) || w->length() != ell) throw std::logic_error("bad divisor winding");
        return w;
    }
    if (auto w = wind_triangle_pair(g, ell)) {
        if (!w->validate(g) || w->length() != ell) throw std::logic_error("bad triangle winding");
        return w;
    }
    auto extracted = extract_closed_walk(g, ell);
    if (!extracted) return std::nullopt; // certified by the matrix oracle
    ClosedWalkWitness w;
    w.vertices = std::move(*extracted);
    w.strategy = "matrix-oracle";
    if (!w.validate(g) || w.length() != ell) throw std::logic_error("bad extracted walk");
    return w;
}

namespace {

/// Smallest directed 3-cycle inside S, if any.
std::optional<CycleWitness> triangle_inside(const OrientedGraph& g, const VertexSet& s) {
    for (Vertex u : s) {
        VertexSet outs = g.out(u) & s;
        for (Vertex v : outs) {
            VertexSet closers = (g.out(v) & g.in(u)) & s;
            Vertex w = closers.first();
            if (w >= 0) return CycleWitness{{u, v, w}, std::nullopt};
        }
    }
    return std::nullopt;
}

} // namespace

GrowthReport grow_reachable(const OrientedGraph& g, Vertex x, bool triangle_free_mode) {
    if (x < 0 || x >= g.order()) throw Error(Errc::out_of_range, "vertex out of range");
    GrowthReport rep;
    VertexSet current = g.out(x);
    while (true) {
        rep.sets.push_back(current);
        rep.iterations = static_cast<int>(rep.sets.size());
        if (!triangle_free_mode) {
            VertexSet with_x = current;
            with_x.set(x);
            if (auto tri = triangle_inside(g, with_x)) {
                rep.stop = GrowthReport::Stop::triangle_found;
                rep.triangle = tri;
                return rep;
            }
        }
        VertexSet next = current | out_neighborhood(g, current);
        if (next == current) {
            rep.stop = GrowthReport::Stop::fixpoint;
            return rep;
        }
        if (2 * current.count() > g.order()) {
            rep.stop = GrowthReport::Stop::past_half;
            return rep;
        }
        current = next;
    }
}

namespace {

Vertex greedy_start(const OrientedGraph& g) {
    Vertex best = -1;
    int deg = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) > deg) {
            deg = g.out_degree(v);
            best = v;
        }
    }
    return best;
}

Vertex greedy_successor(const OrientedGraph& g, Vertex v) {
    Vertex best = -1;
    int deg = -1;
    for (Vertex w : g.out(v)) {
        if (g.out_degree(w) > deg) {
            deg = g.out_degree(w);
            best = w;
        }
    }
    return best;
}

/// Transitive triangle hanging off u: an edge inside N+(u).
bool attach_triangle(const OrientedGraph& g, Vertex u, Vertex& zc, Vertex& yc) {
    auto e = find_edge_within(g, g.out(u));
    if (!e) return false;
    zc = e->first;
    yc = e->second;
    return true;
}

/// fffb square hanging off u: a directed P2 inside N = N+(u), else the
/// no-out vertex / no-in vertex bridge.
bool attach_square(const OrientedGraph& g, Vertex u, Vertex& s1, Vertex& s2, Vertex& s3) {
    const VertexSet& nbrs = g.out(u);
    for (Vertex mid : nbrs) {
        VertexSet pred = g.in(mid) & nbrs;
        VertexSet succ = g.out(mid) & nbrs;
        Vertex a = pred.first();
        Vertex b = succ.first();
        if (a >= 0 && b >= 0) {
            s1 = a;
            s2 = mid;
            s3 = b;
            return true;
        }
    }
    Vertex sink = -1, source = -1;
    for (Vertex v : nbrs) {
        if (!g.out(v).intersects(nbrs)) {
            sink = v;
            break;
        }
    }
    for (Vertex v : nbrs) {
        if (v != sink && !g.in(v).intersects(nbrs)) {
            source = v;
            break;
        }
    }
    if (sink < 0 || source < 0) return false;
    VertexSet bridge = g.out(sink) & g.in(source);
    Vertex z = bridge.first();
    if (z < 0) return false;
    s1 = sink;
    s2 = z;
    s3 = source;
    return true;
}

} // namespace

EmbedResult embed_walk_greedy(const OrientedGraph& g, const WalkShape& w) {
    if (g.mode() != Mode::oriented) throw Error(Errc::wrong_mode, "oriented mode required");
    EmbedResult res;

    if (w.kind == WalkKind::directed_cycle) {
        auto walk = closed_walk_of_length(g, w.k);
        if (!walk) {
            res.failed_element = "closed-walk";
            return res;
        }
        std::vector<Vertex> img(static_cast<std::size_t>(w.k));
        for (int i = 0; i < w.k; ++i) img[static_cast<std::size_t>(i)] = walk->vertices[static_cast<std::size_t>(i)];
        res.image = img;
        return res;
    }

    // every other kind is a directed path with gadgets attached
    std::vector<Vertex> img(static_cast<std::size_t>(w.shape.order()), -1);
    Vertex cur = greedy_start(g);
    if (cur < 0) {
        res.failed_element = "path-start";
        return res;
    }
    img[0] = cur;
    for (int i = 1; i <= w.k2; ++i) {
        cur = greedy_successor(g, cur);
        if (cur < 0) {
            res.failed_element = "path-step-" + std::to_string(i);
            return res;
        }
        img[static_cast<std::size_t>(i)] = cur;
    }

    if (w.kind == WalkKind::path_with_triangle || w.kind == WalkKind::path_with_two_triangles) {
        Vertex zc, yc;
        if (!attach_triangle(g, img[static_cast<std::size_t>(w.k1)], zc, yc)) {
            res.failed_element = "transitive-triangle";
            return res;
        }
        img[static_cast<std::size_t>(w.k2 + 1)] = zc;
        img[static_cast<std::size_t>(w.k2 + 2)] = yc;
        if (w.kind == WalkKind::path_with_two_triangles) {
            if (!attach_triangle(g, img[static_cast<std::size_t>(w.k1_second)], zc, yc)) {
                res.failed_element = "transitive-triangle";
                return res;
            }
            img[static_cast<std::size_t>(w.k2 + 3)] = zc;
            img[static_cast<std::size_t>(w.k2 + 4)] = yc;
        }
    } else if (w.kind == WalkKind::path_with_square) {
        Vertex s1, s2, s3;
        if (!attach_square(g, img[static_cast<std::size_t>(w.k1)], s1, s2, s3)) {
            res.failed_element = "fffb-square";
            return res;
        }
        img[static_cast<std::size_t>(w.k2 + 1)] = s1;
        img[static_cast<std::size_t>(w.k2 + 2)] = s2;
        img[static_cast<std::size_t>(w.k2 + 3)] = s3;
    }

    // image must realize every shape edge
    for (auto [u, v] : w.shape.edges()) {
        if (img[static_cast<std::size_t>(u)] < 0 || img[static_cast<std::size_t>(v)] < 0 ||
            !g.edge(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)])) {
            res.failed_element = "image-edge-check";
            return res;
        }
    }
    res.image = img;
    return res;
}

} // namespace orcycle
