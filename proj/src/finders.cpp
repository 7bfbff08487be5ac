#include "orcycle/finders.hpp"

#include <algorithm>

namespace orcycle {

namespace {

int third_floor_plus_one(int n) { return n / 3 + 1; }

void require_oriented(const OrientedGraph& g) {
    if (g.mode() != Mode::oriented) throw Error(Errc::wrong_mode, "oriented mode required");
}

void require_vertex(const OrientedGraph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw Error(Errc::out_of_range, "vertex out of range");
}

/// Bounded oracle backtracking, flagged in the trace.
void oracle_fallback(const OrientedGraph& g, Vertex x, int ell, CycleFindResult& res) {
    res.trace.fallback_used = true;
    auto oracle = has_cycle_exact(g, ell, x);
    if (oracle.status == SearchStatus::found) {
        res.witness = oracle.witness;
        res.trace.branch = "fallback";
    } else if (oracle.status == SearchStatus::budget_exceeded) {
        res.trace.oracle_budget_exceeded = true;
    }
}

CycleWitness checked(const OrientedGraph& g, std::vector<Vertex> vs, Vertex through) {
    CycleWitness w{std::move(vs), through};
    if (!w.validate(g)) throw std::logic_error("finder produced an invalid witness");
    return w;
}

} // namespace

bool Butterfly::validate(const OrientedGraph& g) const {
    Vertex vs[5] = {x, a, z, b, y};
    for (int i = 0; i < 5; ++i) {
        if (vs[i] < 0 || vs[i] >= g.order()) return false;
        for (int j = i + 1; j < 5; ++j)
            if (vs[i] == vs[j]) return false;
    }
    return g.edge(x, a) && g.edge(x, z) && g.edge(a, z) && g.edge(z, b) && g.edge(z, y) &&
           g.edge(b, y);
}

std::vector<Vertex> Butterfly::xy_path(int length) const {
    switch (length) {
        case 2: return {x, z, y};
        case 3: return {x, a, z, y};
        case 4: return {x, a, z, b, y};
        default: throw Error(Errc::bad_params, "butterfly carries x->y paths of lengths 2, 3, 4");
    }
}

const VertexSet* FinderTrace::find(const std::string& name) const {
    for (const auto& [k, v] : sets)
        if (k == name) return &v;
    return nullptr;
}

ButterflyResult find_butterfly(const OrientedGraph& g, Vertex x) {
    require_oriented(g);
    require_vertex(g, x);
    ButterflyResult res;
    res.trace.hypothesis_met = g.degree_summary().min_semi >= third_floor_plus_one(g.order());

    const VertexSet& out_x = g.out(x);
    res.trace.record("out_x", out_x);
    auto az = find_edge_within(g, out_x);
    if (!az) {
        res.trace.branch = "no-edge-in-out-x";
        return res;
    }
    auto [a, z] = *az;
    const VertexSet& out_z = g.out(z);
    res.trace.record("out_z", out_z);
    auto by = find_edge_within(g, out_z);
    if (!by) {
        res.trace.branch = "no-edge-in-out-z";
        return res;
    }
    auto [b, y] = *by;
    Butterfly bf{x, a, z, b, y};
    if (!bf.validate(g)) throw std::logic_error("butterfly construction violated its invariant");
    res.butterfly = bf;
    res.trace.branch = "direct";
    return res;
}

CycleFindResult find_3cycle_through(const OrientedGraph& g, Vertex u) {
    require_oriented(g);
    require_vertex(g, u);
    CycleFindResult res;
    res.trace.hypothesis_met = g.degree_summary().min_semi >= (2 * g.order() + 4) / 5;

    const VertexSet& out_u = g.out(u);
    const VertexSet& in_u = g.in(u);
    res.trace.record("out_u", out_u);
    res.trace.record("in_u", in_u);
    if (out_u.any()) {
        Vertex x = low_outdegree_vertex(g, out_u);
        VertexSet hits = g.out(x) & in_u;
        Vertex w = hits.first();
        if (w >= 0) {
            res.witness = checked(g, {u, x, w}, u);
            res.trace.branch = "fact-3.1-choice";
            return res;
        }
        // procedure's choice failed; scan every outneighbour before giving up
        for (Vertex xv : out_u) {
            VertexSet h = g.out(xv) & in_u;
            Vertex w2 = h.first();
            if (w2 >= 0) {
                res.witness = checked(g, {u, xv, w2}, u);
                res.trace.branch = "scan-all";
                res.trace.fallback_used = true;
                return res;
            }
        }
    }
    res.trace.branch = "not-found";
    return res;
}

CycleFindResult find_4cycle_through(const OrientedGraph& g, Vertex x) {
    require_oriented(g);
    require_vertex(g, x);
    if (g.order() < 4) throw Error(Errc::bad_params, "need n >= 4");
    CycleFindResult res;
    const int s = third_floor_plus_one(g.order());
    res.trace.hypothesis_met = g.degree_summary().min_semi >= s;

    VertexSet X = g.out(x).take(s);
    VertexSet Y = g.in(x).take(s);
    res.trace.record("X", X);
    res.trace.record("Y", Y);
    VertexSet XY = X | Y;

    // (i): some x' in X sends at least s/2 edges outside X u Y; (ii) dually.
    auto large_outreach = [&](Vertex v) { return 2 * g.out(v).minus(XY).count() >= s; };
    auto large_inreach = [&](Vertex v) { return 2 * g.in(v).minus(XY).count() >= s; };
    std::optional<Vertex> xp_i, yp_ii;
    for (Vertex v : X)
        if (large_outreach(v)) {
            xp_i = v;
            break;
        }
    for (Vertex v : Y)
        if (large_inreach(v)) {
            yp_ii = v;
            break;
        }

    if (xp_i && yp_ii) {
        VertexSet mid = (g.out(*xp_i) & g.in(*yp_ii)).minus(XY);
        Vertex w = mid.first();
        if (w >= 0) {
            res.witness = checked(g, {x, *xp_i, w, *yp_ii}, x);
            res.trace.branch = "both-large-outreach";
            return res;
        }
    }
    if (!xp_i) {
        // X' = members of X with an inneighbour inside X
        VertexSet Xp(g.order());
        for (Vertex v : X)
            if (g.in(v).intersects(X)) Xp.set(v);
        res.trace.record("Xp", Xp);
        if (Xp.any()) {
            Vertex xp = low_outdegree_vertex(g, Xp);
            Vertex y = (g.out(xp) & Y).first();
            Vertex xpp = (g.in(xp) & X).first();
            if (y >= 0 && xpp >= 0) {
                res.witness = checked(g, {x, xpp, xp, y}, x);
                res.trace.branch = "x-prime";
                return res;
            }
        }
    } else if (!yp_ii) {
        // mirror: Y' = members of Y with an outneighbour inside Y
        VertexSet Yp(g.order());
        for (Vertex v : Y)
            if (g.out(v).intersects(Y)) Yp.set(v);
        res.trace.record("Yp", Yp);
        if (Yp.any()) {
            Vertex yp = -1;
            int best = 0;
            for (Vertex v : Yp) { // minimize indegree inside Y'
                int d = g.in(v).intersection_count(Yp);
                if (yp < 0 || d < best) {
                    yp = v;
                    best = d;
                }
            }
            Vertex w = (g.in(yp) & X).first();
            Vertex ypp = (g.out(yp) & Y).first();
            if (w >= 0 && ypp >= 0) {
                res.witness = checked(g, {x, w, yp, ypp}, x);
                res.trace.branch = "y-prime";
                return res;
            }
        }
    }
    oracle_fallback(g, x, 4, res);
    if (!res.found() && res.trace.branch.empty()) res.trace.branch = "not-found";
    return res;
}

CycleFindResult find_5cycle_through(const OrientedGraph& g, Vertex x) {
    require_oriented(g);
    require_vertex(g, x);
    if (g.order() < 5) throw Error(Errc::bad_params, "need n >= 5");
    CycleFindResult res;
    const int s = third_floor_plus_one(g.order());
    res.trace.hypothesis_met = g.degree_summary().min_semi >= s;

    // edge ya inside N-(x); then ya, ax, yx are all edges
    auto ya = find_edge_within(g, g.in(x));
    if (!ya) {
        oracle_fallback(g, x, 5, res);
        if (!res.found()) res.trace.branch = "no-edge-in-in-x";
        return res;
    }
    auto [y, a] = *ya;
    VertexSet X = g.out(x).take(s);
    VertexSet Y = g.in(y).take(s);
    VertexSet Z = X & Y;
    res.trace.record("X", X);
    res.trace.record("Y", Y);
    res.trace.record("Z", Z);

    // (ii): an X-Y edge gives an x->y path of length 3 avoiding a
    for (Vertex u : X) {
        Vertex v = (g.out(u) & Y).first();
        if (v >= 0) {
            res.witness = checked(g, {x, u, v, y, a}, x);
            res.trace.branch = "xy-edge";
            return res;
        }
    }
    // (i): fresh middle vertex between X\Z and Y\Z gives a length-4 path,
    // closed directly by the edge yx
    VertexSet XnoZ = X.minus(Z);
    VertexSet YnoZ = Y.minus(Z);
    if (XnoZ.any() && YnoZ.any()) {
        Vertex xp = -1;
        int best = 0;
        for (Vertex v : XnoZ) {
            int d = g.out(v).intersection_count(XnoZ);
            if (xp < 0 || d < best) {
                xp = v;
                best = d;
            }
        }
        Vertex yp = -1;
        best = 0;
        for (Vertex v : YnoZ) {
            int d = g.in(v).intersection_count(YnoZ);
            if (yp < 0 || d < best) {
                yp = v;
                best = d;
            }
        }
        // the fresh middle vertex may be a: the closing edge here is yx, so a
        // is off the cycle unless it is the middle itself
        VertexSet mid = (g.out(xp) & g.in(yp)).minus(X | Y);
        Vertex w = mid.first();
        if (w >= 0) {
            res.witness = checked(g, {x, xp, w, yp, y}, x);
            res.trace.branch = "claim-2";
            return res;
        }
    }
    oracle_fallback(g, x, 5, res);
    if (!res.found() && res.trace.branch.empty()) res.trace.branch = "not-found";
    return res;
}

CycleFindResult find_6cycle_through(const OrientedGraph& g, Vertex x) {
    require_oriented(g);
    require_vertex(g, x);
    if (g.order() < 6) throw Error(Errc::bad_params, "need n >= 6");
    CycleFindResult res;
    const int s = third_floor_plus_one(g.order());
    res.trace.hypothesis_met = g.degree_summary().min_semi >= s;

    auto bf_res = find_butterfly(g, x);
    if (!bf_res.butterfly) {
        oracle_fallback(g, x, 6, res);
        if (!res.found()) res.trace.branch = "no-butterfly";
        return res;
    }
    const Butterfly bf = *bf_res.butterfly;
    const Vertex a = bf.a, z = bf.z, y = bf.y;

    auto splice = [&](const std::vector<Vertex>& yx_path, int butterfly_len) -> CycleWitness {
        std::vector<Vertex> cyc = bf.xy_path(butterfly_len);
        // yx_path runs y..x; append its interior
        cyc.insert(cyc.end(), yx_path.begin() + 1, yx_path.end() - 1);
        return checked(g, std::move(cyc), x);
    };

    // return path of length 2: y -> w -> x
    {
        VertexSet mid = g.out(y) & g.in(x);
        Vertex w = mid.first();
        if (w >= 0) {
            res.witness = splice({y, w, x}, 4);
            res.trace.branch = "return-2";
            return res;
        }
    }
    // length 3 avoiding a: y -> w1 -> w2 -> x
    for (Vertex w1 : g.out(y)) {
        if (w1 == a || w1 == x) continue;
        VertexSet mid = g.out(w1) & g.in(x);
        mid.reset(a);
        Vertex w2 = mid.first();
        if (w2 >= 0 && w2 != y) {
            res.witness = splice({y, w1, w2, x}, 3);
            res.trace.branch = "return-3";
            return res;
        }
    }
    // length 4 avoiding z, via the sets of the counting argument:
    // Y ⊆ N+(y)\{a,x} of size floor(n/3)-1, X ⊆ N-(x)\{y} of size floor(n/3)
    {
        VertexSet Yset = g.out(y);
        Yset.reset(a);
        Yset.reset(x);
        Yset = Yset.take(std::max(0, g.order() / 3 - 1));
        VertexSet Xset = g.in(x);
        Xset.reset(y);
        Xset = Xset.take(g.order() / 3);
        res.trace.record("X", Xset);
        res.trace.record("Y", Yset);
        VertexSet Yp = out_neighborhood(g, Yset).minus(Yset);
        VertexSet Xp = in_neighborhood(g, Xset).minus(Xset);
        res.trace.record("Xp", Xp);
        res.trace.record("Yp", Yp);
        VertexSet common = Xp & Yp;
        if (common.test(z)) common.reset(z);
        for (Vertex w : common) {
            Vertex v1 = (g.in(w) & Yset).first();
            Vertex v2 = (g.out(w) & Xset).first();
            if (v1 >= 0 && v2 >= 0 && v1 != v2 && w != x && w != y) {
                res.witness = splice({y, v1, w, v2, x}, 2);
                res.trace.branch = "return-4";
                return res;
            }
        }
    }
    oracle_fallback(g, x, 6, res);
    if (!res.found() && res.trace.branch.empty()) res.trace.branch = "not-found";
    return res;
}

PathFindResult find_path_345(const OrientedGraph& g, Vertex x, Vertex y, const VertexSet& avoid,
                             std::optional<double> doc_c) {
    require_vertex(g, x);
    require_vertex(g, y);
    if (x == y) throw Error(Errc::bad_params, "endpoints must differ");
    if (avoid.universe() != g.order()) throw Error(Errc::out_of_range, "avoid universe mismatch");
    if (avoid.test(x) || avoid.test(y)) throw Error(Errc::bad_params, "endpoints inside avoid set");

    PathFindResult res;
    if (doc_c) res.trace.constants = PathConstants{1e-4, *doc_c, *doc_c * 1e5};
    VertexSet blocked = avoid;
    blocked.set(x);
    blocked.set(y);
    VertexSet X = g.out(x).minus(blocked);
    VertexSet Y = g.in(y).minus(blocked);
    res.trace.record("X", X);
    res.trace.record("Y", Y);

    // length 3: an X-Y edge
    for (Vertex u : X) {
        Vertex v = (g.out(u) & Y).first();
        if (v >= 0) {
            res.path = {x, u, v, y};
            res.trace.branch = "length-3";
            return res;
        }
    }
    // length 4: fresh middle vertex
    for (Vertex u : X) {
        for (Vertex v : Y) {
            if (u == v) continue;
            VertexSet mid = (g.out(u) & g.in(v)).minus(blocked);
            mid.reset(u);
            mid.reset(v);
            Vertex w = mid.first();
            if (w >= 0) {
                res.path = {x, u, w, v, y};
                res.trace.branch = "length-4";
                return res;
            }
        }
    }
    // length 5: fresh bridging edge
    for (Vertex u : X) {
        for (Vertex v : Y) {
            if (u == v) continue;
            VertexSet left = g.out(u).minus(blocked);
            left.reset(u);
            left.reset(v);
            for (Vertex w1 : left) {
                VertexSet right = (g.out(w1) & g.in(v)).minus(blocked);
                right.reset(u);
                right.reset(v);
                right.reset(w1);
                Vertex w2 = right.first();
                if (w2 >= 0) {
                    res.path = {x, u, w1, w2, v, y};
                    res.trace.branch = "length-5";
                    return res;
                }
            }
        }
    }
    res.trace.branch = "not-found";
    return res;
}

CycleFindResult find_lcycle_through(const OrientedGraph& g, Vertex x, int ell) {
    require_oriented(g);
    require_vertex(g, x);
    if (ell < 4) throw Error(Errc::bad_params, "need ell >= 4");
    if (ell == 4) return find_4cycle_through(g, x);
    if (ell == 5) return find_5cycle_through(g, x);
    if (ell == 6) return find_6cycle_through(g, x);
    if (g.order() < ell) throw Error(Errc::bad_params, "need n >= ell");

    CycleFindResult res;
    const int s = third_floor_plus_one(g.order());
    res.trace.hypothesis_met = g.degree_summary().min_semi >= s;
    res.trace.constants = PathConstants{1e-4, static_cast<double>(ell), ell * 1e5};

    auto bf_res = find_butterfly(g, x);
    if (!bf_res.butterfly) {
        oracle_fallback(g, x, ell, res);
        if (!res.found()) res.trace.branch = "no-butterfly";
        return res;
    }
    const Butterfly bf = *bf_res.butterfly;

    // greedy path of length ell-7 out of y, avoiding a, b, x, z;
    // successor of maximum remaining outdegree, ties to the smallest index
    VertexSet used = VertexSet::of(g.order(), {bf.a, bf.b, bf.x, bf.z, bf.y});
    std::vector<Vertex> path{bf.y};
    for (int step = 0; step < ell - 7; ++step) {
        VertexSet cand = g.out(path.back()).minus(used);
        Vertex pick = -1;
        int best = -1;
        for (Vertex c : cand) {
            int d = g.out(c).minus(used).count();
            if (d > best) {
                best = d;
                pick = c;
            }
        }
        if (pick < 0) break;
        path.push_back(pick);
        used.set(pick);
    }
    if (static_cast<int>(path.size()) != ell - 6) {
        oracle_fallback(g, x, ell, res);
        if (!res.found()) res.trace.branch = "greedy-stuck";
        return res;
    }
    res.trace.record("P", VertexSet::from_vertices(g.order(), path));

    Vertex v = path.back();
    VertexSet avoid = VertexSet::of(g.order(), {bf.a, bf.b, bf.z});
    for (std::size_t i = 0; i + 1 < path.size(); ++i) avoid.set(path[i]);
    auto back = find_path_345(g, v, x, avoid, static_cast<double>(ell));
    if (!back.found()) {
        oracle_fallback(g, x, ell, res);
        if (!res.found()) res.trace.branch = "no-return-path";
        return res;
    }
    const int return_len = static_cast<int>(back.path->size()) - 1;
    const int butterfly_len = 7 - return_len; // total: butterfly + (ell-7) + return = ell
    std::vector<Vertex> cyc = bf.xy_path(butterfly_len);
    cyc.insert(cyc.end(), path.begin() + 1, path.end());        // y ..> v
    cyc.insert(cyc.end(), back.path->begin() + 1, back.path->end() - 1); // v ..> x interior
    res.witness = checked(g, std::move(cyc), x);
    res.trace.branch = "pipeline";
    return res;
}

} // namespace orcycle
