#include "orcycle/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "orcycle/constructions.hpp"
#include "orcycle/rng.hpp"

namespace orcycle {

namespace {

struct CycleDfs {
    const OrientedGraph& g;
    int ell;
    Vertex root;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exceeded = false;
    std::vector<int> dist_to_root; // shortest path length v -> root
    std::vector<Vertex> path;
    VertexSet used;

    CycleDfs(const OrientedGraph& graph, int len, Vertex r, std::uint64_t max_nodes)
        : g(graph), ell(len), root(r), budget(max_nodes), used(graph.order()) {
        dist_to_root.assign(static_cast<std::size_t>(g.order()), -1);
        dist_to_root[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> frontier{root};
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            std::vector<Vertex> next;
            for (Vertex v : frontier) {
                for (Vertex w : g.in(v)) {
                    if (dist_to_root[static_cast<std::size_t>(w)] < 0) {
                        dist_to_root[static_cast<std::size_t>(w)] = d;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    bool run(std::vector<Vertex>& out_cycle) {
        path.push_back(root);
        used.set(root);
        bool ok = extend(1);
        if (ok) out_cycle = path;
        return ok;
    }

    // path holds `depth` vertices starting at root; extend to length ell and
    // close back to root.
    bool extend(int depth) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        Vertex cur = path.back();
        if (depth == ell) return g.edge(cur, root);
        const int remaining = ell - depth; // edges left after stepping, incl. the closing one
        for (Vertex w : g.out(cur)) {
            if (used.test(w)) continue;
            int dr = dist_to_root[static_cast<std::size_t>(w)];
            if (dr < 0 || dr > remaining) continue;
            path.push_back(w);
            used.set(w);
            if (extend(depth + 1)) return true;
            used.reset(w);
            path.pop_back();
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace

CycleSearchResult has_cycle_exact(const OrientedGraph& g, int ell, std::optional<Vertex> through,
                                  SearchBudget budget) {
    if (ell < 3) throw Error(Errc::bad_params, "cycle length must be >= 3");
    CycleSearchResult res;
    if (ell > g.order()) {
        res.status = SearchStatus::absent;
        return res;
    }
    std::vector<Vertex> roots;
    if (through) {
        if (*through < 0 || *through >= g.order()) throw Error(Errc::out_of_range, "through vertex");
        roots.push_back(*through);
    } else {
        for (Vertex v = 0; v < g.order(); ++v) roots.push_back(v);
    }
    std::uint64_t total_nodes = 0;
    for (Vertex r : roots) {
        CycleDfs dfs(g, ell, r, budget.max_nodes - std::min(budget.max_nodes, total_nodes));
        std::vector<Vertex> cyc;
        bool found = dfs.run(cyc);
        total_nodes += dfs.nodes;
        if (found) {
            res.status = SearchStatus::found;
            res.witness = CycleWitness{cyc, through};
            res.nodes_expanded = total_nodes;
            return res;
        }
        if (dfs.exceeded) {
            res.status = SearchStatus::budget_exceeded;
            res.nodes_expanded = total_nodes;
            return res;
        }
    }
    res.status = SearchStatus::absent;
    res.nodes_expanded = total_nodes;
    return res;
}

namespace {

std::vector<VertexSet> mat_identity(int n) {
    std::vector<VertexSet> m(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)].set(i);
    return m;
}

std::vector<VertexSet> mat_mult(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b,
                                int n) {
    std::vector<VertexSet> c(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
        for (Vertex j : a[static_cast<std::size_t>(i)])
            c[static_cast<std::size_t>(i)] |= b[static_cast<std::size_t>(j)];
    return c;
}

std::vector<VertexSet> mat_power(const OrientedGraph& g, long long e) {
    const int n = g.order();
    std::vector<VertexSet> result = mat_identity(n);
    std::vector<VertexSet> base(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = g.out(v);
    while (e > 0) {
        if (e & 1) result = mat_mult(result, base, n);
        e >>= 1;
        if (e > 0) base = mat_mult(base, base, n);
    }
    return result;
}

} // namespace

bool has_closed_walk(const OrientedGraph& g, long long ell) {
    if (ell < 1) throw Error(Errc::bad_params, "walk length must be >= 1");
    if (g.order() == 0) return false;
    auto p = mat_power(g, ell);
    for (Vertex v = 0; v < g.order(); ++v)
        if (p[static_cast<std::size_t>(v)].test(v)) return true;
    return false;
}

std::optional<std::vector<Vertex>> extract_closed_walk(const OrientedGraph& g, long long ell) {
    if (ell < 1) throw Error(Errc::bad_params, "walk length must be >= 1");
    if (g.order() == 0) return std::nullopt;
    // the per-length reachability sets dominate the footprint
    const long long words = (g.order() + 63) / 64;
    if ((ell + 1) * words * 8 > (1LL << 28))
        throw Error(Errc::too_large, "walk too long to extract at this order");
    auto p = mat_power(g, ell);
    Vertex start = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p[static_cast<std::size_t>(v)].test(v)) {
            start = v;
            break;
        }
    }
    if (start < 0) return std::nullopt;
    // reach[r] = vertices with a walk of length exactly r ending at start
    std::vector<VertexSet> reach(static_cast<std::size_t>(ell + 1), VertexSet(g.order()));
    reach[0].set(start);
    for (long long r = 1; r <= ell; ++r)
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.out(v).intersects(reach[static_cast<std::size_t>(r - 1)]))
                reach[static_cast<std::size_t>(r)].set(v);
    std::vector<Vertex> walk{start};
    Vertex cur = start;
    for (long long r = ell; r >= 1; --r) {
        VertexSet choices = g.out(cur) & reach[static_cast<std::size_t>(r - 1)];
        Vertex next = choices.first();
        if (next < 0) return std::nullopt; // cannot happen: reach is consistent
        walk.push_back(next);
        cur = next;
    }
    return walk;
}

PatternSearchResult contains_pattern(const OrientedGraph& g, const CyclePattern& p,
                                     SearchBudget budget) {
    const int len = p.length();
    PatternSearchResult res;
    if (len > g.order()) {
        res.status = SearchStatus::absent;
        return res;
    }
    std::vector<Vertex> img;
    VertexSet used(g.order());
    std::uint64_t nodes = 0;
    bool exceeded = false;

    auto place = [&](auto&& self, int i) -> bool {
        if (++nodes > budget.max_nodes) {
            exceeded = true;
            return false;
        }
        if (i == len) return true;
        const Vertex prev = img.back();
        const VertexSet& cand = p.at(i - 1) == 'f' ? g.out(prev) : g.in(prev);
        for (Vertex w : cand) {
            if (used.test(w)) continue;
            if (i == len - 1) {
                // closing edge between position len-1 and position 0
                const bool ok = p.at(len - 1) == 'f' ? g.edge(w, img[0]) : g.edge(img[0], w);
                if (!ok) continue;
            }
            img.push_back(w);
            used.set(w);
            if (self(self, i + 1)) return true;
            used.reset(w);
            img.pop_back();
            if (exceeded) return false;
        }
        return false;
    };

    for (Vertex v0 = 0; v0 < g.order(); ++v0) {
        img.assign(1, v0);
        used = VertexSet(g.order());
        used.set(v0);
        if (place(place, 1)) {
            res.status = SearchStatus::found;
            res.embedding = img;
            res.nodes_expanded = nodes;
            return res;
        }
        if (exceeded) {
            res.status = SearchStatus::budget_exceeded;
            res.nodes_expanded = nodes;
            return res;
        }
    }
    res.status = SearchStatus::absent;
    res.nodes_expanded = nodes;
    return res;
}

namespace {

/// Shared machinery for pair-state enumeration. Pairs are ordered
/// lexicographically; digit 0 = no edge, 1 = u->v, 2 = v->u, 3 = both
/// (digraph mode only). Completed-assignment encodings are base-S numbers
/// with pair 0 as the most significant digit.
struct PairUniverse {
    int n = 0;
    int states = 3;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    PairUniverse(int order, Mode mode) : n(order), states(mode == Mode::oriented ? 3 : 4) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    int pair_count() const { return static_cast<int>(pairs.size()); }
};

struct EnumState {
    std::vector<VertexSet> out, in;
    std::vector<int> outdeg, indeg, rem;

    explicit EnumState(int n)
        : out(static_cast<std::size_t>(n), VertexSet(n)),
          in(static_cast<std::size_t>(n), VertexSet(n)),
          outdeg(static_cast<std::size_t>(n), 0),
          indeg(static_cast<std::size_t>(n), 0),
          rem(static_cast<std::size_t>(n), n - 1) {}

    void add_edge(Vertex u, Vertex v) {
        out[static_cast<std::size_t>(u)].set(v);
        in[static_cast<std::size_t>(v)].set(u);
        outdeg[static_cast<std::size_t>(u)]++;
        indeg[static_cast<std::size_t>(v)]++;
    }
    void remove_edge(Vertex u, Vertex v) {
        out[static_cast<std::size_t>(u)].reset(v);
        in[static_cast<std::size_t>(v)].reset(u);
        outdeg[static_cast<std::size_t>(u)]--;
        indeg[static_cast<std::size_t>(v)]--;
    }
    void apply_digit(Vertex u, Vertex v, int digit) {
        if (digit == 1 || digit == 3) add_edge(u, v);
        if (digit == 2 || digit == 3) add_edge(v, u);
    }
    void undo_digit(Vertex u, Vertex v, int digit) {
        if (digit == 1 || digit == 3) remove_edge(u, v);
        if (digit == 2 || digit == 3) remove_edge(v, u);
    }
    bool potential_ok(Vertex v, int d) const {
        return outdeg[static_cast<std::size_t>(v)] + rem[static_cast<std::size_t>(v)] >= d &&
               indeg[static_cast<std::size_t>(v)] + rem[static_cast<std::size_t>(v)] >= d;
    }
};

void enumerate_impl(int n, Mode mode, std::optional<int> min_semi,
                    const std::function<void(const OrientedGraph&)>& fn) {
    PairUniverse pu(n, mode);
    EnumState st(n);
    const int filter = min_semi.value_or(0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == pu.pair_count()) {
            fn(OrientedGraph::from_adjacency(st.out, mode));
            return;
        }
        auto [u, v] = pu.pairs[static_cast<std::size_t>(i)];
        st.rem[static_cast<std::size_t>(u)]--;
        st.rem[static_cast<std::size_t>(v)]--;
        for (int digit = 0; digit < pu.states; ++digit) {
            st.apply_digit(u, v, digit);
            if (st.potential_ok(u, filter) && st.potential_ok(v, filter)) self(self, i + 1);
            st.undo_digit(u, v, digit);
        }
        st.rem[static_cast<std::size_t>(u)]++;
        st.rem[static_cast<std::size_t>(v)]++;
    };
    rec(rec, 0);
}

} // namespace

void enumerate_oriented(int n, std::optional<int> min_semidegree,
                        const std::function<void(const OrientedGraph&)>& fn) {
    if (n < 0 || n > 6) throw Error(Errc::too_large, "oriented enumeration capped at n = 6");
    enumerate_impl(n, Mode::oriented, min_semidegree, fn);
}

void enumerate_digraphs(int n, std::optional<int> min_semidegree,
                        const std::function<void(const OrientedGraph&)>& fn) {
    if (n < 0 || n > 5) throw Error(Errc::too_large, "digraph enumeration capped at n = 5");
    enumerate_impl(n, Mode::general_digraph, min_semidegree, fn);
}

std::uint64_t count_oriented(int n, std::optional<int> min_semidegree) {
    std::uint64_t c = 0;
    enumerate_oriented(n, min_semidegree, [&](const OrientedGraph&) { ++c; });
    return c;
}

namespace {

/// Exact-length path existence in a partial assignment, used to detect that a
/// freshly added edge closes a cycle of length ell.
bool path_of_length(const std::vector<VertexSet>& out, Vertex from, Vertex to, int len,
                    VertexSet& used) {
    if (len == 1) return out[static_cast<std::size_t>(from)].test(to);
    for (Vertex w : out[static_cast<std::size_t>(from)]) {
        if (w == to || used.test(w)) continue;
        used.set(w);
        if (path_of_length(out, w, to, len - 1, used)) {
            used.reset(w);
            return true;
        }
        used.reset(w);
    }
    return false;
}

bool closes_ell_cycle(const EnumState& st, int n, Vertex u, Vertex v, int ell) {
    VertexSet used(n);
    used.set(v);
    return path_of_length(st.out, v, u, ell - 1, used);
}

struct LevelHit {
    std::uint64_t encoding;
    std::vector<VertexSet> out_rows;
};

/// First (in encoding order) ell-cycle-free graph with minimum semidegree
/// >= d over the full pair-state universe. The search is sharded by digit
/// prefix; shards prune independently, and the merge keeps the smallest
/// encoding, so the result does not depend on the number of jobs.
class LevelSearch {
public:
    LevelSearch(int ell, int n, int d, Mode mode, int jobs)
        : ell_(ell), n_(n), d_(d), mode_(mode), jobs_(std::max(1, jobs)), pu_(n, mode) {}

    std::optional<LevelHit> run() {
        const int total_pairs = pu_.pair_count();
        if (total_pairs == 0) {
            // edgeless universe: valid iff d == 0
            if (d_ > 0) return std::nullopt;
            return LevelHit{0, std::vector<VertexSet>(static_cast<std::size_t>(n_), VertexSet(n_))};
        }
        prefix_depth_ = 0;
        std::uint64_t prefix_count = 1;
        while (jobs_ > 1 && prefix_depth_ < total_pairs &&
               prefix_count < static_cast<std::uint64_t>(jobs_) * 8) {
            prefix_count *= static_cast<std::uint64_t>(pu_.states);
            ++prefix_depth_;
        }
        suffix_weight_ = 1;
        for (int i = prefix_depth_; i < total_pairs; ++i)
            suffix_weight_ *= static_cast<std::uint64_t>(pu_.states);

        best_encoding_.store(~std::uint64_t{0});
        std::vector<std::optional<LevelHit>> hits(static_cast<std::size_t>(jobs_));
        if (jobs_ == 1) {
            hits[0] = worker(0, prefix_count);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs_; ++w)
                threads.emplace_back([&, w] { hits[static_cast<std::size_t>(w)] = worker(w, prefix_count); });
            for (auto& t : threads) t.join();
        }
        std::optional<LevelHit> best;
        for (auto& h : hits)
            if (h && (!best || h->encoding < best->encoding)) best = std::move(h);
        return best;
    }

private:
    std::optional<LevelHit> worker(int worker_index, std::uint64_t prefix_count) {
        EnumState st(n_);
        std::optional<LevelHit> local;
        for (std::uint64_t pfx = static_cast<std::uint64_t>(worker_index); pfx < prefix_count;
             pfx += static_cast<std::uint64_t>(jobs_)) {
            const std::uint64_t base = pfx * suffix_weight_;
            if (base >= best_encoding_.load(std::memory_order_relaxed)) break;
            if (local && base >= local->encoding) break;
            // decode prefix digits most-significant first, applying prunes
            std::vector<int> digits(static_cast<std::size_t>(prefix_depth_));
            std::uint64_t rest = pfx;
            for (int i = prefix_depth_ - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % pu_.states);
                rest /= pu_.states;
            }
            int applied = 0;
            bool viable = true;
            for (int i = 0; i < prefix_depth_ && viable; ++i) {
                auto [u, v] = pu_.pairs[static_cast<std::size_t>(i)];
                st.rem[static_cast<std::size_t>(u)]--;
                st.rem[static_cast<std::size_t>(v)]--;
                st.apply_digit(u, v, digits[static_cast<std::size_t>(i)]);
                ++applied;
                viable = digit_ok(st, u, v, digits[static_cast<std::size_t>(i)]);
            }
            bool hit_here = false;
            if (viable) {
                std::uint64_t enc = base;
                if (dfs(st, prefix_depth_, enc)) {
                    // dfs leaves the completed assignment applied; capture and stop,
                    // later prefixes in this worker can only give larger encodings.
                    local = LevelHit{enc, st.out};
                    std::uint64_t seen = best_encoding_.load(std::memory_order_relaxed);
                    while (enc < seen &&
                           !best_encoding_.compare_exchange_weak(seen, enc, std::memory_order_relaxed)) {
                    }
                    hit_here = true;
                }
            }
            if (hit_here) break;
            for (int i = applied - 1; i >= 0; --i) {
                auto [u, v] = pu_.pairs[static_cast<std::size_t>(i)];
                st.undo_digit(u, v, digits[static_cast<std::size_t>(i)]);
                st.rem[static_cast<std::size_t>(u)]++;
                st.rem[static_cast<std::size_t>(v)]++;
            }
        }
        return local;
    }

    bool digit_ok(const EnumState& st, Vertex u, Vertex v, int digit) {
        if (!st.potential_ok(u, d_) || !st.potential_ok(v, d_)) return false;
        if (digit == 1 || digit == 3)
            if (closes_ell_cycle(st, n_, u, v, ell_)) return false;
        if (digit == 2 || digit == 3)
            if (closes_ell_cycle(st, n_, v, u, ell_)) return false;
        return true;
    }

    /// Returns true at the first completed assignment, leaving st holding it;
    /// enc accumulates the encoding of the completion.
    bool dfs(EnumState& st, int i, std::uint64_t& enc) {
        if (i == pu_.pair_count()) return true;
        auto [u, v] = pu_.pairs[static_cast<std::size_t>(i)];
        std::uint64_t weight = 1;
        for (int j = i + 1; j < pu_.pair_count(); ++j) weight *= static_cast<std::uint64_t>(pu_.states);
        st.rem[static_cast<std::size_t>(u)]--;
        st.rem[static_cast<std::size_t>(v)]--;
        for (int digit = 0; digit < pu_.states; ++digit) {
            st.apply_digit(u, v, digit);
            if (digit_ok(st, u, v, digit)) {
                enc += static_cast<std::uint64_t>(digit) * weight;
                if (dfs(st, i + 1, enc)) return true;
                enc -= static_cast<std::uint64_t>(digit) * weight;
            }
            st.undo_digit(u, v, digit);
        }
        st.rem[static_cast<std::size_t>(u)]++;
        st.rem[static_cast<std::size_t>(v)]++;
        return false;
    }

    int ell_, n_, d_;
    Mode mode_;
    int jobs_;
    PairUniverse pu_;
    int prefix_depth_ = 0;
    std::uint64_t suffix_weight_ = 1;
    std::atomic<std::uint64_t> best_encoding_{~std::uint64_t{0}};
};

int degree_cap(int n, Mode mode) { return mode == Mode::oriented ? (n - 1) / 2 : n - 1; }

} // namespace

ThresholdRecord threshold_search(int ell, int n, ThresholdConfig cfg) {
    if (ell < 3 || n < ell) throw Error(Errc::bad_params, "need 3 <= ell <= n");
    ThresholdRecord rec;
    rec.ell = ell;
    rec.n = n;
    rec.mode = cfg.mode;

    const bool exhaustive_feasible =
        (cfg.mode == Mode::oriented && n <= 6) || (cfg.mode == Mode::general_digraph && n <= 5);

    if (exhaustive_feasible) {
        for (int d = degree_cap(n, cfg.mode); d >= 0; --d) {
            LevelSearch search(ell, n, d, cfg.mode, cfg.jobs);
            auto hit = search.run();
            if (hit) {
                rec.witness_min_semidegree = d;
                rec.lower_witness = OrientedGraph::from_adjacency(hit->out_rows, cfg.mode);
                rec.lower = d + 1;
                rec.upper = d + 1;
                rec.lower_provenance = "exhaustive";
                rec.upper_provenance = "exhaustive";
                rec.exhaustive = true;
                return rec;
            }
        }
        throw std::logic_error("level search found no witness at d = 0");
    }

    // Lower bound: construction library, then randomized probes.
    int best_semi = -1;
    std::optional<OrientedGraph> best_witness;
    std::string best_prov;
    auto consider = [&](const OrientedGraph& g, const std::string& prov) {
        int semi = g.degree_summary().min_semi;
        if (semi <= best_semi) return;
        auto probe = has_cycle_exact(g, ell, std::nullopt, cfg.budget);
        if (probe.status == SearchStatus::absent) {
            best_semi = semi;
            best_witness = g;
            best_prov = prov;
        }
    };
    for (int k = 3; k <= n; ++k) {
        if (ell % k != 0 || ell / k > n / k) {
            consider(blowup_cycle(k, n), "construction:blowup-" + std::to_string(k));
            break; // smaller k gives the larger class size; later k only lose
        }
    }
    if (cfg.mode == Mode::general_digraph && ell % 2 == 1)
        consider(complete_bipartite_digraph(n), "construction:bipartite-digraph");
    if (cfg.mode == Mode::oriented && best_semi >= 0) {
        for (int s = 0; s < cfg.samples; ++s) {
            double frac = static_cast<double>(best_semi + 1) / n;
            if (frac > (n - 1) / 2.0 / n) break;
            consider(random_degree_conditioned(n, frac, cfg.seed + static_cast<std::uint64_t>(s)),
                     "random-search:seed-" + std::to_string(cfg.seed + static_cast<std::uint64_t>(s)));
        }
    }
    if (best_semi < 0) {
        // the edgeless graph is always ell-cycle-free
        best_semi = 0;
        best_witness = OrientedGraph::from_edge_list(n, {}, cfg.mode);
        best_prov = "construction:edgeless";
    }
    rec.witness_min_semidegree = best_semi;
    rec.lower_witness = best_witness;
    rec.lower = best_semi + 1;
    rec.lower_provenance = best_prov;

    // Upper bound: the sharpest sound guarantee available.
    int upper = degree_cap(n, cfg.mode) + 1;
    std::string upper_prov = "degree-cap";
    if (cfg.mode == Mode::general_digraph) {
        int density = (n + ell - 3) / 2 + 1;
        if (density < upper) {
            upper = density;
            upper_prov = "density-extremal";
        }
    }
    if (cfg.mode == Mode::oriented) {
        if (ell == 3) {
            int b = (2 * n + 4) / 5; // ceil(2n/5)
            if (b < upper) {
                upper = b;
                upper_prov = "lemma:3cycle-through-vertex";
            }
        } else if (ell >= 4 && ell <= 6) {
            int b = n / 3 + 1;
            if (b < upper) {
                upper = b;
                upper_prov = "lemma:through-vertex";
            }
        }
    }
    rec.upper = upper;
    rec.upper_provenance = upper_prov;
    if (rec.lower > rec.upper)
        throw std::logic_error("threshold lower bound exceeds a proven upper bound");
    return rec;
}

double ex_di_formula(int ell, int n) {
    if (ell < 3 || n < 0) throw Error(Errc::bad_params, "need ell >= 3");
    return n * (n - 1) / 2.0 + (ell - 2) * n / 2.0;
}

int ex_di_brute(int ell, int n) {
    if (ell < 3) throw Error(Errc::bad_params, "need ell >= 3");
    if (n > 4) throw Error(Errc::too_large, "brute-force universe capped at n = 4");
    int best = 0;
    enumerate_digraphs(n, std::nullopt, [&](const OrientedGraph& g) {
        const int m = static_cast<int>(g.edge_count());
        if (m <= best) return;
        if (has_cycle_exact(g, ell).status == SearchStatus::absent) best = m;
    });
    return best;
}

SplitExperimentReport random_split_experiment(const OrientedGraph& g,
                                              const SplitExperimentConfig& cfg,
                                              std::uint64_t seed) {
    const int n = g.order();
    if (n == 0 || n % 2 != 0) throw Error(Errc::odd_order, "even order required");
    const int u = n / 2;
    SplitExperimentReport rep;
    rep.trials = cfg.trials;
    if (cfg.lemma_faithful) {
        rep.threshold = (0.375 + cfg.alpha - std::pow(u, -0.375)) * u;
        const double pre = (0.375 + cfg.alpha - std::pow(n, -0.375)) * n;
        if (g.degree_summary().min_semi < pre)
            throw Error(Errc::bad_params,
                        "host graph misses the lemma-faithful semidegree precondition");
    } else {
        rep.threshold = cfg.threshold_fraction * u;
    }
    rep.per_vertex_bound = 1.0 / (static_cast<double>(n) * n);
    rep.union_bound = 2.0 / n;
    const double c = 1.0 - std::pow(2.0, -0.375);
    rep.tail_bound = 2.0 * std::exp(-c * c * std::pow(u, 0.25) / 12.0);

    std::vector<Vertex> idx(static_cast<std::size_t>(n));
    rep.min_observed = n;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        SplitRng rng(seed, t);
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        VertexSet mask(n);
        for (int i = 0; i < u; ++i) {
            std::uint64_t j = rng.below(static_cast<std::uint64_t>(n - i));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i) + j]);
            mask.set(idx[static_cast<std::size_t>(i)]);
        }
        int semi = min_semidegree_within(g, mask);
        rep.min_observed = std::min(rep.min_observed, semi);
        if (semi < rep.threshold) rep.failures++;
    }
    if (cfg.trials == 0) rep.min_observed = 0;
    rep.failure_frequency =
        cfg.trials == 0 ? 0.0 : static_cast<double>(rep.failures) / static_cast<double>(cfg.trials);
    rep.within_tolerance = rep.failure_frequency < cfg.failure_tolerance;
    return rep;
}

std::optional<int> shortest_cycle(const OrientedGraph& g) {
    std::optional<int> girth;
    for (Vertex r = 0; r < g.order(); ++r) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        dist[static_cast<std::size_t>(r)] = 0;
        std::vector<Vertex> frontier{r};
        int d = 0;
        while (!frontier.empty() && (!girth || d + 1 < *girth)) {
            ++d;
            std::vector<Vertex> next;
            for (Vertex v : frontier) {
                for (Vertex w : g.out(v)) {
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = d;
                        next.push_back(w);
                        if (g.edge(w, r) && (!girth || d + 1 < *girth)) girth = d + 1;
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return girth;
}

} // namespace orcycle
