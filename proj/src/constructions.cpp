#include "orcycle/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orcycle/rng.hpp"

namespace orcycle {

int BlowupSpec::class_of(Vertex v) const {
    for (int i = k - 1; i >= 0; --i)
        if (v >= class_offsets[static_cast<std::size_t>(i)]) return i;
    throw Error(Errc::out_of_range, "vertex below class 0");
}

BlowupSpec blowup_spec(int k, int n) {
    if (k < 3 || n < k) throw Error(Errc::bad_params, "need k >= 3 and n >= k");
    BlowupSpec spec;
    spec.k = k;
    spec.n = n;
    spec.class_sizes.assign(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) spec.class_sizes[static_cast<std::size_t>(i)]++;
    spec.class_offsets.resize(static_cast<std::size_t>(k));
    int off = 0;
    for (int i = 0; i < k; ++i) {
        spec.class_offsets[static_cast<std::size_t>(i)] = off;
        off += spec.class_sizes[static_cast<std::size_t>(i)];
    }
    return spec;
}

OrientedGraph blowup_cycle(int k, int n) {
    BlowupSpec spec = blowup_spec(k, n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        Vertex lo = spec.class_offsets[static_cast<std::size_t>(i)];
        Vertex hi = lo + spec.class_sizes[static_cast<std::size_t>(i)];
        Vertex tlo = spec.class_offsets[static_cast<std::size_t>(j)];
        Vertex thi = tlo + spec.class_sizes[static_cast<std::size_t>(j)];
        for (Vertex v = lo; v < hi; ++v) rows[static_cast<std::size_t>(v)].set_range(tlo, thi);
    }
    return OrientedGraph::from_adjacency(std::move(rows), Mode::oriented);
}

GraphWithVertex blowup_with_waypoint(int n) {
    if (n < 5) throw Error(Errc::bad_params, "need n >= 5");
    BlowupSpec spec = blowup_spec(3, n);
    // Shrink the largest class (class 0) by one; u takes the last label.
    std::vector<int> sizes = spec.class_sizes;
    sizes[0]--;
    int off1 = sizes[0];
    int off2 = off1 + sizes[1];
    Vertex u = n - 1;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex v = 0; v < off1; ++v) {
        rows[static_cast<std::size_t>(v)].set_range(off1, off2); // V1 -> V2
        rows[static_cast<std::size_t>(v)].set(u);                // V1 -> u
    }
    for (Vertex v = off1; v < off2; ++v)
        rows[static_cast<std::size_t>(v)].set_range(off2, u); // V2 -> V3
    for (Vertex v = off2; v < u; ++v)
        rows[static_cast<std::size_t>(v)].set_range(0, off1); // V3 -> V1
    rows[static_cast<std::size_t>(u)].set_range(off1, off2);  // u -> V2
    return GraphWithVertex{OrientedGraph::from_adjacency(std::move(rows), Mode::oriented), u};
}

GraphWithVertex extremal_3cycle_vertex(int m) {
    if (m < 2) throw Error(Errc::bad_params, "need m >= 2");
    const int a = 2 * m - 1; // |A| = |B|
    const int c = m;         // |C|
    const int n = 5 * m - 1;
    const Vertex a_lo = 0, b_lo = a, c_lo = 2 * a, u = 2 * a + c;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    // complete one-way class edges A->B, B->C, C->A
    for (Vertex v = a_lo; v < b_lo; ++v) rows[static_cast<std::size_t>(v)].set_range(b_lo, c_lo);
    for (Vertex v = b_lo; v < c_lo; ++v) rows[static_cast<std::size_t>(v)].set_range(c_lo, u);
    for (Vertex v = c_lo; v < u; ++v) rows[static_cast<std::size_t>(v)].set_range(a_lo, b_lo);
    // rotational tournaments inside A and B (order 2m-1 is odd)
    for (int base : {a_lo, b_lo}) {
        for (int i = 0; i < a; ++i)
            for (int j = 1; j <= (a - 1) / 2; ++j)
                rows[static_cast<std::size_t>(base + i)].set(base + (i + j) % a);
    }
    // u: out to all of B, in from all of A
    rows[static_cast<std::size_t>(u)].set_range(b_lo, c_lo);
    for (Vertex v = a_lo; v < b_lo; ++v) rows[static_cast<std::size_t>(v)].set(u);
    return GraphWithVertex{OrientedGraph::from_adjacency(std::move(rows), Mode::oriented), u};
}

OrientedGraph rotational_tournament(int n) {
    if (n < 3 || n % 2 == 0) throw Error(Errc::even_order, "order must be odd and >= 3");
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= (n - 1) / 2; ++j) rows[static_cast<std::size_t>(i)].set((i + j) % n);
    return OrientedGraph::from_adjacency(std::move(rows), Mode::oriented);
}

OrientedGraph butterfly_gadget() {
    return OrientedGraph::from_edge_list(
        5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}, Mode::oriented);
}

OrientedGraph complete_bipartite_digraph(int n) {
    if (n < 2) throw Error(Errc::bad_params, "need n >= 2");
    const int big = (n + 1) / 2;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex v = 0; v < big; ++v) rows[static_cast<std::size_t>(v)].set_range(big, n);
    for (Vertex v = big; v < n; ++v) rows[static_cast<std::size_t>(v)].set_range(0, big);
    return OrientedGraph::from_adjacency(std::move(rows), Mode::general_digraph);
}

OrientedGraph random_degree_conditioned(int n, double target_semi, std::uint64_t seed) {
    if (n < 3 || target_semi <= 0.0 || target_semi > 0.5)
        throw Error(Errc::bad_params, "need n >= 3 and 0 < target_semi <= 1/2");
    if (target_semi * n > (n - 1) / 2.0) throw Error(Errc::infeasible, "semidegree above oriented cap");
    // smallest integer >= target_semi * n, with a guard against float dust
    const int d = static_cast<int>(std::ceil(target_semi * n - 1e-9));
    if (2 * d > n - 1) throw Error(Errc::infeasible, "semidegree above oriented cap");

    // Backbone: circulant with d offsets, one chosen at random from each pair
    // {j, n-j}. Offsets from distinct pairs never form an antiparallel edge.
    SplitRng offs_rng(seed, 0);
    std::vector<int> pairs;
    for (int j = 1; j < n - j; ++j) pairs.push_back(j);
    // shuffle pair order, pick d of them
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[offs_rng.below(i)]);
    std::vector<int> offsets;
    for (int i = 0; i < d; ++i) {
        int j = pairs[static_cast<std::size_t>(i)];
        offsets.push_back(offs_rng.coin() ? j : n - j);
    }

    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
        for (int j : offsets) rows[static_cast<std::size_t>(i)].set((i + j) % n);

    // Augmentation: each still-empty unordered pair gets an edge with
    // probability p, direction by coin. Degrees only grow.
    SplitRng aug_rng(seed, 1);
    const double p = 0.05 + 0.25 * SplitRng(seed, 2).unit();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rows[static_cast<std::size_t>(u)].test(v) || rows[static_cast<std::size_t>(v)].test(u))
                continue;
            if (aug_rng.unit() < p) {
                if (aug_rng.coin())
                    rows[static_cast<std::size_t>(u)].set(v);
                else
                    rows[static_cast<std::size_t>(v)].set(u);
            }
        }
    }

    // Random relabeling so class structure is not positional.
    SplitRng perm_rng(seed, 3);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[perm_rng.below(i)]);
    std::vector<VertexSet> relabeled(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : rows[static_cast<std::size_t>(u)])
            relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])].set(
                perm[static_cast<std::size_t>(v)]);
    return OrientedGraph::from_adjacency(std::move(relabeled), Mode::oriented);
}

} // namespace orcycle
