#include "forge/hypergraph.hpp"

#include "forge/caps.hpp"

#include <algorithm>
#include <set>

namespace forge {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    require(bound >= 1, "SplitMix64::below: bound must be >= 1");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

void Hypergraph::validate() const {
    require(n_vertices >= 1, "Hypergraph: need at least one vertex");
    require(arity >= 1, "Hypergraph: arity must be >= 1");
    require(!edges.empty(), "Hypergraph: need at least one edge");
    require(arity <= n_vertices, "Hypergraph: arity exceeds vertex count");
    for (const auto& e : edges) {
        require(e.size() == arity, "Hypergraph: edge arity mismatch");
        for (std::size_t i = 0; i < e.size(); ++i) {
            require(e[i] >= 1 && e[i] <= n_vertices,
                    "Hypergraph: vertex id out of range");
            require(i == 0 || e[i - 1] < e[i],
                    "Hypergraph: edge vertices must be sorted and distinct");
        }
    }
}

void QRDHParams::validate() const {
    require(r >= 1, "QRDHParams: r must be >= 1");
    require(alpha >= 0 && alpha <= 1, "QRDHParams: alpha must be in [0, 1]");
    require(beta >= 0 && beta <= 1, "QRDHParams: beta must be in [0, 1]");
}

IntMatrix indicator_matrix(const Hypergraph& h) {
    h.validate();
    IntMatrix p(h.edge_count(), h.n_vertices);
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (std::size_t v : h.edges[e]) p.at(e, v - 1) = 1;
    return p;
}

namespace {

std::uint64_t edge_mask(const std::vector<std::size_t>& edge) {
    std::uint64_t m = 0;
    for (std::size_t v : edge) m |= std::uint64_t{1} << (v - 1);
    return m;
}

} // namespace

std::size_t contained_edges(const Hypergraph& h, std::uint64_t vertex_mask) {
    std::size_t count = 0;
    for (const auto& e : h.edges)
        if ((edge_mask(e) & ~vertex_mask) == 0) ++count;
    return count;
}

std::size_t contained_edges(const Hypergraph& h,
                            const std::vector<std::size_t>& vertices) {
    std::uint64_t mask = 0;
    for (std::size_t v : vertices) {
        require(v >= 1 && v <= h.n_vertices,
                "contained_edges: vertex out of range");
        mask |= std::uint64_t{1} << (v - 1);
    }
    return contained_edges(h, mask);
}

Case2Result qrdh_case2_holds(const Hypergraph& h, const Rat& beta,
                             std::uint64_t max_vertices) {
    h.validate();
    require(beta >= 0 && beta <= 1, "qrdh_case2_holds: beta must be in [0,1]");
    if (max_vertices == 0) max_vertices = Caps::current().subset_vertices;
    require_cap(h.n_vertices <= max_vertices,
                "qrdh_case2_holds: 2^N sweep above vertex cap");

    const std::size_t n = h.n_vertices;
    const std::size_t m = h.edge_count();
    const std::size_t d = h.arity;
    std::vector<std::uint64_t> masks(m);
    for (std::size_t e = 0; e < m; ++e) masks[e] = edge_mask(h.edges[e]);

    // bound(k) = (k/N)^d M + beta M, exact.
    std::vector<Rat> bound(n + 1);
    const Rat nd = boost::multiprecision::pow(Rat(n), static_cast<unsigned>(d));
    for (std::size_t k = 0; k <= n; ++k) {
        const Rat kd =
            boost::multiprecision::pow(Rat(k), static_cast<unsigned>(d));
        bound[k] = kd / nd * m + beta * m;
    }

    Case2Result res;
    res.holds = true;
    bool have_witness = false;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        std::size_t contained = 0;
        for (std::size_t e = 0; e < m; ++e)
            if ((masks[e] & ~sub) == 0) ++contained;
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(sub));
        const Rat margin = Rat(contained) - bound[k];
        if (margin > 0) res.holds = false;
        if (!have_witness || margin > res.witness_margin ||
            (margin == res.witness_margin && sub < res.witness_mask)) {
            res.witness_mask = sub;
            res.witness_margin = margin;
            have_witness = true;
        }
    }
    return res;
}

std::size_t min_touched_vertices(const Hypergraph& h, std::size_t h_edges,
                                 std::uint64_t max_combinations) {
    h.validate();
    const std::size_t m = h.edge_count();
    require(h_edges >= 1 && h_edges <= m,
            "min_touched_vertices: subset size out of range");
    if (max_combinations == 0)
        max_combinations = Caps::current().edge_combinations;

    Rat combos = 1;
    for (std::size_t i = 0; i < h_edges; ++i)
        combos = combos * (m - i) / (i + 1);
    require_cap(combos <= Rat(max_combinations),
                "min_touched_vertices: C(M,h) above combination cap");

    std::vector<std::uint64_t> masks(m);
    for (std::size_t e = 0; e < m; ++e) masks[e] = edge_mask(h.edges[e]);

    std::size_t best = h.n_vertices + 1;
    std::vector<std::size_t> pick(h_edges);
    // Plain lexicographic combination walk.
    for (std::size_t i = 0; i < h_edges; ++i) pick[i] = i;
    for (;;) {
        std::uint64_t u = 0;
        for (std::size_t i : pick) u |= masks[i];
        best = std::min<std::size_t>(
            best, static_cast<std::size_t>(__builtin_popcountll(u)));
        std::size_t i = h_edges;
        while (i > 0 && pick[i - 1] == m - h_edges + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < h_edges; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

Hypergraph duplicate_edges(const Hypergraph& h, std::size_t factor) {
    h.validate();
    require(factor >= 1, "duplicate_edges: factor must be >= 1");
    Hypergraph out;
    out.n_vertices = h.n_vertices;
    out.arity = h.arity;
    out.edges.reserve(h.edge_count() * factor);
    for (const auto& e : h.edges)
        for (std::size_t c = 0; c < factor; ++c) out.edges.push_back(e);
    return out;
}

namespace {

std::vector<std::size_t> random_edge(SplitMix64& rng, std::size_t d,
                                     const std::vector<std::size_t>& pool) {
    // Partial Fisher-Yates over a copy of the pool.
    std::vector<std::size_t> p = pool;
    std::vector<std::size_t> e(d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t j = i + rng.below(p.size() - i);
        std::swap(p[i], p[j]);
        e[i] = p[i];
    }
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

PlantedInstance gen_planted(std::size_t n, std::size_t m, std::size_t d,
                            const Rat& r, const Rat& alpha,
                            std::uint64_t seed) {
    require(n >= 1 && m >= 1 && d >= 1 && d <= n, "gen_planted: bad sizes");
    require(r >= 1, "gen_planted: r must be >= 1");
    require(alpha >= 0 && alpha <= 1, "gen_planted: alpha must be in [0, 1]");

    // plant size floor(N/r); required edge count ceil(alpha (1/r)^(d-1) M).
    const Rat plant_size_r = Rat(n) / r;
    const std::size_t plant_size = static_cast<std::size_t>(
        Int(numerator(plant_size_r) / denominator(plant_size_r)));
    const Rat density =
        alpha * boost::multiprecision::pow(1 / r, static_cast<unsigned>(d - 1));
    Rat need_r = density * m;
    Int need_i = numerator(need_r) / denominator(need_r);
    if (need_i * denominator(need_r) != numerator(need_r)) ++need_i;
    const std::size_t need = static_cast<std::size_t>(need_i);

    require(plant_size >= d || need == 0,
            "gen_planted: plant too small to host an arity-d edge");
    require(need <= m, "gen_planted: required planted edges exceed M");

    SplitMix64 rng(seed);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;

    PlantedInstance out;
    out.hypergraph.n_vertices = n;
    out.hypergraph.arity = d;

    std::vector<std::size_t> plant(all.begin(),
                                   all.begin() + static_cast<long>(plant_size));
    out.planted_vertices = plant;

    for (std::size_t e = 0; e < m; ++e) {
        if (e < need) {
            out.hypergraph.edges.push_back(random_edge(rng, d, plant));
            out.planted_edge_ids.push_back(e);
        } else {
            out.hypergraph.edges.push_back(random_edge(rng, d, all));
        }
    }
    out.hypergraph.validate();

    // The certificate must actually verify; random tail edges may also
    // land inside the plant, which only helps.
    require(contained_edges(out.hypergraph, out.planted_vertices) >= need,
            "gen_planted: certificate failed self-check");
    return out;
}

ExpandingInstance gen_expanding(std::size_t n, std::size_t m, std::size_t d,
                                const Rat& beta, std::uint64_t seed,
                                std::size_t max_tries) {
    require(n >= 1 && m >= 1 && d >= 1 && d <= n, "gen_expanding: bad sizes");
    require(max_tries >= 1, "gen_expanding: max_tries must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;

    for (std::size_t attempt = 1; attempt <= max_tries; ++attempt) {
        Hypergraph h;
        h.n_vertices = n;
        h.arity = d;
        for (std::size_t e = 0; e < m; ++e)
            h.edges.push_back(random_edge(rng, d, all));
        if (qrdh_case2_holds(h, beta).holds)
            return ExpandingInstance{std::move(h), attempt};
    }
    throw GenError("gen_expanding: no certified draw in " +
                   std::to_string(max_tries) + " tries");
}

} // namespace forge
