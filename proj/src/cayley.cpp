#include "acg/cayley.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "acg/normal_form.hpp"

namespace acg {

namespace {

void finalize_adjacency(SimpleGraph& g) {
    for (std::size_t v = 0; v < g.n; ++v) {
        auto& row = g.adj[v];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        auto self = std::find(row.begin(), row.end(), v);
        if (self != row.end()) {
            row.erase(self);
            g.loop[v] = true;
        }
    }
}

}  // namespace

QuotientGroupResult quotient_group(const IntMatrix& M) {
    QuotientGroupResult out;
    const std::size_t m = M.rows();
    if (M.cols() == 0) {
        out.finite = m == 0;
        out.free_rank = m;
        return out;
    }
    SmithForm<BigInt> sf = smith_normal_form(M);
    if (sf.rank < m) {
        out.finite = false;
        out.free_rank = m - sf.rank;
        return out;
    }
    out.finite = true;
    out.group.factors = sf.invariant_factors;
    // L * M * R = D, so x |-> L x mod (d_1..d_m) is the quotient isomorphism;
    // the image of e_i is column i of L.
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<BigInt> img(m);
        for (std::size_t k = 0; k < m; ++k)
            img[k] = mod_floor(sf.L.at(k, i), sf.invariant_factors[k]);
        out.group.generator_images.push_back(img);
    }
    return out;
}

FiniteCayleyGraph graph_from_group(const FiniteAbelianGroup& group, std::size_t vertex_cap) {
    BigInt order = group.order();
    if (order > BigInt(static_cast<long long>(vertex_cap)))
        throw BudgetExceededError("group order " + to_decimal(order) + " exceeds vertex cap " +
                                  std::to_string(vertex_cap));
    const std::size_t n = static_cast<std::size_t>(to_int64(order));
    const std::size_t k = group.factors.size();

    // The cap keeps the order (and so every factor and residue) in int64
    // territory; work in plain integers for speed.
    std::vector<long long> factors(k);
    for (std::size_t i = 0; i < k; ++i) factors[i] = to_int64(group.factors[i]);
    std::vector<std::vector<long long>> gens;
    for (const auto& g : group.generator_images) {
        std::vector<long long> gi(k);
        for (std::size_t i = 0; i < k; ++i) gi[i] = to_int64(mod_floor(g[i], group.factors[i]));
        gens.push_back(gi);
    }

    FiniteCayleyGraph out;
    out.group = group;
    out.graph.n = n;
    out.graph.adj.assign(n, {});
    out.graph.loop.assign(n, false);
    std::vector<long long> tuple(k);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t rest = v;
        for (std::size_t i = 0; i < k; ++i) {
            tuple[i] = static_cast<long long>(rest) % factors[i];
            rest /= static_cast<std::size_t>(factors[i]);
        }
        for (const auto& g : gens) {
            for (int s : {1, -1}) {
                std::size_t idx = 0;
                for (std::size_t i = k; i > 0; --i) {
                    long long c = tuple[i - 1] + s * g[i - 1];
                    if (c >= factors[i - 1]) c -= factors[i - 1];
                    if (c < 0) c += factors[i - 1];
                    idx = idx * static_cast<std::size_t>(factors[i - 1]) +
                          static_cast<std::size_t>(c);
                }
                out.graph.adj[v].push_back(idx);
            }
        }
    }
    finalize_adjacency(out.graph);
    return out;
}

FiniteCayleyGraph finite_quotient_graph(const IntMatrix& M, const BigInt& N,
                                        std::size_t vertex_cap) {
    if (N < BigInt(2)) throw std::invalid_argument("quotient modulus must be >= 2");
    const std::size_t m = M.rows();
    const std::size_t r = M.cols();
    IntMatrix ext(m, r + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) ext.at(i, j) = M.at(i, j);
        ext.at(i, r + i) = N;
    }
    QuotientGroupResult q = quotient_group(ext);
    if (!q.finite) throw std::logic_error("quotient by N Z^m must be finite");
    // The extension appended columns only; generator images beyond e_1..e_m
    // do not exist (images are per row index), so q.group is directly usable.
    return graph_from_group(q.group, vertex_cap);
}

FiniteCayleyGraph circulant_graph(const BigInt& n, const BigInt& a, const BigInt& b,
                                  std::size_t vertex_cap) {
    if (n == 0) throw std::invalid_argument("circulant modulus is zero");
    if (gcd_val(gcd_val(a, b), n) != BigInt(1))
        throw std::invalid_argument("disconnected circulant: gcd(a, b, n) != 1");
    if (divides(n, a) || divides(n, b))
        throw std::invalid_argument("circulant has loops: n divides a generator");
    FiniteAbelianGroup group;
    BigInt an = abs_val(n);
    group.factors = {an};
    group.generator_images = {{mod_floor(a, an)}, {mod_floor(b, an)}};
    return graph_from_group(group, vertex_cap);
}

BallGraph ball(const IntMatrix& M, std::size_t R, std::size_t vertex_cap) {
    HermiteBasis<BigInt> hb = column_hnf(M);
    const std::size_t m = M.rows();

    BallGraph out;
    out.radius = R;
    std::map<std::vector<BigInt>, std::size_t> index;
    std::vector<BigInt> origin = canonical_coset_rep(hb, std::vector<BigInt>(m, BigInt(0)));
    index.emplace(origin, 0);
    out.reps.push_back(origin);
    out.dist.push_back(0);

    std::size_t frontier_begin = 0;
    for (std::size_t d = 0; d < R; ++d) {
        std::size_t frontier_end = out.reps.size();
        for (std::size_t v = frontier_begin; v < frontier_end; ++v) {
            for (std::size_t i = 0; i < m; ++i) {
                for (int s : {1, -1}) {
                    std::vector<BigInt> w = out.reps[v];
                    w[i] += BigInt(s);
                    w = canonical_coset_rep(hb, std::move(w));
                    if (index.count(w)) continue;
                    if (out.reps.size() >= vertex_cap)
                        throw BudgetExceededError("ball exceeds vertex cap " +
                                                  std::to_string(vertex_cap));
                    index.emplace(w, out.reps.size());
                    out.reps.push_back(w);
                    out.dist.push_back(d + 1);
                }
            }
        }
        frontier_begin = frontier_end;
        if (frontier_begin == out.reps.size()) break;  // graph exhausted early
    }

    out.graph.n = out.reps.size();
    out.graph.adj.assign(out.graph.n, {});
    out.graph.loop.assign(out.graph.n, false);
    for (std::size_t v = 0; v < out.graph.n; ++v) {
        for (std::size_t i = 0; i < m; ++i) {
            for (int s : {1, -1}) {
                std::vector<BigInt> w = out.reps[v];
                w[i] += BigInt(s);
                w = canonical_coset_rep(hb, std::move(w));
                auto it = index.find(w);
                if (it != index.end()) out.graph.adj[v].push_back(it->second);
            }
        }
    }
    finalize_adjacency(out.graph);
    return out;
}

void write_edge_list(const SimpleGraph& g, std::ostream& os) {
    os << g.n << "\n";
    for (std::size_t u = 0; u < g.n; ++u) {
        if (g.loop[u]) os << u << " " << u << "\n";
        for (std::size_t v : g.adj[u])
            if (u <= v) os << u << " " << v << "\n";
    }
}

}  // namespace acg
