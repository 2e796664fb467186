#pragma once

// Finite graphs from a Heuberger matrix: the full Cayley graph when Z^m/H is
// finite, finite quotients Z^m/(H + N Z^m) and distance balls when it is not.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "acg/int.hpp"
#include "acg/int_matrix.hpp"

namespace acg {

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kBallVertexCap = 20000;
inline constexpr std::size_t kQuotientVertexCap = 250000;

// Undirected simple graph plus per-vertex loop flags.  Neighbor lists are
// sorted, duplicate-free, and never contain the vertex itself (self-adjacency
// is recorded in `loop`).
struct SimpleGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<bool> loop;

    bool has_loop() const {
        for (bool b : loop)
            if (b) return true;
        return false;
    }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& row : adj) twice += row.size();
        return twice / 2;
    }
};

// Z^m/H presented by invariant factors; elements are residue tuples indexed
// in mixed radix (first coordinate fastest).
struct FiniteAbelianGroup {
    std::vector<BigInt> factors;                    // each >= 1
    std::vector<std::vector<BigInt>> generator_images;  // image of e_1..e_m

    BigInt order() const {
        BigInt o(1);
        for (const BigInt& d : factors) o *= d;
        return o;
    }
};

struct FiniteCayleyGraph {
    FiniteAbelianGroup group;
    SimpleGraph graph;
};

struct QuotientGroupResult {
    bool finite = false;
    std::size_t free_rank = 0;     // valid when !finite
    FiniteAbelianGroup group;      // valid when finite
};

struct BallGraph {
    SimpleGraph graph;
    std::size_t radius = 0;
    std::vector<std::vector<BigInt>> reps;  // canonical coset representatives
    std::vector<std::size_t> dist;          // BFS distance from the identity
};

// Z^m / column-lattice(M): finite group via the Smith form when the lattice
// has full rank, otherwise the free rank of the quotient.
QuotientGroupResult quotient_group(const IntMatrix& M);

// Cayley graph of a finite group; errors when the order exceeds vertex_cap.
FiniteCayleyGraph graph_from_group(const FiniteAbelianGroup& group,
                                   std::size_t vertex_cap = kQuotientVertexCap);

// Graph of Z^m/(H + N Z^m), the quotient that bounds chi(X) from above.
FiniteCayleyGraph finite_quotient_graph(const IntMatrix& M, const BigInt& N,
                                        std::size_t vertex_cap = kQuotientVertexCap);

// Cay(Z_|n|, {+-a, +-b}); preconditions of a Heuberger circulant enforced.
FiniteCayleyGraph circulant_graph(const BigInt& n, const BigInt& a, const BigInt& b,
                                  std::size_t vertex_cap = kQuotientVertexCap);

// Induced subgraph on all cosets within BFS distance R of the identity.
BallGraph ball(const IntMatrix& M, std::size_t R, std::size_t vertex_cap = kBallVertexCap);

// "n" then one "u v" line per edge (u <= v), loops as "u u", 0-indexed.
void write_edge_list(const SimpleGraph& g, std::ostream& os);

}  // namespace acg
