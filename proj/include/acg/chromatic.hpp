#pragma once

// The theorem engine: every chromatic-number formula and decision procedure
// for Heuberger matrices of rank <= 2, each answer carrying a certificate
// naming the decision path so it can be re-checked independently.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "acg/int.hpp"
#include "acg/int_matrix.hpp"
#include "acg/moves.hpp"

namespace acg {

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

// --- certificate leaves -----------------------------------------------------

struct BipartiteCert {
    std::vector<BigInt> column_sums;  // of the matrix the claim is about
};

struct TomatoCageCert {
    std::size_t odd_entry_count = 0;
};

struct OneRowGcdCert {
    BigInt e;
};

struct CirculantCert {
    int case_id = 0;  // 1..5, the five formula cases top-down
    BigInt n, a, b;
};

struct TwoByTwoCert {
    int case_id = 0;  // 1..4
    IntMatrix triangular;
    BigInt d, e;
    std::optional<BigInt> q;                  // case 4
    std::optional<CirculantCert> circulant;   // case 4
};

struct LShapedCert {
    int case_id = 0;  // 1..4
    IntMatrix matrix;
};

struct FamilyMatch {
    int family_id = 0;  // 1..6
    int sign = 0;       // families 1-2: sign of the +-3k entry; 0 otherwise
    std::optional<BigInt> k;
    std::optional<BigInt> b;
    std::optional<BigInt> a;
};

struct ThreeByTwoCert {
    int case_id = 0;  // 2, 3 or 4 (case 1 is the loop case, reported as Uncolorable)
    IntMatrix mhnf;
    IntMatrix P;  // 3x3 signed permutation, mhnf = P * input * U
    IntMatrix U;  // 2x2 unimodular
    std::optional<FamilyMatch> family;  // case 3
};

struct FourByTwoCert {
    IntMatrix P;  // 4x4 signed permutation
    IntMatrix U;  // 2x2 unimodular; P*M*U = rows (1,a),(1,b),(1,c),(0,1)
    BigInt a, b, c;
};

struct FourByTwoNegativeCert {};  // all 384 signed permutations exhausted

struct MainTheoremCert {
    std::size_t m = 0;
};

struct ZeroRowReductionCert {
    std::vector<std::size_t> removed_rows;  // 0-based rows of the outer matrix
    CertPtr inner;                          // null only for the all-zero matrix
};

struct DependentColumnReductionCert {
    IntMatrix reduced;  // same column lattice, independent columns
    CertPtr inner;
};

struct Certificate {
    std::variant<BipartiteCert, TomatoCageCert, OneRowGcdCert, CirculantCert, TwoByTwoCert,
                 LShapedCert, ThreeByTwoCert, FourByTwoCert, FourByTwoNegativeCert,
                 MainTheoremCert, ZeroRowReductionCert, DependentColumnReductionCert>
        node;
};

CertPtr make_certificate(Certificate c);

// --- results ----------------------------------------------------------------

struct ChromaticResult {
    bool uncolorable = false;
    LoopWitness<BigInt> loop;  // valid when uncolorable
    int k = 0;                 // valid otherwise
    CertPtr certificate;       // valid otherwise
};

ChromaticResult make_uncolorable(LoopWitness<BigInt> w);
ChromaticResult make_chi(int k, Certificate cert);

// Dispatcher outcome: an exact answer for rank <= 2, or the unsupported-exact
// marker for lattices of rank >= 3 (bounds are the caller's business).
struct ChiOutcome {
    bool unsupported_exact = false;
    std::size_t lattice_rank = 0;
    std::optional<ChromaticResult> result;  // present iff !unsupported_exact
};

// --- operations -------------------------------------------------------------

struct CirculantParams {
    BigInt n, a, b;
};

// Empty when the Heuberger-circulant invariants hold, else the reason.
std::optional<std::string> circulant_violation(const CirculantParams& p);

ChromaticResult chi_one_row(const IntMatrix& M);     // 1 x r, not all zero
ChromaticResult chi_one_column(const IntMatrix& M);  // m x 1, nonzero
ChromaticResult chi_circulant(const CirculantParams& p);

struct Triangular2x2 {
    IntMatrix matrix;  // lower triangular, nonnegative diagonal
    IntMatrix U;       // input * U = matrix
};
Triangular2x2 triangularize_2x2(const IntMatrix& M);

ChromaticResult chi_2x2(const IntMatrix& M);

// 3x2 in L-shape: y12 = y22 = 0, y11, y21, y32 > 0, -y32/2 <= y31 <= 0.
ChromaticResult chi_l_shaped(const IntMatrix& M);

bool is_mhnf(const IntMatrix& M);

struct MhnfForm {
    IntMatrix matrix;  // passes is_mhnf
    IntMatrix P;       // 3x3 signed permutation
    IntMatrix U;       // 2x2 unimodular; matrix = P * input * U
};
MhnfForm to_mhnf(const IntMatrix& M);  // 3x2, no zero rows, rank 2

std::optional<FamilyMatch> match_exceptional_family(const IntMatrix& mhnf);

ChromaticResult chi_3x2(const IntMatrix& M);  // 3x2, no zero rows

// Marker that some row is divisible by 3 (then chi <= 3 for loop-free
// no-zero-row 3x2 and 4x2 matrices); 0-based row index.
std::optional<std::size_t> three_div_row_bound(const IntMatrix& M);

ChromaticResult chi_4x2(const IntMatrix& M);  // no zero rows, loop-free, not bipartite

ChromaticResult chi_mx2_main(const IntMatrix& M);  // m >= 5 rows, same preconditions

ChiOutcome chi(const IntMatrix& M);

}  // namespace acg
