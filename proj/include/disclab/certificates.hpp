#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/exact.hpp"
#include "disclab/generators.hpp"
#include "disclab/types.hpp"

namespace disclab {

// A k x k submatrix witness: herdisc(A) >= bound = |det|^{1/k} / 2.
struct LowerBoundCert {
    int k = 0;
    std::vector<int> row_subset; // ascending, size k
    std::vector<int> col_subset; // ascending, size k
    BigInt det;
    double bound = 0.0;
};

struct CheckReport {
    std::string name;
    bool passed = true;
    std::string detail; // empty when passed
    unsigned long long trials = 0;
};

enum class CertStrategy { Exhaustive, Greedy };

CertStrategy cert_strategy_from_string(const std::string& s);

inline constexpr int kGreedyCertRestarts = 4;

double cert_bound(int k, const BigInt& det);

// Best determinant certificate with order <= kmax. Exhaustive enumerates
// every submatrix (count-capped) in (k, rows, cols) lexicographic order
// and keeps the first maximizer; greedy grows a square index pair by the
// best single row+column addition from seeded random starts.
LowerBoundCert detlb_certificate(const SignMatrix& matrix, int kmax, CertStrategy strategy,
                                 std::uint64_t seed, int restarts = kGreedyCertRestarts);

// Recomputes the certificate's determinant and bound against the matrix.
// Structural defects (k = 0, wrong sizes, out-of-range indices) throw;
// value mismatches come back as a failed report.
CheckReport verify_certificate(const SignMatrix& matrix, const LowerBoundCert& cert);

// Verifies at every point u that chi_v(u) equals the signed sum of the
// 2^|v| extension-pattern indicators, with signs read off the pattern
// representatives.
CheckReport check_char_decomposition(int d, const CharacterIndex& v);

// Embedding checks: (i) a_v | b_u iff u in S_v for all v,u; (ii) every
// nonempty divisor-selected subset of the image is a subcube image
// (full scan of a in [n] for d <= 6, the a_v plus seeded random a
// otherwise); (iii) seeded random (f,U) trials give identical maxima on
// the subcube side and the divisor side.
CheckReport check_embedding(const EmbeddingWitness& witness, int trials, std::uint64_t seed);

inline constexpr int kEmbeddingFullScanCap = 6;
inline constexpr int kEmbeddingSampledDivisors = 10000;

struct TransferCheck {
    CheckReport report;
    // Exact hereditary discrepancies, computed when d <= 4; -1 otherwise.
    long long herdisc_characters = -1;
    long long herdisc_subcubes = -1;
};

// (i) seeded random (f, U, v with |v| = k) trials of the exact identity
// expressing a character row sum over U as a signed combination of 2^k
// subcube sums; (ii) for d <= 4, herdisc(G_{d,k}) <= 2^k herdisc(S^d)
// with both sides computed exactly.
TransferCheck check_transfer(int d, int k, int trials, std::uint64_t seed);

inline constexpr int kTransferIdentityDimCap = 12;
inline constexpr int kTransferHerdiscDimCap = 4;

} // namespace disclab
