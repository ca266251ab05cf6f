#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/types.hpp"

namespace disclab {

struct ExactResult {
    long long value = 0;
    std::optional<Coloring> witness_coloring; // for disc
    std::optional<Bitset> witness_subset;     // for herdisc
    unsigned long long nodes_explored = 0;
};

inline constexpr std::size_t kDiscColsCap = 30;
inline constexpr int kHerdiscGroundCap = 16;
inline constexpr std::size_t kDetDimCap = 64;
inline constexpr unsigned long long kExhaustiveSubsetCap = 100000000ULL; // 1e8

// Exact minimum of ||Ax||_inf over all 2^cols colorings by canonical
// branch and bound: columns ordered by decreasing support (ties by
// index), +1 branch first, prune a node when some row already satisfies
// |partial sum| - |unassigned incident columns| >= best. The witness is
// the first optimal coloring in that DFS order.
ExactResult disc_exact(const SignMatrix& matrix);

// Exact hereditary discrepancy: max of disc over all 2^ground column
// subsets, enumerated in increasing subset-as-integer order; stops early
// if the running max hits the max row support. Witness is the smallest
// attaining subset.
ExactResult herdisc_exact(const SignMatrix& matrix, int cap = kHerdiscGroundCap);
ExactResult herdisc_exact(const SetSystem& system, int cap = kHerdiscGroundCap);

// Exact determinant by fraction-free Bareiss elimination. Entries may be
// arbitrary integers (Gram matrices included), dimension <= 64.
BigInt det_exact(const std::vector<std::vector<BigInt>>& square);
BigInt det_exact(const SignMatrix& square);

// Determinant of the column submatrix matrix[:, cols] (|cols| == rows).
BigInt det_of_columns(const SignMatrix& matrix, const std::vector<int>& cols);

enum class SubsetStrategy { Exhaustive, RandomSwap };

SubsetStrategy subset_strategy_from_string(const std::string& s);

struct MaxDetResult {
    std::vector<int> cols;       // ascending column indices, size = rows
    BigInt det;                  // exact determinant of the chosen submatrix
    bool met_threshold = false;  // |det|^{1/M} >= threshold
    unsigned long long evals = 0;
    int restarts_used = 0;
};

inline constexpr int kRandomSwapRestarts = 200;

// Search for an M-column subset with large |det| (M = row count).
// Exhaustive scans all C(N,M) subsets in lexicographic order and returns
// the first maximizer; random-swap runs seeded greedy single-column
// swap hill climbs (splitmix64 stream, restart budget, first-improving
// restart stops early). An unmet threshold is reported, not thrown.
MaxDetResult find_large_det_subset(const SignMatrix& matrix, SubsetStrategy strategy,
                                   std::uint64_t seed, double threshold,
                                   int restarts = kRandomSwapRestarts);

} // namespace disclab
