#pragma once

#include <cstdint>
#include <optional>

#include "disclab/types.hpp"

namespace disclab {

struct HeuristicOutcome {
    Coloring coloring;
    long long achieved = 0; // max |row sum| of the returned coloring
    std::optional<long long> guarantee;
    unsigned long long iterations = 0;
};

inline constexpr std::size_t kBeckFialaGroundCap = 2000;
inline constexpr std::size_t kBeckFialaSetCap = 20000;

// Beck-Fiala iterative rounding with exact rational colors. t is the
// maximum number of sets containing any element; sets with more than t
// floating elements are active and their sums are held fixed while the
// colors move along an exact kernel vector until a variable freezes at
// +-1. The returned coloring satisfies achieved <= 2t-1; a violation
// throws (it would mean the rounding itself is broken).
HeuristicOutcome beck_fiala(const SetSystem& system);

// f(i) = -1 iff the last nonzero ternary digit of i is 2.
Coloring ternary_coloring(long long n);

inline constexpr long long kTernaryCap = 100000000LL; // 1e8

// Seeded +-1 values from a splitmix64 stream (sign of each draw).
Coloring random_coloring(long long n, std::uint64_t seed);

// Local search: repeatedly apply the single sign flip that most reduces
// max |row sum| (ties by smallest column), until no flip improves or the
// pass budget runs out.
HeuristicOutcome greedy_improve(const SignMatrix& matrix, const Coloring& start,
                                long long max_passes);

} // namespace disclab
