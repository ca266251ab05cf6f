#pragma once

#include <string>

#include "disclab/types.hpp"

namespace disclab {

enum class HapMode { Prefix, Multiples };

HapMode hap_mode_from_string(const std::string& s);
std::string to_string(HapMode mode);

// Restriction to the kept ground elements: new ground keeps the original
// order, every set is intersected and reindexed, names are preserved and
// duplicate intersections are not merged.
SetSystem restrict_system(const SetSystem& system, const Bitset& keep);

// 0/1 incidence matrix: one row per set, one column per ground element.
SignMatrix to_matrix(const SetSystem& system);

// ||Ax||_inf for a fixed coloring x, with the smallest attaining row and
// all absolute row sums.
DiscrepancyReport eval_discrepancy(const SignMatrix& matrix, const Coloring& coloring);

// Discrepancy of a coloring against the homogeneous-progression system
// over [n] without materializing it; O(sum_a n/a) time. Matches
// eval_discrepancy on the materialized system exactly, including the
// attaining row index.
DiscrepancyReport hap_disc_stream(long long n, HapMode mode, const Coloring& coloring);

} // namespace disclab
