#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/core.hpp"
#include "disclab/types.hpp"

namespace disclab {

// Boolean-cube conventions, fixed across all modules and file formats:
// a point u in {0,1}^d is indexed by its binary value with the first
// coordinate as the most significant bit, so the label of index i is
// just i written as a d-digit binary string.

std::string cube_label(std::uint32_t u, int d);

// A subcube pattern: string over {0,1,*}; '*' coordinates are free.
struct CubePattern {
    std::string symbols;

    CubePattern() = default;
    explicit CubePattern(std::string s);

    int dim() const { return static_cast<int>(symbols.size()); }
    int stars() const;
    bool contains(std::uint32_t u) const;
};

// Rank of a pattern in base-3 reading order with digit values 0<1<*.
std::uint64_t pattern_rank(const CubePattern& p);
CubePattern pattern_from_rank(int d, std::uint64_t rank);

// Index of a weight-k character row: v as a bit vector (same MSB
// convention as points).
struct CharacterIndex {
    int d = 0;
    std::uint32_t v = 0;

    CharacterIndex() = default;
    CharacterIndex(int d_, std::uint32_t v_);

    int weight() const;
};

// chi_v(u) = (-1)^{<v,u>} over F_2.
inline int character_value(std::uint32_t v, std::uint32_t u) {
    return (std::popcount(v & u) & 1) ? -1 : +1;
}

// Prime-product embedding of the d-cube into integers: point u maps to
// b_u = prod_i p_{i,u_i}, pattern v maps to a_v = prod_{v_i != *} p_{i,v_i},
// where p_{1,0} < p_{1,1} < ... < p_{d,1} are the first 2d primes.
// Divisibility a_v | b_u holds exactly when u lies in the subcube of v.
struct EmbeddingWitness {
    int d = 0;
    std::vector<BigInt> primes;  // 2d primes, increasing
    std::vector<BigInt> b_of_u;  // indexed by point, 2^d entries
    std::vector<BigInt> a_of_v;  // indexed by pattern rank, 3^d entries
    BigInt n;                    // max of b_of_u

    void validate() const;
};

// All 3^d subcube sets over the 2^d cube, in pattern rank order.
SetSystem gen_subcubes(int d);

// All weight-k characters of {0,1}^d as rows, v ascending as integer.
SignMatrix gen_characters(int d, int k);

// Homogeneous arithmetic progressions over [n]. Prefix mode has one set
// {a,2a,...,ka} per (a,k); multiples mode keeps only k = floor(n/a).
SetSystem gen_hap(long long n, HapMode mode);

// 2^m x 2^m Sylvester-Hadamard matrix, H[i][j] = (-1)^{popcount(i&j)}.
SignMatrix gen_sylvester(int m);

EmbeddingWitness gen_embedding(int d);

// First `count` primes by doubling a sieve of Eratosthenes bound.
std::vector<std::uint64_t> first_primes(int count);

// Pattern that pins v's one-coordinates to the bits of w (w given in the
// same MSB-first convention, width = weight of v) and stars the rest.
CubePattern extend_pattern(const CharacterIndex& v, std::uint32_t w);

// The member of the pattern's subcube with zeros at starred positions.
std::uint32_t representative(const CubePattern& p);

} // namespace disclab
