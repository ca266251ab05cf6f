#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "disclab/bitset.hpp"

namespace disclab {

// A parameter exceeded an enforced size cap (exit code 3 at the CLI).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a documented invariant.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ground sizes are capped so row sums always fit machine integers.
inline constexpr std::size_t kMaxGround = std::size_t(1) << 20;

// ±1 assignment over a ground set.
struct Coloring {
    std::vector<std::int8_t> values;

    Coloring() = default;
    explicit Coloring(std::vector<std::int8_t> v) : values(std::move(v)) { validate(); }

    static Coloring all_ones(std::size_t n) {
        Coloring c;
        c.values.assign(n, 1);
        return c;
    }

    std::size_t size() const { return values.size(); }

    void validate() const {
        for (std::int8_t v : values)
            if (v != 1 && v != -1)
                throw InvariantViolation("coloring entries must be +1 or -1");
    }
};

// Dense matrix with entries in {-1, 0, +1}, optionally labeled.
struct SignMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int8_t> entries; // row-major
    std::vector<std::string> row_labels; // empty or size rows
    std::vector<std::string> col_labels; // empty or size cols

    SignMatrix() = default;
    SignMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

    std::int8_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    std::int8_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

    void validate() const {
        if (entries.size() != rows * cols)
            throw InvariantViolation("sign matrix entry count does not match rows*cols");
        for (std::int8_t e : entries)
            if (e < -1 || e > 1)
                throw InvariantViolation("sign matrix entries must be in {-1,0,1}");
        if (!row_labels.empty() && row_labels.size() != rows)
            throw InvariantViolation("row label count does not match rows");
        if (!col_labels.empty() && col_labels.size() != cols)
            throw InvariantViolation("col label count does not match cols");
    }
};

// Ground elements plus named member sets as bitsets over ground indices.
struct SetSystem {
    std::vector<std::string> ground;
    std::vector<std::string> set_names;
    std::vector<Bitset> sets;

    std::size_t ground_size() const { return ground.size(); }
    std::size_t set_count() const { return sets.size(); }

    void validate() const;
};

struct DiscrepancyReport {
    long long value = 0;
    long long argmax_row = -1; // -1 when there are no rows
    std::optional<std::vector<long long>> per_row;
};

} // namespace disclab
