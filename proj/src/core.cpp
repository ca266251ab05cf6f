#include "disclab/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace disclab {

void SetSystem::validate() const {
    if (ground.size() > kMaxGround)
        throw CapExceeded("ground size exceeds 2^20 elements");
    std::unordered_set<std::string> seen;
    for (const auto& g : ground)
        if (!seen.insert(g).second)
            throw InvariantViolation("duplicate ground label: " + g);
    if (set_names.size() != sets.size())
        throw InvariantViolation("set name count does not match set count");
    seen.clear();
    for (const auto& n : set_names)
        if (!seen.insert(n).second)
            throw InvariantViolation("duplicate set name: " + n);
    for (const auto& s : sets)
        if (s.size() != ground.size())
            throw InvariantViolation("set bitset length does not match ground size");
}

HapMode hap_mode_from_string(const std::string& s) {
    if (s == "prefix") return HapMode::Prefix;
    if (s == "multiples") return HapMode::Multiples;
    throw std::invalid_argument("unknown HAP mode: " + s);
}

std::string to_string(HapMode mode) {
    return mode == HapMode::Prefix ? "prefix" : "multiples";
}

SetSystem restrict_system(const SetSystem& system, const Bitset& keep) {
    if (keep.size() != system.ground_size())
        throw std::invalid_argument("restriction bitset length does not match ground size");

    std::vector<std::size_t> kept = keep.indices();
    SetSystem out;
    out.ground.reserve(kept.size());
    std::vector<std::size_t> new_index(system.ground_size(), 0);
    for (std::size_t j = 0; j < kept.size(); ++j) {
        out.ground.push_back(system.ground[kept[j]]);
        new_index[kept[j]] = j;
    }
    out.set_names = system.set_names;
    out.sets.reserve(system.set_count());
    for (const Bitset& s : system.sets) {
        Bitset r(kept.size());
        s.intersect(keep).for_each([&](std::size_t i) { r.set(new_index[i]); });
        out.sets.push_back(std::move(r));
    }
    return out;
}

SignMatrix to_matrix(const SetSystem& system) {
    SignMatrix m(system.set_count(), system.ground_size());
    for (std::size_t r = 0; r < system.set_count(); ++r)
        system.sets[r].for_each([&](std::size_t c) { m.at(r, c) = 1; });
    m.row_labels = system.set_names;
    m.col_labels = system.ground;
    return m;
}

DiscrepancyReport eval_discrepancy(const SignMatrix& matrix, const Coloring& coloring) {
    if (coloring.size() != matrix.cols)
        throw std::invalid_argument("coloring length does not match column count");
    if (matrix.cols > kMaxGround)
        throw CapExceeded("column count exceeds 2^20");

    DiscrepancyReport rep;
    std::vector<long long> per_row(matrix.rows, 0);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        long long s = 0;
        const std::int8_t* row = matrix.entries.data() + r * matrix.cols;
        for (std::size_t c = 0; c < matrix.cols; ++c)
            s += static_cast<long long>(row[c]) * coloring.values[c];
        per_row[r] = std::llabs(s);
        if (per_row[r] > rep.value) {
            rep.value = per_row[r];
            rep.argmax_row = static_cast<long long>(r);
        }
    }
    if (matrix.rows > 0 && rep.argmax_row < 0) rep.argmax_row = 0;
    rep.per_row = std::move(per_row);
    return rep;
}

DiscrepancyReport hap_disc_stream(long long n, HapMode mode, const Coloring& coloring) {
    if (n <= 0) throw std::invalid_argument("hap_disc_stream requires n >= 1");
    if (coloring.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("coloring length does not match n");

    DiscrepancyReport rep;
    long long row = 0;
    for (long long a = 1; a <= n; ++a) {
        long long s = 0;
        const long long kmax = n / a;
        for (long long k = 1; k <= kmax; ++k) {
            s += coloring.values[static_cast<std::size_t>(k * a - 1)];
            if (mode == HapMode::Prefix) {
                if (std::llabs(s) > rep.value) {
                    rep.value = std::llabs(s);
                    rep.argmax_row = row;
                }
                ++row;
            }
        }
        if (mode == HapMode::Multiples) {
            if (std::llabs(s) > rep.value) {
                rep.value = std::llabs(s);
                rep.argmax_row = row;
            }
            ++row;
        }
    }
    if (rep.argmax_row < 0 && row > 0) rep.argmax_row = 0;
    return rep;
}

} // namespace disclab
