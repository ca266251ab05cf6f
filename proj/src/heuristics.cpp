#include "disclab/heuristics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "disclab/bigint.hpp"
#include "disclab/core.hpp"
#include "disclab/splitmix64.hpp"

namespace disclab {

namespace {

// Canonical kernel vector of an integer 0/1 matrix restricted to the
// given columns: reduced row echelon form over exact rationals, first
// free column set to 1, pivots back-substituted. Returned as an integer
// vector (scaled by the common denominator), indexed like `cols`.
std::vector<BigInt> kernel_vector(const std::vector<std::vector<std::int8_t>>& rows,
                                  std::size_t ncols) {
    const std::size_t nrows = rows.size();
    std::vector<std::vector<BigRational>> m(nrows, std::vector<BigRational>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = rows[i][j];

    std::vector<std::size_t> pivot_col;
    std::size_t lead = 0;
    for (std::size_t j = 0; j < ncols && lead < nrows; ++j) {
        std::size_t sel = lead;
        while (sel < nrows && m[sel][j] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[lead]);
        const BigRational inv = m[lead][j];
        for (std::size_t c = j; c < ncols; ++c) m[lead][c] /= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == lead || m[i][j] == 0) continue;
            const BigRational factor = m[i][j];
            for (std::size_t c = j; c < ncols; ++c) m[i][c] -= factor * m[lead][c];
        }
        pivot_col.push_back(j);
        ++lead;
    }

    std::size_t free_col = ncols;
    {
        std::size_t p = 0;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (p < pivot_col.size() && pivot_col[p] == j) {
                ++p;
            } else {
                free_col = j;
                break;
            }
        }
    }
    if (free_col == ncols)
        throw std::logic_error("kernel_vector: no free column (rank exceeds expectation)");

    std::vector<BigRational> z(ncols, BigRational(0));
    z[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        if (pivot_col[i] < free_col) z[pivot_col[i]] = -m[i][free_col];

    BigInt scale = 1;
    for (const BigRational& q : z) scale = lcm(scale, denominator(q));
    std::vector<BigInt> out(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
        out[j] = numerator(z[j]) * (scale / denominator(z[j]));
    return out;
}

} // namespace

HeuristicOutcome beck_fiala(const SetSystem& system) {
    system.validate();
    const std::size_t n = system.ground_size();
    const std::size_t msets = system.set_count();
    if (n > kBeckFialaGroundCap) throw CapExceeded("beck_fiala supports at most 2000 elements");
    if (msets > kBeckFialaSetCap) throw CapExceeded("beck_fiala supports at most 20000 sets");

    std::vector<std::vector<std::uint32_t>> members(msets);
    std::vector<long long> degree(n, 0);
    for (std::size_t s = 0; s < msets; ++s) {
        system.sets[s].for_each([&](std::size_t i) {
            members[s].push_back(static_cast<std::uint32_t>(i));
            ++degree[i];
        });
    }
    const long long t = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

    std::vector<BigRational> x(n, BigRational(0));
    std::vector<bool> frozen(n, false);
    std::size_t floating_left = n;
    unsigned long long rounds = 0;

    while (floating_left > 0) {
        ++rounds;
        std::vector<std::uint32_t> floating;
        floating.reserve(floating_left);
        for (std::size_t i = 0; i < n; ++i)
            if (!frozen[i]) floating.push_back(static_cast<std::uint32_t>(i));

        std::vector<std::size_t> active;
        for (std::size_t s = 0; s < msets; ++s) {
            long long cnt = 0;
            for (std::uint32_t i : members[s])
                if (!frozen[i]) ++cnt;
            if (cnt > t) active.push_back(s);
        }
        // Degree counting gives #active < #floating, so a kernel vector
        // exists already among the first #active+1 floating columns;
        // the canonical (first-free-column) vector is supported there.
        const std::size_t width = std::min(floating.size(), active.size() + 1);
        std::vector<std::size_t> col_of(n, SIZE_MAX);
        for (std::size_t j = 0; j < width; ++j) col_of[floating[j]] = j;
        std::vector<std::vector<std::int8_t>> rows(active.size(),
                                                   std::vector<std::int8_t>(width, 0));
        for (std::size_t r = 0; r < active.size(); ++r)
            for (std::uint32_t i : members[active[r]])
                if (col_of[i] != SIZE_MAX) rows[r][col_of[i]] = 1;

        std::vector<BigInt> z = kernel_vector(rows, width);

        bool have_step = false;
        BigRational step;
        for (std::size_t j = 0; j < width; ++j) {
            if (z[j] == 0) continue;
            const std::uint32_t i = floating[j];
            BigRational cand = (z[j] > 0) ? (BigRational(1) - x[i]) / BigRational(z[j])
                                          : (BigRational(-1) - x[i]) / BigRational(z[j]);
            if (!have_step || cand < step) {
                step = std::move(cand);
                have_step = true;
            }
        }
        if (!have_step || step <= 0)
            throw std::logic_error("beck_fiala: no positive step available");

        std::size_t froze = 0;
        for (std::size_t j = 0; j < width; ++j) {
            if (z[j] == 0) continue;
            const std::uint32_t i = floating[j];
            x[i] += step * BigRational(z[j]);
            if (x[i] == 1 || x[i] == -1) {
                frozen[i] = true;
                --floating_left;
                ++froze;
            }
        }
        if (froze == 0) throw std::logic_error("beck_fiala: round froze no variable");
    }

    HeuristicOutcome out;
    out.coloring.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.coloring.values[i] = static_cast<std::int8_t>(x[i] == 1 ? 1 : -1);
    out.iterations = rounds;
    out.guarantee = (t == 0) ? 0 : 2 * t - 1;

    long long achieved = 0;
    for (std::size_t s = 0; s < msets; ++s) {
        long long sum = 0;
        for (std::uint32_t i : members[s]) sum += out.coloring.values[i];
        achieved = std::max(achieved, std::llabs(sum));
    }
    out.achieved = achieved;
    if (out.achieved > *out.guarantee)
        throw std::logic_error("beck_fiala: rounding violated the 2t-1 guarantee");
    return out;
}

Coloring ternary_coloring(long long n) {
    if (n < 1) throw std::invalid_argument("ternary_coloring requires n >= 1");
    if (n > kTernaryCap) throw CapExceeded("ternary_coloring supports n <= 1e8");
    Coloring c;
    c.values.resize(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        long long v = i;
        while (v % 3 == 0) v /= 3;
        c.values[static_cast<std::size_t>(i - 1)] = (v % 3 == 2) ? -1 : 1;
    }
    return c;
}

Coloring random_coloring(long long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_coloring requires n >= 1");
    SplitMix64 rng(seed);
    Coloring c;
    c.values.resize(static_cast<std::size_t>(n));
    for (auto& v : c.values) v = static_cast<std::int8_t>(rng.next_sign());
    return c;
}

HeuristicOutcome greedy_improve(const SignMatrix& matrix, const Coloring& start,
                                long long max_passes) {
    matrix.validate();
    if (start.size() != matrix.cols)
        throw std::invalid_argument("coloring length does not match column count");
    if (max_passes < 0) throw std::invalid_argument("pass budget must be nonnegative");

    HeuristicOutcome out;
    out.coloring = start;
    std::vector<long long> rowsum(matrix.rows, 0);
    for (std::size_t r = 0; r < matrix.rows; ++r)
        for (std::size_t c = 0; c < matrix.cols; ++c)
            rowsum[r] += static_cast<long long>(matrix.at(r, c)) * out.coloring.values[c];
    auto value_of = [&](const std::vector<long long>& sums) {
        long long v = 0;
        for (long long s : sums) v = std::max(v, std::llabs(s));
        return v;
    };
    long long value = value_of(rowsum);

    for (long long pass = 0; pass < max_passes; ++pass) {
        long long best_value = value;
        std::size_t best_col = matrix.cols;
        for (std::size_t c = 0; c < matrix.cols; ++c) {
            long long cand = 0;
            for (std::size_t r = 0; r < matrix.rows; ++r) {
                long long s = rowsum[r] - 2LL * matrix.at(r, c) * out.coloring.values[c];
                cand = std::max(cand, std::llabs(s));
                if (cand >= best_value) break;
            }
            if (cand < best_value) {
                best_value = cand;
                best_col = c;
            }
        }
        if (best_col == matrix.cols) break;
        for (std::size_t r = 0; r < matrix.rows; ++r)
            rowsum[r] -= 2LL * matrix.at(r, best_col) * out.coloring.values[best_col];
        out.coloring.values[best_col] = static_cast<std::int8_t>(-out.coloring.values[best_col]);
        value = best_value;
        ++out.iterations;
    }
    out.achieved = value;
    return out;
}

} // namespace disclab
