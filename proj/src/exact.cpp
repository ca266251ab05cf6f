#include "disclab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "disclab/core.hpp"
#include "disclab/splitmix64.hpp"

namespace disclab {

namespace {

// Branch-and-bound search over +-1 colorings of a column subset.
// Columns are assigned in order of decreasing support (ties by index),
// +1 branch first; a node is pruned when some row can no longer finish
// below the incumbent: |partial sum| - (unassigned incident columns) >= best.
class DiscSearch {
public:
    DiscSearch(const SignMatrix& a, std::vector<int> cols, bool track_witness,
               long long initial_best)
        : a_(a), cols_(std::move(cols)), track_witness_(track_witness), best_(initial_best) {
        const std::size_t m = a_.rows;
        rowsum_.assign(m, 0);
        rowrem_.assign(m, 0);
        col_rows_.resize(cols_.size());
        for (std::size_t t = 0; t < cols_.size(); ++t) {
            const int c = cols_[t];
            for (std::size_t r = 0; r < m; ++r) {
                std::int8_t e = a_.at(r, static_cast<std::size_t>(c));
                if (e != 0) {
                    col_rows_[t].push_back({r, e});
                    ++rowrem_[r];
                }
            }
        }
        std::vector<std::size_t> order(cols_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return col_rows_[x].size() > col_rows_[y].size();
        });
        perm_ = std::move(order);
        assign_.assign(cols_.size(), 0);
        if (track_witness_) witness_.assign(cols_.size(), 1);
    }

    void run() {
        dfs(0);
    }

    long long best() const { return best_; }
    unsigned long long nodes() const { return nodes_; }

    // Witness in restricted-column order (position i = cols[i]).
    Coloring witness() const {
        Coloring c;
        c.values = witness_;
        return c;
    }
    bool found_witness() const { return witness_found_; }

private:
    void dfs(std::size_t depth) {
        ++nodes_;
        if (best_ == 0) return;
        for (std::size_t r = 0; r < rowsum_.size(); ++r)
            if (std::llabs(rowsum_[r]) - rowrem_[r] >= best_) return;
        if (depth == perm_.size()) {
            long long val = 0;
            for (long long s : rowsum_) val = std::max(val, std::llabs(s));
            if (val < best_) {
                best_ = val;
                if (track_witness_) {
                    for (std::size_t t = 0; t < perm_.size(); ++t)
                        witness_[perm_[t]] = assign_[perm_[t]];
                    witness_found_ = true;
                }
            }
            return;
        }
        const std::size_t t = perm_[depth];
        for (int sign : {+1, -1}) {
            assign_[t] = static_cast<std::int8_t>(sign);
            for (auto [r, e] : col_rows_[t]) {
                rowsum_[r] += static_cast<long long>(e) * sign;
                --rowrem_[r];
            }
            dfs(depth + 1);
            for (auto [r, e] : col_rows_[t]) {
                rowsum_[r] -= static_cast<long long>(e) * sign;
                ++rowrem_[r];
            }
            if (best_ == 0) break;
        }
    }

    const SignMatrix& a_;
    std::vector<int> cols_;
    std::vector<std::vector<std::pair<std::size_t, std::int8_t>>> col_rows_;
    std::vector<std::size_t> perm_;
    std::vector<long long> rowsum_;
    std::vector<int> rowrem_;
    std::vector<std::int8_t> assign_;
    std::vector<std::int8_t> witness_;
    bool track_witness_;
    bool witness_found_ = false;
    long long best_;
    unsigned long long nodes_ = 0;
};

long long eval_on_columns(const SignMatrix& a, const std::vector<int>& cols,
                          const std::vector<std::int8_t>& x) {
    long long worst = 0;
    for (std::size_t r = 0; r < a.rows; ++r) {
        long long s = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
            s += static_cast<long long>(a.at(r, static_cast<std::size_t>(cols[i]))) * x[i];
        worst = std::max(worst, std::llabs(s));
    }
    return worst;
}

// Value-only discrepancy of a column restriction, seeded with cheap
// achievable upper bounds so the search can prune from the start.
std::pair<long long, unsigned long long> disc_value(const SignMatrix& a,
                                                    const std::vector<int>& cols) {
    std::vector<std::int8_t> ones(cols.size(), 1);
    std::vector<std::int8_t> alt(cols.size());
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = (i % 2 == 0) ? 1 : -1;
    long long ub = std::min(eval_on_columns(a, cols, ones), eval_on_columns(a, cols, alt));
    if (ub == 0) return {0, 0};
    DiscSearch search(a, cols, false, ub);
    search.run();
    return {search.best(), search.nodes()};
}

long long max_row_support(const SignMatrix& a) {
    long long sup = 0;
    for (std::size_t r = 0; r < a.rows; ++r) {
        long long s = 0;
        for (std::size_t c = 0; c < a.cols; ++c)
            if (a.at(r, c) != 0) ++s;
        sup = std::max(sup, s);
    }
    return sup;
}

using int128 = __int128;

// Bareiss over int64 with 128-bit cross products. Safe whenever every
// minor of the input fits in int64; for +-1 matrices the Hadamard bound
// k^{k/2} keeps dimensions <= 26 safe.
long long bareiss_i64(std::vector<long long>& m, int n) {
    int sign = 1;
    long long prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[static_cast<std::size_t>(k) * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i) * n + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(k) * n + j],
                          m[static_cast<std::size_t>(piv) * n + j]);
            sign = -sign;
        }
        const long long pivot = m[static_cast<std::size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            const long long mik = m[static_cast<std::size_t>(i) * n + k];
            for (int j = k + 1; j < n; ++j) {
                int128 t = static_cast<int128>(m[static_cast<std::size_t>(i) * n + j]) * pivot -
                           static_cast<int128>(mik) * m[static_cast<std::size_t>(k) * n + j];
                m[static_cast<std::size_t>(i) * n + j] = static_cast<long long>(t / prev);
            }
            m[static_cast<std::size_t>(i) * n + k] = 0;
        }
        prev = pivot;
    }
    return n == 0 ? 1 : sign * m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
}

BigInt bareiss_big(std::vector<BigInt>& m, int n) {
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[static_cast<std::size_t>(k) * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i) * n + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(k) * n + j],
                          m[static_cast<std::size_t>(piv) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m[static_cast<std::size_t>(i) * n + j] * m[static_cast<std::size_t>(k) * n + k] -
                           m[static_cast<std::size_t>(i) * n + k] * m[static_cast<std::size_t>(k) * n + j];
                m[static_cast<std::size_t>(i) * n + j] = t / prev;
            }
            m[static_cast<std::size_t>(i) * n + k] = 0;
        }
        prev = m[static_cast<std::size_t>(k) * n + k];
    }
    return n == 0 ? BigInt(1) : BigInt(sign) * m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
}

constexpr int kInt64SafeDim = 26;

} // namespace

ExactResult disc_exact(const SignMatrix& matrix) {
    matrix.validate();
    if (matrix.cols > kDiscColsCap)
        throw CapExceeded("disc_exact supports at most 30 columns");

    std::vector<int> cols(matrix.cols);
    std::iota(cols.begin(), cols.end(), 0);
    DiscSearch search(matrix, cols, true, std::numeric_limits<long long>::max());
    search.run();

    ExactResult res;
    res.value = search.best();
    res.witness_coloring = search.witness();
    res.nodes_explored = search.nodes();
    return res;
}

ExactResult herdisc_exact(const SignMatrix& matrix, int cap) {
    matrix.validate();
    if (cap < 0 || cap > kHerdiscGroundCap)
        throw CapExceeded("herdisc_exact cap must be at most 16");
    if (matrix.cols > static_cast<std::size_t>(cap))
        throw CapExceeded("herdisc_exact ground exceeds cap");

    const int g = static_cast<int>(matrix.cols);
    const long long sup = max_row_support(matrix);
    ExactResult res;
    res.value = 0;
    res.witness_subset = Bitset(static_cast<std::size_t>(g));
    std::vector<int> cols;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << g); ++mask) {
        if (res.value == sup) break; // disc never exceeds the max row support
        cols.clear();
        for (int c = 0; c < g; ++c)
            if ((mask >> c) & 1) cols.push_back(c);
        auto [val, nodes] = disc_value(matrix, cols);
        res.nodes_explored += nodes;
        if (val > res.value) {
            res.value = val;
            res.witness_subset = Bitset::from_mask(static_cast<std::size_t>(g), mask);
        }
    }
    return res;
}

ExactResult herdisc_exact(const SetSystem& system, int cap) {
    return herdisc_exact(to_matrix(system), cap);
}

BigInt det_exact(const std::vector<std::vector<BigInt>>& square) {
    const std::size_t n = square.size();
    if (n > kDetDimCap) throw CapExceeded("det_exact supports dimension at most 64");
    for (const auto& row : square)
        if (row.size() != n) throw std::invalid_argument("det_exact requires a square matrix");
    std::vector<BigInt> m;
    m.reserve(n * n);
    for (const auto& row : square)
        for (const auto& e : row) m.push_back(e);
    return bareiss_big(m, static_cast<int>(n));
}

BigInt det_exact(const SignMatrix& square) {
    square.validate();
    if (square.rows != square.cols) throw std::invalid_argument("det_exact requires a square matrix");
    if (square.rows > kDetDimCap) throw CapExceeded("det_exact supports dimension at most 64");
    const int n = static_cast<int>(square.rows);
    if (n <= kInt64SafeDim) {
        std::vector<long long> m(square.entries.begin(), square.entries.end());
        return BigInt(bareiss_i64(m, n));
    }
    std::vector<BigInt> m(square.entries.begin(), square.entries.end());
    return bareiss_big(m, n);
}

BigInt det_of_columns(const SignMatrix& matrix, const std::vector<int>& cols) {
    const int n = static_cast<int>(matrix.rows);
    if (cols.size() != matrix.rows)
        throw std::invalid_argument("column subset size must equal the row count");
    if (matrix.rows > kDetDimCap) throw CapExceeded("det_of_columns supports dimension at most 64");
    if (n <= kInt64SafeDim) {
        std::vector<long long> m(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m[static_cast<std::size_t>(r) * n + c] =
                    matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[c]));
        return BigInt(bareiss_i64(m, n));
    }
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m[static_cast<std::size_t>(r) * n + c] =
                matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[c]));
    return bareiss_big(m, n);
}

SubsetStrategy subset_strategy_from_string(const std::string& s) {
    if (s == "exhaustive") return SubsetStrategy::Exhaustive;
    if (s == "random-swap") return SubsetStrategy::RandomSwap;
    throw std::invalid_argument("unknown subset strategy: " + s);
}

namespace {

bool threshold_met(const BigInt& det, int m, double threshold) {
    if (m == 0) return true;
    return root_double(det, m) >= threshold;
}

unsigned long long binomial_capped(unsigned long long n, unsigned long long k,
                                   unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at each step
        unsigned long long num = n - k + i;
        unsigned long long g = std::gcd(num, i);
        num /= g;
        unsigned long long den = i / g;
        if (r > (cap * 4) / num) return cap + 1; // avoid overflow, report over-cap
        r = r * num / den;
        if (r > cap * 4) return cap + 1;
    }
    return r;
}

} // namespace

MaxDetResult find_large_det_subset(const SignMatrix& matrix, SubsetStrategy strategy,
                                   std::uint64_t seed, double threshold, int restarts) {
    matrix.validate();
    const int m = static_cast<int>(matrix.rows);
    const int n = static_cast<int>(matrix.cols);
    if (m > n) throw std::invalid_argument("find_large_det_subset requires rows <= cols");
    if (matrix.rows > kDetDimCap) throw CapExceeded("row count exceeds determinant cap 64");
    if (!std::isfinite(threshold) || threshold < 0)
        throw std::invalid_argument("threshold must be a nonnegative real");
    if (restarts < 1) throw std::invalid_argument("restart budget must be positive");

    MaxDetResult res;
    if (m == 0) {
        res.det = 1;
        res.met_threshold = true;
        return res;
    }

    if (strategy == SubsetStrategy::Exhaustive) {
        if (binomial_capped(static_cast<unsigned long long>(n), static_cast<unsigned long long>(m),
                            kExhaustiveSubsetCap) > kExhaustiveSubsetCap)
            throw CapExceeded("exhaustive subset scan exceeds the 1e8 candidate cap");
        std::vector<int> comb(m);
        std::iota(comb.begin(), comb.end(), 0);
        BigInt best = -1;
        std::vector<int> best_cols;
        const bool fast = m <= kInt64SafeDim;
        std::vector<long long> scratch(fast ? static_cast<std::size_t>(m) * m : 0);
        // column-major copy so candidate extraction is sequential
        std::vector<std::int8_t> colmajor(static_cast<std::size_t>(m) * n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < m; ++r)
                colmajor[static_cast<std::size_t>(c) * m + r] =
                    matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        while (true) {
            BigInt d;
            if (fast) {
                for (int c = 0; c < m; ++c) {
                    const std::int8_t* src = colmajor.data() + static_cast<std::size_t>(comb[c]) * m;
                    for (int r = 0; r < m; ++r)
                        scratch[static_cast<std::size_t>(r) * m + c] = src[r];
                }
                d = bareiss_i64(scratch, m);
            } else {
                d = det_of_columns(matrix, comb);
            }
            ++res.evals;
            if (abs(d) > best) {
                best = abs(d);
                res.det = d;
                best_cols = comb;
            }
            int i = m - 1;
            while (i >= 0 && comb[i] == n - m + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        }
        res.cols = best_cols;
        res.met_threshold = threshold_met(res.det, m, threshold);
        return res;
    }

    // random-swap: seeded restarts of greedy single-column swap hill climbs
    SplitMix64 rng(seed);
    BigInt best_abs = -1;
    for (int r = 0; r < restarts; ++r) {
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < m; ++i) {
            int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<int> cur(pool.begin(), pool.begin() + m);
        std::sort(cur.begin(), cur.end());
        BigInt cur_det = det_of_columns(matrix, cur);
        ++res.evals;

        bool improved = true;
        while (improved) {
            improved = false;
            BigInt move_det = cur_det;
            std::vector<int> move_cols;
            std::vector<bool> inside(static_cast<std::size_t>(n), false);
            for (int c : cur) inside[static_cast<std::size_t>(c)] = true;
            for (int p = 0; p < m; ++p) {
                for (int c = 0; c < n; ++c) {
                    if (inside[static_cast<std::size_t>(c)]) continue;
                    std::vector<int> cand = cur;
                    cand[static_cast<std::size_t>(p)] = c;
                    std::sort(cand.begin(), cand.end());
                    BigInt d = det_of_columns(matrix, cand);
                    ++res.evals;
                    if (abs(d) > abs(move_det)) {
                        move_det = d;
                        move_cols = std::move(cand);
                    }
                }
            }
            if (!move_cols.empty()) {
                cur = std::move(move_cols);
                cur_det = std::move(move_det);
                improved = true;
            }
        }

        res.restarts_used = r + 1;
        if (abs(cur_det) > best_abs) {
            best_abs = abs(cur_det);
            res.det = cur_det;
            res.cols = cur;
        }
        if (threshold_met(res.det, m, threshold)) break;
    }
    res.met_threshold = threshold_met(res.det, m, threshold);
    return res;
}

} // namespace disclab
