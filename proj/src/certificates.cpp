#include "disclab/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

#include "disclab/core.hpp"
#include "disclab/splitmix64.hpp"

namespace disclab {

CertStrategy cert_strategy_from_string(const std::string& s) {
    if (s == "exhaustive") return CertStrategy::Exhaustive;
    if (s == "greedy") return CertStrategy::Greedy;
    throw std::invalid_argument("unknown certificate strategy: " + s);
}

double cert_bound(int k, const BigInt& det) {
    if (k < 1) throw std::invalid_argument("certificate order must be positive");
    return 0.5 * root_double(det, k);
}

namespace {

using int128 = __int128;

constexpr int kInt64SafeDim = 26;

// Determinant of matrix[rows, cols]; |rows| == |cols| == k.
BigInt submatrix_det(const SignMatrix& a, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k <= kInt64SafeDim) {
        std::vector<long long> m(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m[static_cast<std::size_t>(i) * k + j] =
                    a.at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
        // same elimination as det_exact, inlined over int64
        int sign = 1;
        long long prev = 1;
        for (int p = 0; p + 1 < k; ++p) {
            if (m[static_cast<std::size_t>(p) * k + p] == 0) {
                int piv = -1;
                for (int i = p + 1; i < k; ++i)
                    if (m[static_cast<std::size_t>(i) * k + p] != 0) {
                        piv = i;
                        break;
                    }
                if (piv < 0) return 0;
                for (int j = p; j < k; ++j)
                    std::swap(m[static_cast<std::size_t>(p) * k + j],
                              m[static_cast<std::size_t>(piv) * k + j]);
                sign = -sign;
            }
            const long long pivot = m[static_cast<std::size_t>(p) * k + p];
            for (int i = p + 1; i < k; ++i) {
                const long long mip = m[static_cast<std::size_t>(i) * k + p];
                for (int j = p + 1; j < k; ++j) {
                    int128 t = static_cast<int128>(m[static_cast<std::size_t>(i) * k + j]) * pivot -
                               static_cast<int128>(mip) * m[static_cast<std::size_t>(p) * k + j];
                    m[static_cast<std::size_t>(i) * k + j] = static_cast<long long>(t / prev);
                }
                m[static_cast<std::size_t>(i) * k + p] = 0;
            }
            prev = pivot;
        }
        return k == 0 ? BigInt(1) : BigInt(sign * m[static_cast<std::size_t>(k - 1) * k + (k - 1)]);
    }
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(k),
                                       std::vector<BigInt>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a.at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    return det_exact(m);
}

// Does |det_new|^{1/k_new} strictly beat |det_old|^{1/k_old}? Exact: a
// double log comparison decides clear cases, cross powers settle ties.
bool cert_better(int k_new, const BigInt& adet_new, int k_old, const BigInt& adet_old) {
    if (k_old == 0) return true; // nothing recorded yet
    if (k_new == k_old) return adet_new > adet_old;
    if (adet_old == 0) return adet_new > 0;
    if (adet_new == 0) return false;
    const double ln = log_abs(adet_new) / k_new;
    const double lo = log_abs(adet_old) / k_old;
    const double margin = 1e-9 * std::max(1.0, std::max(std::abs(ln), std::abs(lo)));
    if (ln > lo + margin) return true;
    if (ln < lo - margin) return false;
    return pow(adet_new, static_cast<unsigned>(k_old)) > pow(adet_old, static_cast<unsigned>(k_new));
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

unsigned long long binom_capped(unsigned long long n, unsigned long long k,
                                unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        unsigned long long num = n - k + i;
        unsigned long long g = std::gcd(num, i);
        num /= g;
        unsigned long long den = i / g;
        if (r > (cap * 4) / num) return cap + 1;
        r = r * num / den;
        if (r > cap * 4) return cap + 1;
    }
    return r;
}

} // namespace

LowerBoundCert detlb_certificate(const SignMatrix& matrix, int kmax, CertStrategy strategy,
                                 std::uint64_t seed, int restarts) {
    matrix.validate();
    const int m = static_cast<int>(matrix.rows);
    const int n = static_cast<int>(matrix.cols);
    if (kmax < 1 || kmax > std::min(m, n))
        throw std::invalid_argument("kmax must satisfy 1 <= kmax <= min(rows, cols)");

    LowerBoundCert best;
    BigInt best_abs = 0;

    auto consider = [&](int k, const std::vector<int>& rows, const std::vector<int>& cols,
                        const BigInt& det) {
        BigInt adet = abs(det);
        if (cert_better(k, adet, best.k, best_abs)) {
            best.k = k;
            best.row_subset = rows;
            best.col_subset = cols;
            best.det = det;
            best_abs = std::move(adet);
        }
    };

    if (strategy == CertStrategy::Exhaustive) {
        unsigned long long total = 0;
        for (int k = 1; k <= kmax; ++k) {
            unsigned long long rk = binom_capped(static_cast<unsigned long long>(m),
                                                 static_cast<unsigned long long>(k),
                                                 kExhaustiveSubsetCap);
            unsigned long long ck = binom_capped(static_cast<unsigned long long>(n),
                                                 static_cast<unsigned long long>(k),
                                                 kExhaustiveSubsetCap);
            if (rk > kExhaustiveSubsetCap || ck > kExhaustiveSubsetCap ||
                (ck != 0 && rk > kExhaustiveSubsetCap / ck))
                throw CapExceeded("exhaustive submatrix scan exceeds the 1e8 candidate cap");
            total += rk * ck;
            if (total > kExhaustiveSubsetCap)
                throw CapExceeded("exhaustive submatrix scan exceeds the 1e8 candidate cap");
        }
        for (int k = 1; k <= kmax; ++k) {
            std::vector<int> rows(static_cast<std::size_t>(k));
            std::iota(rows.begin(), rows.end(), 0);
            do {
                std::vector<int> cols(static_cast<std::size_t>(k));
                std::iota(cols.begin(), cols.end(), 0);
                do {
                    consider(k, rows, cols, submatrix_det(matrix, rows, cols));
                } while (next_combination(cols, n));
            } while (next_combination(rows, m));
        }
        best.bound = cert_bound(best.k, best.det);
        return best;
    }

    if (restarts < 1) throw std::invalid_argument("restart budget must be positive");
    SplitMix64 rng(seed);
    for (int r = 0; r < restarts; ++r) {
        std::vector<int> rows{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)))};
        std::vector<int> cols{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)))};
        consider(1, rows, cols, submatrix_det(matrix, rows, cols));
        while (static_cast<int>(rows.size()) < kmax) {
            const int k = static_cast<int>(rows.size());
            std::vector<bool> row_in(static_cast<std::size_t>(m), false);
            std::vector<bool> col_in(static_cast<std::size_t>(n), false);
            for (int i : rows) row_in[static_cast<std::size_t>(i)] = true;
            for (int j : cols) col_in[static_cast<std::size_t>(j)] = true;
            BigInt grow_abs = -1;
            std::vector<int> grow_rows, grow_cols;
            BigInt grow_det = 0;
            for (int i = 0; i < m; ++i) {
                if (row_in[static_cast<std::size_t>(i)]) continue;
                std::vector<int> rr = rows;
                rr.insert(std::upper_bound(rr.begin(), rr.end(), i), i);
                for (int j = 0; j < n; ++j) {
                    if (col_in[static_cast<std::size_t>(j)]) continue;
                    std::vector<int> cc = cols;
                    cc.insert(std::upper_bound(cc.begin(), cc.end(), j), j);
                    BigInt d = submatrix_det(matrix, rr, cc);
                    if (abs(d) > grow_abs) {
                        grow_abs = abs(d);
                        grow_det = d;
                        grow_rows = rr;
                        grow_cols = cc;
                    }
                }
            }
            rows = std::move(grow_rows);
            cols = std::move(grow_cols);
            consider(k + 1, rows, cols, grow_det);
        }
    }
    best.bound = cert_bound(best.k, best.det);
    return best;
}

CheckReport verify_certificate(const SignMatrix& matrix, const LowerBoundCert& cert) {
    matrix.validate();
    if (cert.k < 1) throw InvariantViolation("malformed certificate: order k must be positive");
    if (cert.row_subset.size() != static_cast<std::size_t>(cert.k) ||
        cert.col_subset.size() != static_cast<std::size_t>(cert.k))
        throw InvariantViolation("malformed certificate: index subsets must have size k");
    auto check_indices = [&](const std::vector<int>& idx, int limit, const char* what) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= limit)
                throw InvariantViolation(std::string("malformed certificate: ") + what +
                                         " index out of range");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw InvariantViolation(std::string("malformed certificate: ") + what +
                                         " indices must be strictly increasing");
        }
    };
    check_indices(cert.row_subset, static_cast<int>(matrix.rows), "row");
    check_indices(cert.col_subset, static_cast<int>(matrix.cols), "column");

    CheckReport rep;
    rep.name = "certificate";
    rep.trials = 1;
    BigInt det = submatrix_det(matrix, cert.row_subset, cert.col_subset);
    if (det != cert.det) {
        rep.passed = false;
        rep.detail = "determinant mismatch: recomputed " + to_decimal(det) + ", certificate says " +
                     to_decimal(cert.det);
        return rep;
    }
    const double bound = cert_bound(cert.k, det);
    const double tol = 1e-9 * std::max(1.0, std::max(std::abs(bound), std::abs(cert.bound)));
    if (std::abs(bound - cert.bound) > tol) {
        rep.passed = false;
        rep.detail = "bound mismatch: recomputed " + std::to_string(bound) + ", certificate says " +
                     std::to_string(cert.bound);
    }
    return rep;
}

CheckReport check_char_decomposition(int d, const CharacterIndex& v) {
    if (d < 1 || d > 16) throw CapExceeded("check_char_decomposition requires 1 <= d <= 16");
    if (v.d != d) throw std::invalid_argument("character index dimension mismatch");
    const int k = v.weight();
    if (k > 12) throw CapExceeded("check_char_decomposition requires weight <= 12");

    CheckReport rep;
    rep.name = "char_decomposition(d=" + std::to_string(d) + ",v=" + cube_label(v.v, d) + ")";

    // Precompute each extension's pattern and representative sign once.
    const std::uint32_t wcount = std::uint32_t(1) << k;
    std::vector<CubePattern> pats;
    std::vector<int> signs;
    pats.reserve(wcount);
    for (std::uint32_t w = 0; w < wcount; ++w) {
        CubePattern p = extend_pattern(v, w);
        signs.push_back(character_value(v.v, representative(p)));
        pats.push_back(std::move(p));
    }

    const std::uint32_t points = std::uint32_t(1) << d;
    for (std::uint32_t u = 0; u < points; ++u) {
        int rhs = 0;
        for (std::uint32_t w = 0; w < wcount; ++w)
            if (pats[w].contains(u)) rhs += signs[w];
        ++rep.trials;
        if (rhs != character_value(v.v, u)) {
            rep.passed = false;
            rep.detail = "identity fails at u=" + cube_label(u, d);
            return rep;
        }
    }
    return rep;
}

namespace {

std::uint64_t to_u64_checked(const BigInt& x, const char* what) {
    if (x < 0 || x > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw CapExceeded(std::string(what) + " does not fit in 64 bits");
    return x.convert_to<std::uint64_t>();
}

// Subcube sums of f*1_U for every pattern, by a coordinate-at-a-time
// transform: digit 0 and 1 split a coordinate, digit * adds the halves.
// Output is indexed by pattern rank.
std::vector<long long> all_subcube_sums(int d, const std::vector<long long>& point_values) {
    std::vector<long long> cur = point_values; // size 3^t * 2^(d-t), t = 0
    std::size_t pats = 1;
    std::size_t half = std::size_t(1) << d;
    for (int t = 0; t < d; ++t) {
        half >>= 1;
        std::vector<long long> next(pats * 3 * half);
        for (std::size_t p = 0; p < pats; ++p) {
            const long long* src = cur.data() + p * (half << 1);
            long long* dst = next.data() + p * 3 * half;
            for (std::size_t x = 0; x < half; ++x) {
                dst[x] = src[x];
                dst[half + x] = src[half + x];
                dst[2 * half + x] = src[x] + src[half + x];
            }
        }
        cur = std::move(next);
        pats *= 3;
    }
    return cur;
}

} // namespace

CheckReport check_embedding(const EmbeddingWitness& witness, int trials, std::uint64_t seed) {
    witness.validate();
    const int d = witness.d;
    if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");

    CheckReport rep;
    rep.name = "embedding(d=" + std::to_string(d) + ")";
    rep.trials = static_cast<unsigned long long>(trials);

    const std::uint32_t points = std::uint32_t(1) << d;
    std::size_t pats = 1;
    for (int i = 0; i < d; ++i) pats *= 3;

    std::vector<std::uint64_t> b(points);
    for (std::uint32_t u = 0; u < points; ++u) b[u] = to_u64_checked(witness.b_of_u[u], "b_u");
    const std::uint64_t nmax = to_u64_checked(witness.n, "n");

    // (i) divisibility matches membership (full at d <= 8, sampled above).
    SplitMix64 rng(seed);
    auto divisibility_pair = [&](std::size_t vrank, std::uint32_t u) {
        const std::uint64_t av = to_u64_checked(witness.a_of_v[vrank], "a_v");
        const bool divides = (b[u] % av) == 0;
        const bool member = pattern_from_rank(d, vrank).contains(u);
        return divides == member;
    };
    if (d <= 8) {
        for (std::size_t vr = 0; vr < pats && rep.passed; ++vr)
            for (std::uint32_t u = 0; u < points; ++u)
                if (!divisibility_pair(vr, u)) {
                    rep.passed = false;
                    rep.detail = "divisibility mismatch at v rank " + std::to_string(vr) +
                                 ", u=" + cube_label(u, d);
                    break;
                }
    } else {
        for (int i = 0; i < 100000 && rep.passed; ++i) {
            std::size_t vr = static_cast<std::size_t>(rng.next_below(pats));
            std::uint32_t u = static_cast<std::uint32_t>(rng.next_below(points));
            if (!divisibility_pair(vr, u)) {
                rep.passed = false;
                rep.detail = "divisibility mismatch at v rank " + std::to_string(vr) +
                             ", u=" + cube_label(u, d);
            }
        }
    }
    if (!rep.passed) return rep;

    // (ii) every nonempty divisor-selected subset must be a subcube
    // image. The tightest pattern over the selected points is inferred
    // coordinate by coordinate; the set is a subcube image exactly when
    // its size matches that pattern's member count.
    std::set<std::vector<std::uint32_t>> seen_sets;
    std::vector<std::vector<std::uint32_t>> divisor_sets;
    auto record_divisor = [&](std::uint64_t a) {
        std::vector<std::uint32_t> sel;
        for (std::uint32_t u = 0; u < points; ++u)
            if (b[u] % a == 0) sel.push_back(u);
        if (sel.empty()) return true;
        if (!seen_sets.insert(sel).second) return true;
        std::uint32_t all_and = ~std::uint32_t(0), all_or = 0;
        for (std::uint32_t u : sel) {
            all_and &= u;
            all_or |= u;
        }
        const int stars = std::popcount(all_or & ~all_and);
        if (sel.size() != (std::size_t(1) << stars)) {
            rep.passed = false;
            rep.detail = "divisor a=" + std::to_string(a) +
                         " selects a set that is not a subcube image";
            return false;
        }
        divisor_sets.push_back(std::move(sel));
        return true;
    };

    if (d <= kEmbeddingFullScanCap) {
        for (std::uint64_t a = 1; a <= nmax; ++a)
            if (!record_divisor(a)) return rep;
    } else {
        // a_v values (all of them when affordable, sampled otherwise)
        // plus seeded random divisors.
        const bool all_av = pats * points <= 200000000ULL;
        if (all_av) {
            for (std::size_t vr = 0; vr < pats; ++vr)
                if (!record_divisor(to_u64_checked(witness.a_of_v[vr], "a_v"))) return rep;
        } else {
            for (int i = 0; i < kEmbeddingSampledDivisors; ++i) {
                std::size_t vr = static_cast<std::size_t>(rng.next_below(pats));
                if (!record_divisor(to_u64_checked(witness.a_of_v[vr], "a_v"))) return rep;
            }
        }
        for (int i = 0; i < kEmbeddingSampledDivisors; ++i)
            if (!record_divisor(rng.next_below(nmax) + 1)) return rep;
    }

    // (iii) equal maxima on the subcube side and the divisor side for
    // seeded random (f, U).
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> f(points);
        for (std::uint32_t u = 0; u < points; ++u) f[u] = rng.next_sign();
        std::vector<bool> in_u(points);
        for (std::uint32_t u = 0; u < points; ++u) in_u[u] = rng.next_bool();
        std::vector<long long> point_values(points, 0);
        for (std::uint32_t u = 0; u < points; ++u)
            if (in_u[u]) point_values[u] = f[u];

        std::vector<long long> sums = all_subcube_sums(d, point_values);
        long long lhs = 0;
        for (long long s : sums) lhs = std::max(lhs, std::llabs(s));

        long long rhs = 0;
        for (const auto& sel : divisor_sets) {
            long long s = 0;
            for (std::uint32_t u : sel)
                if (in_u[u]) s += f[u];
            rhs = std::max(rhs, std::llabs(s));
        }
        if (lhs != rhs) {
            rep.passed = false;
            rep.detail = "maxima differ on trial " + std::to_string(trial) + ": subcube side " +
                         std::to_string(lhs) + ", divisor side " + std::to_string(rhs);
            return rep;
        }
    }
    return rep;
}

TransferCheck check_transfer(int d, int k, int trials, std::uint64_t seed) {
    if (d < 1 || d > kTransferIdentityDimCap)
        throw CapExceeded("check_transfer requires 1 <= d <= 12");
    if (k < 0 || k > d) throw std::invalid_argument("weight must satisfy 0 <= k <= d");
    if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");

    TransferCheck out;
    out.report.name = "transfer(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")";
    out.report.trials = static_cast<unsigned long long>(trials);

    const std::uint32_t points = std::uint32_t(1) << d;
    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        // random weight-k v, then f, then U, all from the one stream
        std::vector<int> pos(static_cast<std::size_t>(d));
        std::iota(pos.begin(), pos.end(), 0);
        std::uint32_t v = 0;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d - i)));
            std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
            v |= std::uint32_t(1) << pos[static_cast<std::size_t>(i)];
        }
        std::vector<int> f(points);
        for (std::uint32_t u = 0; u < points; ++u) f[u] = rng.next_sign();
        std::vector<bool> in_u(points);
        for (std::uint32_t u = 0; u < points; ++u) in_u[u] = rng.next_bool();

        CharacterIndex vi(d, v);
        long long lhs = 0;
        for (std::uint32_t u = 0; u < points; ++u)
            if (in_u[u]) lhs += character_value(v, u) * f[u];

        long long rhs = 0;
        for (std::uint32_t w = 0; w < (std::uint32_t(1) << k); ++w) {
            CubePattern p = extend_pattern(vi, w);
            const int sign = character_value(v, representative(p));
            // enumerate S_{v(w)}: representative plus star bits
            std::uint32_t base = representative(p);
            std::vector<int> star_bits;
            for (int i = 0; i < d; ++i)
                if (p.symbols[static_cast<std::size_t>(i)] == '*') star_bits.push_back(d - 1 - i);
            long long inner = 0;
            for (std::uint32_t s = 0; s < (std::uint32_t(1) << star_bits.size()); ++s) {
                std::uint32_t u = base;
                for (std::size_t j = 0; j < star_bits.size(); ++j)
                    if ((s >> j) & 1) u |= std::uint32_t(1) << star_bits[j];
                if (in_u[u]) inner += f[u];
            }
            rhs += sign * inner;
        }
        if (lhs != rhs) {
            out.report.passed = false;
            out.report.detail = "identity fails on trial " + std::to_string(trial) + " (v=" +
                                cube_label(v, d) + ")";
            return out;
        }
    }

    if (d <= kTransferHerdiscDimCap) {
        out.herdisc_characters = herdisc_exact(gen_characters(d, k)).value;
        out.herdisc_subcubes = herdisc_exact(gen_subcubes(d)).value;
        const long long factor = 1LL << k;
        if (out.herdisc_characters > factor * out.herdisc_subcubes) {
            out.report.passed = false;
            out.report.detail = "herdisc inequality fails: " + std::to_string(out.herdisc_characters) +
                                " > " + std::to_string(factor) + " * " +
                                std::to_string(out.herdisc_subcubes);
        }
    }
    return out;
}

} // namespace disclab
