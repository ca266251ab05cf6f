#include "disclab/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace disclab {

std::string cube_label(std::uint32_t u, int d) {
    std::string s(static_cast<std::size_t>(d), '0');
    for (int i = 0; i < d; ++i)
        if ((u >> (d - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

CubePattern::CubePattern(std::string s) : symbols(std::move(s)) {
    for (char c : symbols)
        if (c != '0' && c != '1' && c != '*')
            throw InvariantViolation("cube pattern symbols must be 0, 1 or *");
}

int CubePattern::stars() const {
    return static_cast<int>(std::count(symbols.begin(), symbols.end(), '*'));
}

bool CubePattern::contains(std::uint32_t u) const {
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        char c = symbols[static_cast<std::size_t>(i)];
        if (c == '*') continue;
        if (((u >> (d - 1 - i)) & 1) != static_cast<std::uint32_t>(c - '0')) return false;
    }
    return true;
}

std::uint64_t pattern_rank(const CubePattern& p) {
    std::uint64_t r = 0;
    for (char c : p.symbols) r = r * 3 + (c == '0' ? 0 : c == '1' ? 1 : 2);
    return r;
}

CubePattern pattern_from_rank(int d, std::uint64_t rank) {
    std::string s(static_cast<std::size_t>(d), '0');
    for (int i = d - 1; i >= 0; --i) {
        int digit = static_cast<int>(rank % 3);
        rank /= 3;
        s[static_cast<std::size_t>(i)] = digit == 0 ? '0' : digit == 1 ? '1' : '*';
    }
    return CubePattern(std::move(s));
}

CharacterIndex::CharacterIndex(int d_, std::uint32_t v_) : d(d_), v(v_) {
    if (d < 0 || d > 31) throw std::invalid_argument("character dimension out of range");
    if (d < 32 && (v >> d) != 0)
        throw std::invalid_argument("character index has bits beyond dimension");
}

int CharacterIndex::weight() const { return std::popcount(v); }

SetSystem gen_subcubes(int d) {
    if (d < 1 || d > 16) throw CapExceeded("gen_subcubes requires 1 <= d <= 16");
    const std::uint32_t points = std::uint32_t(1) << d;
    std::uint64_t pats = 1;
    for (int i = 0; i < d; ++i) pats *= 3;

    SetSystem sys;
    sys.ground.reserve(points);
    for (std::uint32_t u = 0; u < points; ++u) sys.ground.push_back(cube_label(u, d));
    sys.set_names.reserve(pats);
    sys.sets.reserve(pats);
    for (std::uint64_t r = 0; r < pats; ++r) {
        CubePattern p = pattern_from_rank(d, r);
        // Fixed bits form the representative; star bits are enumerated.
        std::uint32_t base = representative(p);
        std::vector<int> star_bits;
        for (int i = 0; i < d; ++i)
            if (p.symbols[static_cast<std::size_t>(i)] == '*')
                star_bits.push_back(d - 1 - i);
        Bitset member(points);
        for (std::uint32_t s = 0; s < (std::uint32_t(1) << star_bits.size()); ++s) {
            std::uint32_t u = base;
            for (std::size_t j = 0; j < star_bits.size(); ++j)
                if ((s >> j) & 1) u |= std::uint32_t(1) << star_bits[j];
            member.set(u);
        }
        sys.set_names.push_back(p.symbols);
        sys.sets.push_back(std::move(member));
    }
    return sys;
}

SignMatrix gen_characters(int d, int k) {
    if (d < 1 || d > 16) throw CapExceeded("gen_characters requires 1 <= d <= 16");
    if (k < 0 || k > d) throw std::invalid_argument("character weight must satisfy 0 <= k <= d");
    const std::uint32_t points = std::uint32_t(1) << d;
    std::vector<std::uint32_t> vs;
    for (std::uint32_t v = 0; v < points; ++v)
        if (std::popcount(v) == k) vs.push_back(v);

    SignMatrix m(vs.size(), points);
    for (std::size_t r = 0; r < vs.size(); ++r) {
        m.row_labels.push_back(cube_label(vs[r], d));
        for (std::uint32_t u = 0; u < points; ++u)
            m.at(r, u) = static_cast<std::int8_t>(character_value(vs[r], u));
    }
    for (std::uint32_t u = 0; u < points; ++u) m.col_labels.push_back(cube_label(u, d));
    return m;
}

SetSystem gen_hap(long long n, HapMode mode) {
    if (n < 1) throw CapExceeded("gen_hap requires n >= 1");
    if (mode == HapMode::Prefix && n > 5000)
        throw CapExceeded("gen_hap prefix mode materializes Theta(n log n) sets; n <= 5000");
    if (mode == HapMode::Multiples && n > 20000)
        throw CapExceeded("gen_hap multiples mode materializes n sets of n bits; n <= 20000");

    SetSystem sys;
    sys.ground.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) sys.ground.push_back(std::to_string(i));
    for (long long a = 1; a <= n; ++a) {
        const long long kmax = n / a;
        if (mode == HapMode::Prefix) {
            Bitset b(static_cast<std::size_t>(n));
            for (long long k = 1; k <= kmax; ++k) {
                b.set(static_cast<std::size_t>(k * a - 1));
                sys.set_names.push_back("a=" + std::to_string(a) + ",k=" + std::to_string(k));
                sys.sets.push_back(b);
            }
        } else {
            Bitset b(static_cast<std::size_t>(n));
            for (long long k = 1; k <= kmax; ++k) b.set(static_cast<std::size_t>(k * a - 1));
            sys.set_names.push_back("a=" + std::to_string(a));
            sys.sets.push_back(std::move(b));
        }
    }
    return sys;
}

SignMatrix gen_sylvester(int m) {
    if (m < 0 || m > 12) throw CapExceeded("gen_sylvester requires 0 <= m <= 12");
    const std::uint32_t n = std::uint32_t(1) << m;
    SignMatrix h(n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            h.at(i, j) = static_cast<std::int8_t>((std::popcount(i & j) & 1) ? -1 : +1);
    return h;
}

std::vector<std::uint64_t> first_primes(int count) {
    if (count <= 0) return {};
    std::size_t bound = 64;
    while (true) {
        std::vector<bool> composite(bound + 1, false);
        std::vector<std::uint64_t> primes;
        for (std::size_t p = 2; p <= bound; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
        }
        if (primes.size() >= static_cast<std::size_t>(count)) {
            primes.resize(static_cast<std::size_t>(count));
            return primes;
        }
        bound *= 2;
    }
}

void EmbeddingWitness::validate() const {
    if (d < 1) throw InvariantViolation("embedding witness dimension must be positive");
    const std::size_t points = std::size_t(1) << d;
    std::size_t pats = 1;
    for (int i = 0; i < d; ++i) pats *= 3;
    if (primes.size() != static_cast<std::size_t>(2 * d))
        throw InvariantViolation("embedding witness must carry 2d primes");
    std::vector<std::uint64_t> expect = first_primes(2 * d);
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (primes[i] != expect[i])
            throw InvariantViolation("embedding witness primes are not the first 2d primes");
    if (b_of_u.size() != points) throw InvariantViolation("b_of_u must have 2^d entries");
    if (a_of_v.size() != pats) throw InvariantViolation("a_of_v must have 3^d entries");
    for (std::uint32_t u = 0; u < points; ++u) {
        BigInt prod = 1;
        for (int i = 0; i < d; ++i)
            prod *= primes[static_cast<std::size_t>(2 * i + ((u >> (d - 1 - i)) & 1))];
        if (b_of_u[u] != prod) throw InvariantViolation("b_of_u entry is not the prime product");
    }
    for (std::size_t r = 0; r < pats; ++r) {
        CubePattern p = pattern_from_rank(d, r);
        BigInt prod = 1;
        for (int i = 0; i < d; ++i) {
            char c = p.symbols[static_cast<std::size_t>(i)];
            if (c != '*') prod *= primes[static_cast<std::size_t>(2 * i + (c - '0'))];
        }
        if (a_of_v[r] != prod) throw InvariantViolation("a_of_v entry is not the prime product");
    }
    if (n != b_of_u[points - 1]) throw InvariantViolation("witness n must equal b at the all-ones point");
}

EmbeddingWitness gen_embedding(int d) {
    if (d < 1 || d > 12) throw CapExceeded("gen_embedding requires 1 <= d <= 12");
    EmbeddingWitness w;
    w.d = d;
    for (std::uint64_t p : first_primes(2 * d)) w.primes.push_back(BigInt(p));

    const std::uint32_t points = std::uint32_t(1) << d;
    w.b_of_u.reserve(points);
    for (std::uint32_t u = 0; u < points; ++u) {
        BigInt prod = 1;
        for (int i = 0; i < d; ++i)
            prod *= w.primes[static_cast<std::size_t>(2 * i + ((u >> (d - 1 - i)) & 1))];
        w.b_of_u.push_back(prod);
    }
    std::uint64_t pats = 1;
    for (int i = 0; i < d; ++i) pats *= 3;
    w.a_of_v.reserve(pats);
    for (std::uint64_t r = 0; r < pats; ++r) {
        CubePattern p = pattern_from_rank(d, r);
        BigInt prod = 1;
        for (int i = 0; i < d; ++i) {
            char c = p.symbols[static_cast<std::size_t>(i)];
            if (c != '*') prod *= w.primes[static_cast<std::size_t>(2 * i + (c - '0'))];
        }
        w.a_of_v.push_back(prod);
    }
    w.n = w.b_of_u[points - 1]; // one prime from each pair, always the larger
    return w;
}

CubePattern extend_pattern(const CharacterIndex& v, std::uint32_t w) {
    const int k = v.weight();
    if (k < 32 && (w >> k) != 0)
        throw std::invalid_argument("extension bits exceed the character weight");
    std::string s(static_cast<std::size_t>(v.d), '*');
    int seen = 0;
    for (int i = 0; i < v.d; ++i) {
        if ((v.v >> (v.d - 1 - i)) & 1) {
            s[static_cast<std::size_t>(i)] = ((w >> (k - 1 - seen)) & 1) ? '1' : '0';
            ++seen;
        }
    }
    return CubePattern(std::move(s));
}

std::uint32_t representative(const CubePattern& p) {
    const int d = p.dim();
    std::uint32_t u = 0;
    for (int i = 0; i < d; ++i)
        if (p.symbols[static_cast<std::size_t>(i)] == '1') u |= std::uint32_t(1) << (d - 1 - i);
    return u;
}

} // namespace disclab
