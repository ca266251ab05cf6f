#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace disclab {

// Fixed-size bitset over a ground set, packed into 64-bit words.
// Unlike std::bitset the size is a runtime value; unlike
// std::vector<bool> the word layout is exposed enough for popcount
// tricks. Tail bits past size() are kept zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
        Bitset b(n);
        for (std::size_t i : idx) b.set(i);
        return b;
    }

    // Low 'n' bits of a word mask (n <= 64), bit i = element i.
    static Bitset from_mask(std::size_t n, std::uint64_t mask) {
        if (n > 64) throw std::invalid_argument("from_mask: n > 64");
        Bitset b(n);
        if (n > 0) b.w_[0] = (n == 64) ? mask : (mask & ((std::uint64_t(1) << n) - 1));
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool value = true) {
        check(i);
        if (value)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    Bitset intersect(const Bitset& o) const {
        require_same(o);
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    std::size_t count_and(const Bitset& o) const {
        require_same(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Ascending set-bit indices.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                out.push_back(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::uint64_t to_mask() const {
        if (n_ > 64) throw std::logic_error("to_mask: size > 64");
        return w_.empty() ? 0 : w_[0];
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void check(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("Bitset index out of range");
    }
    void require_same(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace disclab
