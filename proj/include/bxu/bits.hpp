#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bxu {

// Set of element indices over a fixed universe, packed 64 per word.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset singleton(int n, int i) {
        Bitset b(n);
        b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    bool operator==(const Bitset&) const = default;

    // Orders sets by their ascending element lists; the set containing the
    // earliest differing element compares smaller. Used as the canonical
    // tie-breaker everywhere a "least conjugate" is needed.
    bool lex_less(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                std::uint64_t low = d & -d;
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                int b = __builtin_ctzll(x);
                f(int(i * 64) + b);
                x &= x - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
        for (auto x : w_) h = (h ^ x) * 0x100000001b3ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Vector over F2, indexed by subgroup classes in most uses.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void operator^=(const F2Vec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    // Index of the lowest set bit; -1 if zero.
    int lowest_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }

    bool operator==(const F2Vec&) const = default;

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// F2 row space kept in reduced row-echelon form, rows ordered by pivot.
class F2Span {
public:
    F2Span() = default;
    explicit F2Span(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<F2Vec>& rows() const { return rows_; }

    // Reduces v against the span; inserts the remainder if nonzero.
    // Returns true when the dimension grew.
    bool add(F2Vec v) {
        reduce(v);
        if (!v.any()) return false;
        int p = v.lowest_set();
        for (auto& r : rows_)
            if (r.test(p)) r ^= v;
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(F2Vec v) const {
        reduce(v);
        return !v.any();
    }

    bool contains_span(const F2Span& other) const {
        for (const auto& r : other.rows())
            if (!contains(r)) return false;
        return true;
    }

    bool operator==(const F2Span& o) const {
        return width_ == o.width_ && rows_ == o.rows_;
    }

private:
    void reduce(F2Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.test(pivots_[i])) v ^= rows_[i];
    }

    int width_ = 0;
    std::vector<F2Vec> rows_;
    std::vector<int> pivots_;
};

} // namespace bxu
