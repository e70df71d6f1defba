#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace fgeo {

// Largest vector width used anywhere: PG(3n-1,q) with n <= 6 gives 18,
// plus headroom for caller-supplied subspace files.
inline constexpr int kMaxDim = 24;

/// Fixed-capacity byte vector used for field-element coefficient vectors and
/// for coordinate rows over a small field. Value type, ordered, hashable.
struct SmallVec {
    std::array<std::uint8_t, kMaxDim> a{};
    std::uint8_t n = 0;

    SmallVec() = default;
    explicit SmallVec(int len) : n(static_cast<std::uint8_t>(len)) {
        if (len < 0 || len > kMaxDim) throw std::length_error("SmallVec: length out of range");
    }
    SmallVec(std::initializer_list<int> xs) {
        if (xs.size() > kMaxDim) throw std::length_error("SmallVec: too long");
        for (int x : xs) a[n++] = static_cast<std::uint8_t>(x);
    }

    int size() const { return n; }
    bool empty() const { return n == 0; }
    std::uint8_t& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    std::uint8_t operator[](int i) const { return a[static_cast<std::size_t>(i)]; }

    void push_back(std::uint8_t x) {
        if (n >= kMaxDim) throw std::length_error("SmallVec: capacity exceeded");
        a[n++] = x;
    }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (a[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    int first_nonzero() const {
        for (int i = 0; i < n; ++i)
            if (a[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    friend bool operator==(const SmallVec& x, const SmallVec& y) {
        if (x.n != y.n) return false;
        for (int i = 0; i < x.n; ++i)
            if (x.a[static_cast<std::size_t>(i)] != y.a[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator!=(const SmallVec& x, const SmallVec& y) { return !(x == y); }
    friend bool operator<(const SmallVec& x, const SmallVec& y) {
        if (x.n != y.n) return x.n < y.n;
        for (int i = 0; i < x.n; ++i) {
            auto xi = x.a[static_cast<std::size_t>(i)], yi = y.a[static_cast<std::size_t>(i)];
            if (xi != yi) return xi < yi;
        }
        return false;
    }
};

struct SmallVecHash {
    std::size_t operator()(const SmallVec& v) const {
        std::size_t h = 1469598103934665603ull;
        h = (h ^ v.n) * 1099511628211ull;
        for (int i = 0; i < v.n; ++i)
            h = (h ^ v.a[static_cast<std::size_t>(i)]) * 1099511628211ull;
        return h;
    }
};

} // namespace fgeo
