#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vdc {

/// Exact arbitrary-precision rational. All internal arithmetic is exact;
/// doubles appear only at the reporting boundary.
using Rat = mpq_class;

/// Raised on bad user input (bad base, non-bijection, non-coprime, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a configured node/size budget is exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational from 64-bit parts (mpq_class has no long long overloads).
inline Rat rat(long long num, long long den = 1) {
    static_assert(sizeof(long) == 8, "64-bit long assumed");
    if (den == 0) throw validation_error("rat: zero denominator");
    Rat r;
    r.get_num() = static_cast<long>(num);
    r.get_den() = static_cast<long>(den);
    r.canonicalize();
    return r;
}

/// Fractional part in [0,1) of the 1-periodic extension.
Rat frac1(const Rat& x);

mpz_class rat_floor(const Rat& x);

/// Canonical "num/den" rendering (reduced, den > 0), e.g. "3/4", "5/1".
std::string rat_str(const Rat& x);

/// Parses "num/den" or a bare integer "num".
Rat parse_rat(std::string_view s);

double to_double(const Rat& x);

/// 17 significant digits, round-half-even (IEEE default).
std::string float17(double x);

/// Closed rational interval [lo, hi]; lo == hi means the value is exact.
struct Enclosure {
    Rat lo, hi;

    Enclosure() = default;
    explicit Enclosure(const Rat& v) : lo(v), hi(v) {}
    Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("enclosure: lo > hi");
    }

    bool exact() const { return lo == hi; }
    Rat width() const { return Rat(hi - lo); }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }

    Enclosure& operator+=(const Rat& v) {
        lo += v;
        hi += v;
        return *this;
    }
    Enclosure& operator+=(const Enclosure& e) {
        lo += e.lo;
        hi += e.hi;
        return *this;
    }
    friend Enclosure max(const Enclosure& a, const Enclosure& b) {
        return Enclosure(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
    }
    friend bool operator==(const Enclosure& a, const Enclosure& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Directed-rounded double interval, for printing enclosures like
/// [lo, hi] / log(base) without losing the enclosure property.
struct FloatInterval {
    double lo, hi;
};

/// [lo, hi] / log(base), outward-rounded. Requires lo, hi >= 0, base >= 2.
FloatInterval over_log(const Rat& lo, const Rat& hi, long base);

}  // namespace vdc
