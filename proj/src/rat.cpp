#include "vdc/rat.hpp"

#include <cfloat>
#include <charconv>
#include <cstdio>

namespace vdc {

mpz_class rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rat frac1(const Rat& x) {
    Rat r = x - Rat(rat_floor(x));
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw validation_error("empty rational");
    std::string t(s);
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(t);
            return Rat(n);
        }
        mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) throw validation_error("zero denominator: " + t);
        Rat r;
        r.get_num() = num;
        r.get_den() = den;
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational: " + t);
    }
}

double to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {
double down(double x) { return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL); }
double up(double x) { return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL); }
}  // namespace

FloatInterval over_log(const Rat& lo, const Rat& hi, long base) {
    if (base < 2) throw validation_error("over_log: base must be >= 2");
    // mpq_get_d truncates toward zero; nudge a couple of ulps outward on top
    // of the 1-ulp log error so the printed interval stays an enclosure.
    double lg = std::log(static_cast<double>(base));
    double lg_lo = down(lg), lg_hi = up(lg);
    double l = down(to_double(lo) >= 0 ? down(to_double(lo)) / lg_hi
                                       : to_double(lo) / lg_lo);
    double h = up(up(to_double(hi)) / lg_lo);
    return {l, h};
}

}  // namespace vdc
