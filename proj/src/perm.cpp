#include "vdc/perm.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

namespace vdc {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    const int b = static_cast<int>(img_.size());
    if (b < 2) throw validation_error("permutation base must be >= 2");
    std::vector<char> seen(static_cast<size_t>(b), 0);
    for (int v : img_) {
        if (v < 0 || v >= b) throw validation_error("permutation image out of range");
        if (seen[static_cast<size_t>(v)]) throw validation_error("permutation image repeats a value");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int b) {
    if (b < 2) throw validation_error("base must be >= 2");
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = i;
    return Permutation(std::move(img));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(img_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view s) {
    std::vector<int> img;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        int v = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + next, v);
        if (ec != std::errc() || p != s.data() + next)
            throw validation_error("malformed permutation literal");
        img.push_back(v);
        if (next == s.size()) break;
        pos = next + 1;
    }
    return Permutation(std::move(img));
}

std::string Permutation::hash() const {
    uint64_t h = 1469598103934665603ull;
    for (char c : str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

DigitVector digits(unsigned long long n, int base) {
    if (base < 2) throw validation_error("digits: base must be >= 2");
    DigitVector d;
    d.base = base;
    while (n) {
        d.digits.push_back(static_cast<int>(n % static_cast<unsigned>(base)));
        n /= static_cast<unsigned>(base);
    }
    return d;
}

Permutation tau(int b) {
    if (b < 2) throw validation_error("base must be >= 2");
    std::vector<int> img(static_cast<size_t>(b));
    for (int k = 0; k < b; ++k) img[static_cast<size_t>(k)] = b - k - 1;
    return Permutation(std::move(img));
}

Permutation shift(const Permutation& sigma, int a) {
    const int b = sigma.base();
    if (a <= 0 || a >= b) throw validation_error("shift: need 0 < a < b");
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = (sigma(i) + a) % b;
    return Permutation(std::move(img));
}

Permutation reflect(const Permutation& sigma) {
    const int b = sigma.base();
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = (b - sigma(i)) % b;
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.base() != t.base()) throw validation_error("compose: base mismatch");
    const int b = s.base();
    std::vector<int> img(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) img[static_cast<size_t>(i)] = s(t(i));
    return Permutation(std::move(img));
}

Permutation intricate(const Permutation& sigma, const Permutation& tau_p) {
    const int b = sigma.base(), c = tau_p.base();
    std::vector<int> img(static_cast<size_t>(b) * static_cast<size_t>(c));
    for (int k2 = 0; k2 < c; ++k2)
        for (int k1 = 0; k1 < b; ++k1)
            img[static_cast<size_t>(k2) * b + k1] = c * sigma(k1) + tau_p(k2);
    return Permutation(std::move(img));
}

namespace {
std::mutex omega_mu;
std::map<int, Permutation> omega_cache;
}  // namespace

Permutation faure_omega(int b) {
    if (b < 2) throw validation_error("base must be >= 2");
    std::scoped_lock lk(omega_mu);
    if (omega_cache.empty()) omega_cache.emplace(2, Permutation({0, 1}));
    auto it = omega_cache.find(b);
    if (it != omega_cache.end()) return it->second;
    for (int bb = 3; bb <= b; ++bb) {
        if (omega_cache.count(bb)) continue;
        if (bb % 2 == 0) {
            omega_cache.emplace(bb, intricate(Permutation({0, 1}), omega_cache.at(bb / 2)));
        } else {
            const int h = bb / 2;  // bb = 2h+1
            const Permutation& prev = omega_cache.at(bb - 1);
            std::vector<int> img(static_cast<size_t>(bb));
            for (int k = 0; k < h; ++k) {
                int v = prev(k);
                img[static_cast<size_t>(k)] = v < h ? v : v + 1;
            }
            img[static_cast<size_t>(h)] = h;
            for (int k = h + 1; k < bb; ++k) {
                int v = prev(k - 1);
                img[static_cast<size_t>(k)] = v < h ? v : v + 1;
            }
            omega_cache.emplace(bb, Permutation(std::move(img)));
        }
    }
    return omega_cache.at(b);
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {
long mod(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

long pow_mod(long x, long e, long p) {
    long r = 1;
    x = mod(x, p);
    for (; e; e >>= 1) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
    }
    return r;
}

/// x^(p-2) mod p: the modular inverse for x != 0, and 0 -> 0.
long inv_or_zero(long x, long p) {
    x = mod(x, p);
    return x == 0 ? 0 : pow_mod(x, p - 2, p);
}

void require_prime(long p) {
    if (p > 1000000) throw validation_error("modulus too large for trial division");
    if (!is_prime(p)) throw validation_error("modulus is not prime");
}
}  // namespace

Permutation affine(long p, long a0, long a1) {
    // multiplication by a0 permutes Z_p iff gcd(a0, p) = 1; primality is
    // only needed where modular inversion appears (the fractional family).
    // Fibonacci bases (21, 34, ...) with coprime multipliers are fine here.
    if (p < 2) throw validation_error("affine: base must be >= 2");
    if (mod(a0, p) == 0 || std::__gcd(mod(a0, p), p) != 1)
        throw validation_error("affine: a0 must be invertible mod p");
    std::vector<int> img(static_cast<size_t>(p));
    for (long x = 0; x < p; ++x) img[static_cast<size_t>(x)] = static_cast<int>(mod(a0 * x + a1, p));
    return Permutation(std::move(img));
}

Permutation fractional_affine(long p, long a0, long a1, long a2) {
    require_prime(p);
    if (mod(a0, p) == 0) throw validation_error("fractional_affine: a0 must be nonzero mod p");
    std::vector<int> img(static_cast<size_t>(p));
    for (long x = 0; x < p; ++x)
        img[static_cast<size_t>(x)] = static_cast<int>(mod(inv_or_zero(a0 * x + a1, p) + a2, p));
    return Permutation(std::move(img));
}

Permutation carlitz2(long p, long A0, long A1, long A2, long A3) {
    require_prime(p);
    if (mod(A0, p) == 0 || mod(A2, p) == 0)
        throw validation_error("carlitz2: A0 and A2 must be nonzero mod p");
    std::vector<int> img(static_cast<size_t>(p));
    for (long x = 0; x < p; ++x) {
        long y = inv_or_zero(A0 * x + A1, p);
        img[static_cast<size_t>(x)] = static_cast<int>(mod(inv_or_zero(y + A2, p) + A3, p));
    }
    return Permutation(std::move(img));
}

CarlitzPartner carlitz_partner(long p, long a0, long a1, long a2) {
    require_prime(p);
    if (mod(a0, p) == 0) throw validation_error("carlitz_partner: a0 must be nonzero mod p");
    if (mod(a2, p) == 0) throw validation_error("carlitz_partner: a2 must be nonzero mod p");
    CarlitzPartner out;
    out.A0 = mod(-a0 * a2 % p * a2, p);
    out.A1 = mod(-a1 * a2 % p * a2 - a2, p);
    out.A2 = inv_or_zero(a2, p);
    out.X1 = mod(-(a1 * a2 + 1) % p * inv_or_zero(a0 * a2, p), p);
    out.X2 = mod(-a1 % p * inv_or_zero(a0, p), p);
    return out;
}

ContinuedFraction continued_fraction(long a0, long p) {
    if (!(0 < a0 && a0 < p)) throw validation_error("continued_fraction: need 0 < a0 < p");
    if (std::__gcd(a0, p) != 1) throw validation_error("continued_fraction: a0 and p not coprime");
    ContinuedFraction cf;
    cf.num = a0;
    cf.den = p;
    long a = p, b = a0;
    while (b) {
        cf.quotients.push_back(a / b);
        long r = a % b;
        a = b;
        b = r;
    }
    // canonical form: fold a trailing 1 into the previous quotient
    if (cf.quotients.size() >= 2 && cf.quotients.back() == 1) {
        cf.quotients.pop_back();
        cf.quotients.back() += 1;
    }
    cf.alpha_max = *std::max_element(cf.quotients.begin(), cf.quotients.end());
    return cf;
}

mpz_class fibonacci(int n) {
    if (n < 1) throw validation_error("fibonacci: n >= 1");
    mpz_class a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class z_seq(int n) {
    if (n < 1) throw validation_error("z_seq: n >= 1");
    std::vector<mpz_class> z{1, 1, 1, 2};
    while (static_cast<int>(z.size()) < n) {
        size_t m = z.size();
        z.push_back(z[m - 1] + z[m - 3] + z[m - 4]);
    }
    return z[static_cast<size_t>(n - 1)];
}

}  // namespace vdc
