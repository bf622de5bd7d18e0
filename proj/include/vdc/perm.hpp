#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vdc/rat.hpp"

namespace vdc {

/// A permutation of {0,...,b-1}, stored as a dense image array.
/// Immutable after construction; the constructor enforces bijectivity.
class Permutation {
   public:
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int b);

    int base() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& image() const { return img_; }

    bool operator==(const Permutation&) const = default;

    /// Canonical text form: comma-separated images, no spaces.
    std::string str() const;
    /// Parses the canonical text form; base is inferred from the length.
    static Permutation parse(std::string_view s);

    /// FNV-1a of the canonical text form, as 16 hex digits.
    std::string hash() const;

   private:
    std::vector<int> img_;
};

struct DigitVector {
    int base = 2;
    std::vector<int> digits;  // a_0, a_1, ...; no trailing zeros stored

    bool operator==(const DigitVector&) const = default;
};

/// Base-b expansion of n, least significant digit first.
DigitVector digits(unsigned long long n, int base);

/// tau_b(k) = b-1-k.
Permutation tau(int b);

/// sigma'(x) = sigma(x) + a (mod b), 0 < a < b.
Permutation shift(const Permutation& sigma, int a);

/// sigma''(x) = -sigma(x) (mod b).
Permutation reflect(const Permutation& sigma);

/// (s o t)(x) = s(t(x)).
Permutation compose(const Permutation& s, const Permutation& t);

/// Faure's product: (sigma.tau)(k''b + k') = c*sigma(k') + tau(k'')
/// for sigma in S_b, tau in S_c; the result lives in S_{bc}.
Permutation intricate(const Permutation& sigma, const Permutation& tau_p);

/// Faure's omega_b, built bottom-up from omega_2 = (0,1):
/// even b:  omega_b = id_2 . omega_{b/2} (intrication),
/// odd b:   insertion of the middle value into omega_{b-1}.
/// Intermediate bases are cached process-wide.
Permutation faure_omega(int b);

bool is_prime(long p);

/// sigma_{a0,a1}(x) = a0*x + a1 mod p. p prime, a0 != 0.
Permutation affine(long p, long a0, long a1);

/// pi_{a0,a1,a2}(x) = (a0*x + a1)^(p-2) + a2 mod p  (x^(p-2) inverts,
/// fixing 0). p prime, a0 != 0.
Permutation fractional_affine(long p, long a0, long a1, long a2);

/// tau_{A0,A1,A2,A3}(x) = ((A0*x + A1)^(p-2) + A2)^(p-2) + A3 mod p.
/// p prime, A0, A2 != 0.
Permutation carlitz2(long p, long A0, long A1, long A2, long A3);

/// Partner parameters: carlitz2(p,A0,A1,A2,0) agrees with
/// fractional_affine(p,a0,a1,a2) except at X1, X2 where values swap.
struct CarlitzPartner {
    long A0, A1, A2;
    long X1, X2;
};
CarlitzPartner carlitz_partner(long p, long a0, long a1, long a2);

/// Canonical continued fraction [0; q_1,...,q_m] of a0/p with last
/// quotient >= 2, which makes alpha_max well defined.
struct ContinuedFraction {
    long num = 0, den = 1;
    std::vector<long> quotients;
    long alpha_max = 0;
};
ContinuedFraction continued_fraction(long a0, long p);

/// F_1 = F_2 = 1.
mpz_class fibonacci(int n);

/// z(1)=z(2)=z(3)=1, z(4)=2, z(n) = z(n-1) + z(n-3) + z(n-4).
mpz_class z_seq(int n);

}  // namespace vdc
