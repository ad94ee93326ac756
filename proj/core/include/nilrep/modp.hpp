#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/mod_arith.hpp"

namespace nilrep {

/// Homomorphic image of Q(eps) in a prime field F_p with l | p-1: eps maps to
/// a fixed element of multiplicative order l. Drop-in coefficient backend for
/// fast randomized rank and dimension estimates; the exact field stays the
/// source of truth.
class ModpField {
  public:
    using Elem = std::uint64_t;

    ModpField(long l, std::uint64_t p);

    long root_order() const { return l_; }
    std::uint64_t prime() const { return p_; }
    std::uint64_t eps_image() const { return g_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const;

    Elem add(Elem x, Elem y) const { Elem s = x + y; return s >= p_ || s < x ? s - p_ : s; }
    Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p_ - y; }
    Elem mul(Elem x, Elem y) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(x) * y) % p_);
    }
    Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
    Elem inv(Elem x) const;

    bool is_zero(Elem x) const { return x == 0; }
    bool eq(Elem x, Elem y) const { return x == y; }

    Elem eps_pow(long k) const;
    Elem quantum_int(long a, long d) const;
    Elem quantum_factorial(long k, long d) const;

    std::string to_string(Elem x) const { return std::to_string(x); }
    Elem parse(const std::string& text) const;

    static bool is_prime(std::uint64_t p);

  private:
    Elem pow(Elem base, std::uint64_t e) const;

    long l_ = 0;
    std::uint64_t p_ = 0;
    std::uint64_t g_ = 0;                 // element of order l
    std::vector<Elem> powers_;            // g^k, 0 <= k < l
};

}  // namespace nilrep
