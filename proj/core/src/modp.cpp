#include "nilrep/modp.hpp"

#include "nilrep/cyclotomic.hpp"

namespace nilrep {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool ModpField::is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        if (p % q == 0) return p == q;
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % p, d, p);
        if (x == 0 || x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

ModpField::ModpField(long l, std::uint64_t p) : l_(l), p_(p) {
    if (l < 5 || l % 2 == 0)
        throw DomainError("root order must be an odd integer >= 5, got " + std::to_string(l));
    if (!is_prime(p)) throw DomainError("modp backend needs a prime modulus");
    if ((p - 1) % static_cast<std::uint64_t>(l) != 0)
        throw DomainError("modp backend needs l | p-1 so F_p contains an order-l element");

    // primes dividing l, for the order check
    std::vector<long> lfac;
    long rest = l;
    for (long q = 2; q * q <= rest; ++q)
        while (rest % q == 0) { if (lfac.empty() || lfac.back() != q) lfac.push_back(q); rest /= q; }
    if (rest > 1) lfac.push_back(rest);

    for (std::uint64_t x = 2; x < p; ++x) {
        std::uint64_t cand = powmod(x, (p - 1) / static_cast<std::uint64_t>(l), p);
        if (cand == 1) continue;
        bool full_order = true;
        for (long q : lfac)
            if (powmod(cand, static_cast<std::uint64_t>(l / q), p) == 1) { full_order = false; break; }
        if (full_order) { g_ = cand; break; }
    }
    if (g_ == 0) throw InternalError("no order-l element found in F_p");

    powers_.resize(static_cast<std::size_t>(l));
    Elem cur = 1;
    for (long k = 0; k < l; ++k) {
        powers_[static_cast<std::size_t>(k)] = cur;
        cur = mul(cur, g_);
    }
}

ModpField::Elem ModpField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
}

ModpField::Elem ModpField::inv(Elem x) const {
    if (x == 0) throw DomainError("division by zero in F_p");
    return powmod(x, p_ - 2, p_);
}

ModpField::Elem ModpField::pow(Elem base, std::uint64_t e) const { return powmod(base, e, p_); }

ModpField::Elem ModpField::eps_pow(long k) const {
    return powers_[static_cast<std::size_t>(mod_floor(k, l_))];
}

ModpField::Elem ModpField::quantum_int(long a, long d) const {
    if (d <= 0) throw DomainError("quantum integer needs d > 0");
    if (a < 0) return neg(quantum_int(-a, d));
    Elem acc = 0;
    for (long j = 0; j < a; ++j) acc = add(acc, eps_pow(d * (a - 1 - 2 * j)));
    return acc;
}

ModpField::Elem ModpField::quantum_factorial(long k, long d) const {
    if (k < 0) throw DomainError("quantum factorial needs k >= 0");
    if (k >= l_) throw DomainError("[k]! vanishes for k >= l");
    Elem acc = 1;
    for (long j = 1; j <= k; ++j) acc = mul(acc, quantum_int(j, d));
    return acc;
}

ModpField::Elem ModpField::parse(const std::string& text) const {
    return std::stoull(text) % p_;
}

}  // namespace nilrep
