#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/mod_arith.hpp"

namespace nilrep {

/// Element of Q(eps), eps a primitive l-th root of unity, as a residue mod
/// the l-th cyclotomic polynomial in the power basis 1, eps, eps^2, ...
/// Always kept in canonical (fully reduced) form, so two elements are equal
/// exactly when their coefficient vectors are equal.
class FieldElem {
  public:
    FieldElem() = default;

    bool operator==(const FieldElem& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const FieldElem& o) const { return coeff_ != o.coeff_; }

    bool is_zero() const { return coeff_.empty(); }

    /// Coefficients, lowest degree first. Trailing zeros are stripped, so the
    /// zero element has an empty vector.
    const std::vector<mpq_class>& coeffs() const { return coeff_; }

  private:
    friend class CycloField;
    std::vector<mpq_class> coeff_;
};

/// Exact arithmetic context for a fixed root order l (odd, >= 5).
///
/// All operations are pure and elements are immutable, so a single field can
/// be shared freely between threads.
class CycloField {
  public:
    using Elem = FieldElem;

    explicit CycloField(long l);

    long root_order() const { return l_; }
    /// Degree of the l-th cyclotomic polynomial (= dimension of Q(eps) over Q).
    std::size_t degree() const { return deg_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_int(1); }
    Elem from_int(long v) const;
    Elem from_rational(const mpq_class& v) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    /// Multiplicative inverse; x = 0 raises DomainError.
    Elem inv(const Elem& x) const;

    bool is_zero(const Elem& x) const { return x.is_zero(); }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    /// eps^k for any integer k (reduced mod l).
    Elem eps_pow(long k) const;

    /// Quantum integer [a] at eps^d, computed as the Laurent sum
    /// eps^{d(a-1)} + eps^{d(a-3)} + ... + eps^{-d(a-1)}; [-a] = -[a].
    Elem quantum_int(long a, long d) const;

    /// [k]! at eps^d; k >= l raises DomainError since the factor [l] vanishes.
    Elem quantum_factorial(long k, long d) const;

    /// Canonical text form: rational coefficients, lowest degree first,
    /// trailing zeros trimmed, e.g. "[-1/2, 0, 1]" for -1/2 + eps^2.
    std::string to_string(const Elem& x) const;
    Elem parse(const std::string& text) const;

  private:
    Elem make(std::vector<mpq_class> c) const;
    void reduce(std::vector<mpq_class>& c) const;

    long l_ = 0;
    std::size_t deg_ = 0;
    std::vector<mpz_class> phi_;                    // monic cyclotomic polynomial
    std::vector<std::vector<mpq_class>> powers_;    // eps^k mod phi, 0 <= k < l
    std::vector<std::vector<mpq_class>> red_rows_;  // x^{deg+j} mod phi
};

}  // namespace nilrep
