#include "nilrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilrep {

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest degree first, no trailing zeros

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; caller guarantees divisibility.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        std::size_t shift = num.size() - den.size();
        mpz_class c = num.back() / den.back();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
    return q;
}

// Phi_n by dividing x^n - 1 by all lower-order cyclotomic factors.
ZPoly cyclotomic_poly(long n, std::map<long, ZPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    ZPoly p(static_cast<std::size_t>(n) + 1, mpz_class(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = divide_exact(std::move(p), cyclotomic_poly(d, memo));
    }
    memo[n] = p;
    return p;
}

}  // namespace

CycloField::CycloField(long l) : l_(l) {
    if (l < 5 || l % 2 == 0)
        throw DomainError("root order must be an odd integer >= 5, got " + std::to_string(l));
    for (long d : {1L, 2L})
        if (mod_floor(2 * d, l) == 0)
            throw InternalError("eps^{2d} = 1 for d = " + std::to_string(d));

    std::map<long, ZPoly> memo;
    phi_ = cyclotomic_poly(l, memo);
    deg_ = phi_.size() - 1;

    // x^{deg+j} mod phi, built row by row from x^deg = -(phi minus leading term).
    std::vector<mpq_class> row(deg_);
    for (std::size_t i = 0; i < deg_; ++i) row[i] = mpq_class(-phi_[i]);
    red_rows_.push_back(row);
    for (std::size_t j = 1; j + 1 < deg_; ++j) {
        std::vector<mpq_class> next(deg_, mpq_class(0));
        const std::vector<mpq_class>& prev = red_rows_.back();
        mpq_class top = prev[deg_ - 1];
        for (std::size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = prev[i];
        if (top != 0)
            for (std::size_t i = 0; i < deg_; ++i) next[i] += top * red_rows_[0][i];
        red_rows_.push_back(std::move(next));
    }

    powers_.resize(static_cast<std::size_t>(l));
    std::vector<mpq_class> cur(deg_, mpq_class(0));
    cur[0] = 1;
    for (long k = 0; k < l; ++k) {
        powers_[static_cast<std::size_t>(k)] = cur;
        // multiply by eps
        std::vector<mpq_class> next(deg_, mpq_class(0));
        mpq_class top = cur[deg_ - 1];
        for (std::size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = cur[i];
        if (top != 0)
            for (std::size_t i = 0; i < deg_; ++i) next[i] += top * red_rows_[0][i];
        cur = std::move(next);
    }
}

FieldElem CycloField::make(std::vector<mpq_class> c) const {
    while (!c.empty() && c.back() == 0) c.pop_back();
    FieldElem e;
    e.coeff_ = std::move(c);
    return e;
}

void CycloField::reduce(std::vector<mpq_class>& c) const {
    for (std::size_t k = c.size(); k-- > deg_;) {
        if (c[k] == 0) continue;
        const std::vector<mpq_class>& row = red_rows_[k - deg_];
        for (std::size_t i = 0; i < deg_; ++i)
            if (row[i] != 0) c[i] += c[k] * row[i];
        c[k] = 0;
    }
    c.resize(std::min(c.size(), deg_));
}

FieldElem CycloField::from_int(long v) const {
    if (v == 0) return Elem{};
    std::vector<mpq_class> c(1, mpq_class(v));
    return make(std::move(c));
}

FieldElem CycloField::from_rational(const mpq_class& v) const {
    if (v == 0) return Elem{};
    std::vector<mpq_class> c(1, v);
    return make(std::move(c));
}

FieldElem CycloField::add(const Elem& x, const Elem& y) const {
    std::vector<mpq_class> c(std::max(x.coeff_.size(), y.coeff_.size()), mpq_class(0));
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) c[i] = x.coeff_[i];
    for (std::size_t i = 0; i < y.coeff_.size(); ++i) c[i] += y.coeff_[i];
    return make(std::move(c));
}

FieldElem CycloField::sub(const Elem& x, const Elem& y) const {
    std::vector<mpq_class> c(std::max(x.coeff_.size(), y.coeff_.size()), mpq_class(0));
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) c[i] = x.coeff_[i];
    for (std::size_t i = 0; i < y.coeff_.size(); ++i) c[i] -= y.coeff_[i];
    return make(std::move(c));
}

FieldElem CycloField::neg(const Elem& x) const {
    std::vector<mpq_class> c = x.coeff_;
    for (auto& v : c) v = -v;
    return make(std::move(c));
}

FieldElem CycloField::mul(const Elem& x, const Elem& y) const {
    if (x.is_zero() || y.is_zero()) return Elem{};
    std::vector<mpq_class> c(x.coeff_.size() + y.coeff_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) {
        if (x.coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeff_.size(); ++j)
            if (y.coeff_[j] != 0) c[i + j] += x.coeff_[i] * y.coeff_[j];
    }
    reduce(c);
    return make(std::move(c));
}

FieldElem CycloField::inv(const Elem& x) const {
    if (x.is_zero()) throw DomainError("division by zero in Q(eps)");
    if (x.coeff_.size() == 1) {
        std::vector<mpq_class> c{1 / x.coeff_[0]};
        return make(std::move(c));
    }
    // Extended Euclid over Q[x] against the (irreducible) modulus.
    using QPoly = std::vector<mpq_class>;
    auto qtrim = [](QPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    QPoly r0(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) r0[i] = mpq_class(phi_[i]);
    QPoly r1 = x.coeff_;
    QPoly s0{}, s1{mpq_class(1)};
    while (true) {
        // divide r0 by r1: r0 = q r1 + r
        QPoly rem = r0, q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            mpq_class c = rem.back() / r1.back();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qtrim(rem);
        }
        // s_next = s0 - q s1
        QPoly snext = s0;
        snext.resize(std::max(snext.size(), q.size() + s1.size() - (s1.empty() ? 0 : 1)), mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        }
        qtrim(snext);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(snext);
        if (r1.empty()) break;
        if (r1.size() == 1) {
            // unit remainder: inverse = s1 / r1[0]
            for (auto& v : s1) v /= r1[0];
            std::vector<mpq_class> c = std::move(s1);
            reduce(c);
            return make(std::move(c));
        }
    }
    throw InternalError("nonzero element had no inverse mod the cyclotomic polynomial");
}

FieldElem CycloField::eps_pow(long k) const {
    return make(powers_[static_cast<std::size_t>(mod_floor(k, l_))]);
}

FieldElem CycloField::quantum_int(long a, long d) const {
    if (d <= 0) throw DomainError("quantum integer needs d > 0");
    if (a < 0) return neg(quantum_int(-a, d));
    std::vector<mpq_class> c(deg_, mpq_class(0));
    for (long j = 0; j < a; ++j) {
        const auto& p = powers_[static_cast<std::size_t>(mod_floor(d * (a - 1 - 2 * j), l_))];
        for (std::size_t i = 0; i < p.size(); ++i) c[i] += p[i];
    }
    return make(std::move(c));
}

FieldElem CycloField::quantum_factorial(long k, long d) const {
    if (k < 0) throw DomainError("quantum factorial needs k >= 0");
    if (k >= l_)
        throw DomainError("[k]! vanishes for k >= l (k = " + std::to_string(k) + ")");
    Elem acc = one();
    for (long j = 1; j <= k; ++j) acc = mul(acc, quantum_int(j, d));
    return acc;
}

std::string CycloField::to_string(const Elem& x) const {
    if (x.coeff_.empty()) return "[0]";
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) {
        if (i) out << ", ";
        out << x.coeff_[i].get_str();
    }
    out << "]";
    return out.str();
}

FieldElem CycloField::parse(const std::string& text) const {
    std::size_t a = text.find('['), b = text.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b <= a)
        throw StructuralError("field element text must be a bracketed list: " + text);
    std::string body = text.substr(a + 1, b - a - 1);
    std::vector<mpq_class> c;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
        std::size_t s = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (s == std::string::npos) {
            if (c.empty() && body.find_first_not_of(" \t") == std::string::npos) break;
            throw StructuralError("empty coefficient in field element text");
        }
        mpq_class v(item.substr(s, e - s + 1));
        v.canonicalize();
        c.push_back(v);
    }
    if (c.size() > deg_)
        throw StructuralError("field element text has more coefficients than the field degree");
    return make(std::move(c));
}

}  // namespace nilrep
