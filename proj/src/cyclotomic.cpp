#include "entgeo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entgeo {

namespace {

// Polynomial helpers.  Vectors are coefficient lists, low degree first.

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
    trim(num);
    if (num.empty()) return {};
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        if (c == 0) continue;
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Remainder of p mod the monic integer polynomial phi.
std::vector<Rational> poly_mod(std::vector<Rational> p,
                               const std::vector<mpz_class>& phi) {
    trim(p);
    const std::size_t d = phi.size() - 1;
    while (p.size() > d) {
        Rational c = p.back();
        std::size_t shift = p.size() - 1 - d;
        if (!c.is_zero())
            for (std::size_t j = 0; j < d; ++j)
                p[shift + j] -= c * Rational(mpz_class(phi[j]), mpz_class(1));
        p.pop_back();
        trim(p);
    }
    return p;
}

// Quotient and remainder over Q, divisor nonzero.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
    trim(num);
    if (den.empty()) throw std::logic_error("polynomial division by zero");
    if (num.size() < den.size()) return {{}, num};
    std::vector<Rational> q(num.size() - den.size() + 1);
    Rational lead_inv = den.back().inverse();
    for (std::size_t i = q.size(); i-- > 0;) {
        Rational c = num[i + den.size() - 1] * lead_inv;
        if (c.is_zero()) continue;
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    trim(num);
    trim(q);
    return {q, num};
}

std::vector<Rational> to_rational(const std::vector<mpz_class>& p) {
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c, mpz_class(1));
    return out;
}

}  // namespace

unsigned euler_totient(unsigned m) {
    if (m == 0) throw std::invalid_argument("totient of zero");
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic polynomial of zero");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<mpz_class> num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycField::CycField(unsigned m)
    : conductor_(m), min_poly_(cyclotomic_polynomial(m)) {}

std::shared_ptr<const CycField> CycField::get(unsigned conductor) {
    if (conductor == 0) throw std::invalid_argument("conductor must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    auto field = std::shared_ptr<const CycField>(new CycField(conductor));
    cache.emplace(conductor, field);
    return field;
}

CycNum::CycNum() : field_(CycField::get(1)), coeffs_(1) {}

CycNum::CycNum(long n) : field_(CycField::get(1)), coeffs_{Rational(n)} {}

CycNum::CycNum(Rational r) : field_(CycField::get(1)), coeffs_{std::move(r)} {}

CycNum::CycNum(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(field_->degree());
}

CycNum CycNum::from_poly(unsigned m, std::vector<Rational> poly) {
    auto field = CycField::get(m);
    auto reduced = poly_mod(std::move(poly), field->minimal_polynomial());
    reduced.resize(field->degree());
    return CycNum(std::move(field), std::move(reduced));
}

CycNum CycNum::zeta(unsigned m) { return zeta_pow(m, 1); }

CycNum CycNum::zeta_pow(unsigned m, long k) {
    if (m == 0) throw std::invalid_argument("conductor must be positive");
    long r = k % static_cast<long>(m);
    if (r < 0) r += m;
    std::vector<Rational> poly(static_cast<std::size_t>(r) + 1);
    poly.back() = Rational(1);
    return from_poly(m, std::move(poly));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNum::is_one() const {
    if (coeffs_[0] != Rational(1)) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("not a rational value");
    return coeffs_[0];
}

CycNum CycNum::embed_into(unsigned target_conductor) const {
    unsigned m = conductor();
    if (target_conductor % m != 0)
        throw std::invalid_argument("incompatible conductors");
    if (target_conductor == m) return *this;
    unsigned stretch = target_conductor / m;
    std::vector<Rational> poly(static_cast<std::size_t>(field_->degree() - 1) * stretch + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        poly[j * stretch] = coeffs_[j];
    return from_poly(target_conductor, std::move(poly));
}

CycNum& CycNum::operator+=(const CycNum& o) {
    unsigned m = std::lcm(conductor(), o.conductor());
    CycNum a = embed_into(m), b = o.embed_into(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    *this = std::move(a);
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    unsigned m = std::lcm(conductor(), o.conductor());
    CycNum a = embed_into(m), b = o.embed_into(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    *this = std::move(a);
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    unsigned m = std::lcm(conductor(), o.conductor());
    CycNum a = embed_into(m), b = o.embed_into(m);
    *this = from_poly(m, poly_mul(a.coeffs_, b.coeffs_));
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    *this *= o.inverse();
    return *this;
}

CycNum operator-(const CycNum& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return CycNum(a.field_, std::move(c));
}

bool operator==(const CycNum& a, const CycNum& b) {
    unsigned m = std::lcm(a.conductor(), b.conductor());
    return a.embed_into(m).coeffs_ == b.embed_into(m).coeffs_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    if (is_rational()) return CycNum(coeffs_[0].inverse()).embed_into(conductor());
    // Extended Euclid for gcd(f, Phi_m) over Q; Phi_m is irreducible so the
    // gcd is a nonzero constant g with s*f + t*Phi = g, giving f^-1 = s/g.
    std::vector<Rational> r0 = to_rational(field_->minimal_polynomial());
    std::vector<Rational> r1 = coeffs_;
    trim(r1);
    std::vector<Rational> s0 = {}, s1 = {Rational(1)};
    while (true) {
        auto [q, r2] = poly_divmod(r0, r1);
        if (r2.empty()) break;
        // s2 = s0 - q*s1
        std::vector<Rational> qs = poly_mul(q, s1);
        std::vector<Rational> s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.size() != 1)
        throw std::logic_error("cyclotomic polynomial not coprime to element");
    Rational g_inv = r1[0].inverse();
    for (auto& c : s1) c *= g_inv;
    return from_poly(conductor(), std::move(s1));
}

CycNum CycNum::conjugate() const {
    unsigned m = conductor();
    std::vector<Rational> poly(m, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        poly[(m - j) % m] += coeffs_[j];
    return from_poly(m, std::move(poly));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this;
    CycNum acc = CycNum(1).embed_into(conductor());
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

bool CycNum::is_root_of_unity() const {
    if (is_zero()) return false;
    unsigned long n = std::lcm(2u, conductor());
    return pow(static_cast<long>(n)).is_one();
}

unsigned CycNum::multiplicative_order() const {
    if (!is_root_of_unity()) throw std::invalid_argument("not a root of unity");
    CycNum acc = *this;
    unsigned long bound = std::lcm(2u, conductor());
    for (unsigned k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc *= *this;
    }
    throw std::logic_error("order not found below bound");
}

std::string CycNum::str() const {
    if (is_rational()) return coeffs_[0].str();
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (j == 0) {
            out << a.str();
            continue;
        }
        if (a != Rational(1)) out << a.str() << "*";
        out << "zeta(" << conductor() << ")";
        if (j > 1) out << "^" << j;
    }
    return out.str();
}

}  // namespace entgeo
