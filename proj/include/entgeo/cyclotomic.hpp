#pragma once

#include "entgeo/rational.hpp"

#include <memory>
#include <vector>

namespace entgeo {

unsigned euler_totient(unsigned m);

// m-th cyclotomic polynomial, coefficients low to high, monic.
// cyclotomic_polynomial(1) = (-1, 1), i.e. x - 1.
std::vector<mpz_class> cyclotomic_polynomial(unsigned m);

// The field Q(zeta_m) presented on the power basis 1, zeta, ..., zeta^(phi(m)-1).
// Instances are immutable and shared through the registry in get().
class CycField {
public:
    static std::shared_ptr<const CycField> get(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    std::size_t degree() const { return min_poly_.size() - 1; }
    const std::vector<mpz_class>& minimal_polynomial() const { return min_poly_; }

private:
    explicit CycField(unsigned m);

    unsigned conductor_;
    std::vector<mpz_class> min_poly_;  // Phi_m
};

// Element of Q(zeta_m): coefficient vector of length phi(m) over the power
// basis, reduced mod Phi_m.  Arithmetic between different conductors embeds
// both operands into the lcm conductor first.
class CycNum {
public:
    CycNum();  // 0 in the conductor-1 field
    CycNum(long n);
    CycNum(Rational r);

    static CycNum zeta(unsigned m);                    // primitive m-th root
    static CycNum zeta_pow(unsigned m, long k);        // zeta_m^k
    // Reduces an arbitrary-degree polynomial in zeta_m mod Phi_m.
    static CycNum from_poly(unsigned m, std::vector<Rational> poly);

    unsigned conductor() const { return field_->conductor(); }
    const std::shared_ptr<const CycField>& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;          // all non-constant coordinates vanish
    Rational rational_value() const;   // throws if not rational

    // Embedding zeta_m -> zeta_M^(M/m); throws "incompatible conductors"
    // unless conductor() divides target.
    CycNum embed_into(unsigned target_conductor) const;

    CycNum inverse() const;    // extended gcd against Phi_m; throws on zero
    CycNum conjugate() const;  // zeta -> zeta^(-1)
    CycNum pow(long e) const;

    bool is_root_of_unity() const;
    unsigned multiplicative_order() const;  // throws unless a root of unity

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend CycNum operator-(const CycNum& a);
    friend bool operator==(const CycNum& a, const CycNum& b);

    // Human-readable form: "3/2", "zeta(8)", "-zeta(4)", "1 + zeta(3)^2", ...
    std::string str() const;

private:
    CycNum(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs);

    std::shared_ptr<const CycField> field_;
    std::vector<Rational> coeffs_;
};

}  // namespace entgeo
