#include "entgeo/rational.hpp"

#include <stdexcept>

namespace entgeo {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    // operator/ canonicalizes, but be explicit about the invariant
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

}  // namespace entgeo
