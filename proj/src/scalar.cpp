#include "trijack/scalar.hpp"

namespace trijack {

Scalar Scalar::sigma2() {
    ParamPoly a = ParamPoly::h1(), b = ParamPoly::h2();
    ParamPoly c = -(a + b);
    return Scalar(a * b + a * c + b * c);
}

Scalar Scalar::sigma3() {
    ParamPoly a = ParamPoly::h1(), b = ParamPoly::h2();
    return Scalar(a * b * (-(a + b)));
}

void Scalar::normalize() {
    if (den_.is_zero()) throw ArithmeticError("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    if (den_.lead_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (o.is_zero()) return *this;
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ArithmeticError("scalar division by zero");
    if (is_zero()) return Scalar();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

mpq_class Scalar::evaluate(const mpq_class& v1, const mpq_class& v2) const {
    mpq_class d = den_.eval(v1, v2);
    if (d == 0)
        throw PoleError("denominator " + den_.to_string() + " vanishes at the probe point");
    mpq_class r = num_.eval(v1, v2) / d;
    r.canonicalize();
    return r;
}

Scalar Scalar::substitute(const Scalar& s1, const Scalar& s2) const {
    auto eval_poly = [&](const ParamPoly& p) {
        Scalar acc;
        for (auto& [e, c] : p.terms()) {
            Scalar t(ParamPoly(c));
            if (e.d1 > 0) t *= s1.pow(e.d1);
            if (e.d2 > 0) t *= s2.pow(e.d2);
            acc += t;
        }
        return acc;
    };
    return eval_poly(num_) / eval_poly(den_);
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Scalar Scalar::parse(const std::string& s) {
    // split at a top-level '/': the canonical form never nests
    auto pos = s.find('/');
    if (pos == std::string::npos) return Scalar(ParamPoly::parse(s));
    return Scalar(ParamPoly::parse(s.substr(0, pos)), ParamPoly::parse(s.substr(pos + 1)));
}

} // namespace trijack
