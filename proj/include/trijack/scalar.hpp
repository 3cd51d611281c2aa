#ifndef TRIJACK_SCALAR_HPP
#define TRIJACK_SCALAR_HPP

#include <string>

#include "trijack/parampoly.hpp"

namespace trijack {

// Element of Q(h1,h2), stored as num/den with gcd(num,den) trivial, den
// nonzero with positive leading coefficient, and both parts integer-content
// reduced against each other.  The representation is unique, so equality
// is a map comparison.  h3 never appears: it is always -h1-h2.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    explicit Scalar(const mpz_class& v) : num_(v), den_(1) {}
    explicit Scalar(const mpq_class& v)
        : num_(mpz_class(v.get_num())), den_(mpz_class(v.get_den())) {
        normalize();
    }
    explicit Scalar(const ParamPoly& p) : num_(p), den_(1) {}
    Scalar(const ParamPoly& n, const ParamPoly& d) : num_(n), den_(d) { normalize(); }

    static Scalar h1() { return Scalar(ParamPoly::h1()); }
    static Scalar h2() { return Scalar(ParamPoly::h2()); }
    static Scalar h3() { return Scalar(-(ParamPoly::h1() + ParamPoly::h2())); }
    static Scalar sigma2(); // h1 h2 + h1 h3 + h2 h3
    static Scalar sigma3(); // h1 h2 h3
    static Scalar ratio(long a, long b) { return Scalar(ParamPoly(a), ParamPoly(b)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(int k) const; // k may be negative for nonzero values

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // Exact value at a rational point; throws PoleError naming the
    // denominator when it vanishes there.
    mpq_class evaluate(const mpq_class& v1, const mpq_class& v2) const;

    // Ring morphism h1 -> s1, h2 -> s2.
    Scalar substitute(const Scalar& s1, const Scalar& s2) const;

    // Canonical "num/den" form ("num" alone when den = 1).
    std::string to_string() const;
    static Scalar parse(const std::string& s);

private:
    void normalize();

    ParamPoly num_, den_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

} // namespace trijack

#endif
