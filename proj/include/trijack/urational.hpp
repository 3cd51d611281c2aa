#ifndef TRIJACK_URATIONAL_HPP
#define TRIJACK_URATIONAL_HPP

#include <map>
#include <vector>

#include "trijack/scalar.hpp"

namespace trijack {

// Rational function of the auxiliary variable u over Q(h1,h2), kept in the
// factored form  c * prod_r (u - r)^{m_r}  with Scalar roots r and integer
// multiplicities m_r (positive for zeros, negative for poles).  Every
// function this project needs - psi_pi(u), phi(u), psi_0(u) and their
// products - is of this shape, and the factored form makes cancellation,
// residues and expansion at infinity exact with no polynomial gcd in u.
// num()/den() expand the reduced numerator and denominator on demand.
class URational {
public:
    URational() : c_(1) {}
    explicit URational(const Scalar& constant) : c_(constant) {}

    static URational one() { return URational(); }
    // c * prod (u - r)^m
    static URational from_factors(const Scalar& c, const std::map<Scalar, int>& factors);

    URational operator*(const URational& o) const;

    const Scalar& prefactor() const { return c_; }
    const std::map<Scalar, int>& factors() const { return factors_; }

    // Multiplicity of (u - r); negative means a pole.
    int multiplicity(const Scalar& r) const;

    bool is_zero() const { return c_.is_zero(); }

    // Degree of numerator minus degree of denominator.
    int degree_at_infinity() const;

    // Dense coefficients, low to high, of the reduced numerator/denominator.
    std::vector<Scalar> num() const;
    std::vector<Scalar> den() const;

    // Value at u = u0; PoleError if u0 is a pole.
    Scalar eval(const Scalar& u0) const;

    // Residue at a simple pole; 0 if regular there; PoleError for order >= 2.
    Scalar residue_at(const Scalar& pole) const;

    // Coefficients of u^-1 ... u^-order of the expansion at u = infinity.
    // Requires the function to be regular there (deg num <= deg den).
    std::vector<Scalar> series_at_infinity(int order) const;

    std::string to_string() const;

private:
    Scalar c_;
    std::map<Scalar, int> factors_;
};

} // namespace trijack

#endif
