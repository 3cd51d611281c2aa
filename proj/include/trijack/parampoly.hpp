#ifndef TRIJACK_PARAMPOLY_HPP
#define TRIJACK_PARAMPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "trijack/errors.hpp"

namespace trijack {

// Exponent pair of a monomial h1^d1 * h2^d2.
struct Exp {
    int d1 = 0;
    int d2 = 0;

    int total() const { return d1 + d2; }
    friend bool operator==(Exp a, Exp b) { return a.d1 == b.d1 && a.d2 == b.d2; }
};

// Graded lexicographic order with h1 > h2, largest term first, so that
// begin() of the term map is the leading term.
struct ExpGrlexDesc {
    bool operator()(Exp a, Exp b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.d1 > b.d1;
    }
};

// Sparse polynomial in Z[h1,h2].  Terms are kept in descending graded-lex
// order and never store a zero coefficient; the zero polynomial has an
// empty term map.  This canonical form makes equality a syntactic check.
class ParamPoly {
public:
    using TermMap = std::map<Exp, mpz_class, ExpGrlexDesc>;

    ParamPoly() = default;
    explicit ParamPoly(long v) { if (v != 0) terms_[Exp{0, 0}] = v; }
    explicit ParamPoly(const mpz_class& v) { if (v != 0) terms_[Exp{0, 0}] = v; }

    static ParamPoly monomial(int d1, int d2, const mpz_class& c);
    static ParamPoly h1() { return monomial(1, 0, 1); }
    static ParamPoly h2() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
    }

    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Leading data under the graded-lex order.  Must not be called on zero.
    Exp lead_exp() const;
    const mpz_class& lead_coeff() const;

    int degree_h1() const;
    int degree_h2() const;
    int total_degree() const;

    // Largest absolute value of a coefficient (0 for the zero polynomial).
    mpz_class height() const;
    // gcd of all coefficients, always non-negative.
    mpz_class content() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);

    ParamPoly mul_int(const mpz_class& c) const;
    // Division by an integer that must divide every coefficient.
    ParamPoly div_int(const mpz_class& c) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    // Arbitrary total order, usable as a map key.
    friend bool operator<(const ParamPoly& a, const ParamPoly& b);

    mpq_class eval(const mpq_class& v1, const mpq_class& v2) const;

    // f(h1, c) as a polynomial in h1 alone (exponents stored in d1).
    ParamPoly eval_h2_int(const mpz_class& c) const;
    // f(c) for a polynomial that only uses h1.
    mpz_class eval_h1_int(const mpz_class& c) const;

    std::string to_string() const;
    static ParamPoly parse(const std::string& s);

    void add_term(Exp e, const mpz_class& c); // accumulate, dropping zeros

private:
    TermMap terms_;
};

// Exact quotient f/g, or nullopt when g does not divide f in Z[h1,h2].
std::optional<ParamPoly> divide_exact(const ParamPoly& f, const ParamPoly& g);

// Polynomial gcd in Z[h1,h2], including the integer content; result has a
// positive leading coefficient.  gcd(0,0) = 0.
ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g);

} // namespace trijack

#endif
