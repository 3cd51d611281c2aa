#ifndef TRIJACK_FOCK_HPP
#define TRIJACK_FOCK_HPP

#include <map>
#include <vector>

#include "trijack/planepart.hpp"

namespace trijack {

// Monomial in the power-sum variables p_{j,n}: sorted (slice, degree,
// multiplicity) triples.  The empty monomial is the vacuum.
class PMonomial {
public:
    struct Factor {
        int j;    // slice, 1..N
        int n;    // degree, >= 1
        int mult; // >= 1

        friend bool operator==(const Factor& a, const Factor& b) {
            return a.j == b.j && a.n == b.n && a.mult == b.mult;
        }
        friend bool operator<(const Factor& a, const Factor& b) {
            if (a.j != b.j) return a.j < b.j;
            if (a.n != b.n) return a.n < b.n;
            return a.mult < b.mult;
        }
    };

    PMonomial() = default;

    int degree() const { return degree_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_vacuum() const { return factors_.empty(); }

    int exponent(int j, int n) const;
    PMonomial times_p(int j, int n) const;
    // nullopt-like: returns false if p_{j,n} does not occur.
    bool divide_p(int j, int n, PMonomial& out) const;

    PMonomial operator*(const PMonomial& o) const;

    friend bool operator==(const PMonomial& a, const PMonomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const PMonomial& a, const PMonomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.factors_ < b.factors_;
    }

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

// Finitely supported linear combination of p-monomials over Q(h1,h2).
class FockState {
public:
    FockState() = default;
    static FockState vacuum() {
        FockState s;
        s.terms_[PMonomial()] = Scalar(1);
        return s;
    }

    const std::map<PMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const PMonomial& m, const Scalar& c);

    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState scale(const Scalar& c) const;
    // Product as polynomials in the p variables.
    FockState operator*(const FockState& o) const;

    friend bool operator==(const FockState& a, const FockState& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

    Scalar vacuum_coefficient() const;
    Scalar coefficient(const PMonomial& m) const;
    int max_degree() const;
    // True when every monomial has the same total degree d (or state is 0).
    bool is_homogeneous(int d) const;

    // Coefficient-wise ring morphism h1 -> s1, h2 -> s2; terms that become
    // zero are dropped.
    FockState substitute(const Scalar& s1, const Scalar& s2) const;

    std::string to_string() const;

private:
    std::map<PMonomial, Scalar> terms_;
};

// Action of the mode a_{j,n} on a state: n < 0 multiplies by p_{j,-n},
// n > 0 applies -(n/(h1 h2)) d/dp_{j,n}, and a_{j,0} acts as zero.
FockState apply_mode(int j, int n, const FockState& s, const ModelConfig& cfg);

// All p-monomials of the given total degree with slices 1..N.
std::vector<PMonomial> monomials_of_degree(int degree, int N);

} // namespace trijack

#endif
