#ifndef TRIJACK_MODEOP_HPP
#define TRIJACK_MODEOP_HPP

#include <vector>

#include "trijack/fock.hpp"

namespace trijack {

// Normal-ordered sum of boson-mode monomials with a fixed grading shift.
// Each term is  coeff * (prod a_{j,-n}) (prod a_{j,+n})  with all n > 0;
// annihilators act first.  Operators are only ever composed through state
// application, never multiplied symbolically.
class ModeOperator {
public:
    struct Osc {
        int j; // slice
        int n; // magnitude, > 0
    };
    struct Term {
        Scalar coeff;
        std::vector<Osc> creations;     // a_{j,-n}
        std::vector<Osc> annihilations; // a_{j,+n}
    };

    explicit ModeOperator(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Checks the term's grading against the operator degree.
    void add_term(Term t);
    void add(const ModeOperator& o); // degrees must agree
    ModeOperator scale(const Scalar& c) const;

    FockState apply(const FockState& s, const ModelConfig& cfg) const;

private:
    int degree_;
    std::vector<Term> terms_;
};

// [A,B] s = A(Bs) - B(As)
FockState commutator_on(const ModeOperator& A, const ModeOperator& B, const FockState& s,
                        const ModelConfig& cfg);

// Repeated commutator ad_A^k B evaluated on a state, via linear expansion
// of the nested commutators (A and B applied in all interleavings).
FockState ad_pow_on(const ModeOperator& A, int k, const ModeOperator& B, const FockState& s,
                    const ModelConfig& cfg);

} // namespace trijack

#endif
