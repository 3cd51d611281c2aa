#include "trijack/modeop.hpp"

namespace trijack {

void ModeOperator::add_term(Term t) {
    if (t.coeff.is_zero()) return;
    int d = 0;
    for (auto& o : t.creations) d += o.n;
    for (auto& o : t.annihilations) d -= o.n;
    if (d != degree_)
        throw ConsistencyError("mode term grading " + std::to_string(d) +
                               " does not match operator degree " + std::to_string(degree_));
    terms_.push_back(std::move(t));
}

void ModeOperator::add(const ModeOperator& o) {
    if (o.degree_ != degree_ && !o.is_zero())
        throw ConsistencyError("adding mode operators of different degree");
    for (auto& t : o.terms_) terms_.push_back(t);
}

ModeOperator ModeOperator::scale(const Scalar& c) const {
    ModeOperator r(degree_);
    if (c.is_zero()) return r;
    for (auto& t : terms_) {
        Term nt = t;
        nt.coeff = t.coeff * c;
        r.terms_.push_back(std::move(nt));
    }
    return r;
}

FockState ModeOperator::apply(const FockState& s, const ModelConfig& cfg) const {
    FockState out;
    for (auto& t : terms_) {
        FockState cur = s.scale(t.coeff);
        for (auto& o : t.annihilations) {
            if (cur.is_zero()) break;
            cur = apply_mode(o.j, o.n, cur, cfg);
        }
        if (cur.is_zero()) continue;
        for (auto& o : t.creations) cur = apply_mode(o.j, -o.n, cur, cfg);
        out += cur;
    }
    return out;
}

FockState commutator_on(const ModeOperator& A, const ModeOperator& B, const FockState& s,
                        const ModelConfig& cfg) {
    return A.apply(B.apply(s, cfg), cfg) - B.apply(A.apply(s, cfg), cfg);
}

FockState ad_pow_on(const ModeOperator& A, int k, const ModeOperator& B, const FockState& s,
                    const ModelConfig& cfg) {
    // ad_A^k B = sum_i (-1)^i C(k,i) A^{k-i} B A^i
    std::vector<FockState> right{s};
    for (int i = 1; i <= k; ++i) right.push_back(A.apply(right.back(), cfg));
    FockState out;
    mpz_class binom = 1;
    for (int i = 0; i <= k; ++i) {
        FockState piece = B.apply(right[i], cfg);
        for (int t = 0; t < k - i; ++t) piece = A.apply(piece, cfg);
        Scalar c((i % 2 == 0) ? binom : -binom);
        out += piece.scale(c);
        binom = binom * (k - i) / (i + 1);
    }
    return out;
}

} // namespace trijack
