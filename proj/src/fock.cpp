#include "trijack/fock.hpp"

#include <algorithm>
#include <sstream>

namespace trijack {

int PMonomial::exponent(int j, int n) const {
    for (auto& f : factors_)
        if (f.j == j && f.n == n) return f.mult;
    return 0;
}

PMonomial PMonomial::times_p(int j, int n) const {
    PMonomial out = *this;
    out.degree_ += n;
    for (auto& f : out.factors_)
        if (f.j == j && f.n == n) {
            f.mult += 1;
            return out;
        }
    Factor nf{j, n, 1};
    auto pos = std::lower_bound(out.factors_.begin(), out.factors_.end(), nf,
                                [](const Factor& a, const Factor& b) {
                                    return a.j != b.j ? a.j < b.j : a.n < b.n;
                                });
    out.factors_.insert(pos, nf);
    return out;
}

bool PMonomial::divide_p(int j, int n, PMonomial& out) const {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].j == j && factors_[i].n == n) {
            out = *this;
            out.degree_ -= n;
            if (out.factors_[i].mult > 1)
                out.factors_[i].mult -= 1;
            else
                out.factors_.erase(out.factors_.begin() + i);
            return true;
        }
    }
    return false;
}

PMonomial PMonomial::operator*(const PMonomial& o) const {
    PMonomial out = *this;
    for (auto& f : o.factors_)
        for (int k = 0; k < f.mult; ++k) out = out.times_p(f.j, f.n);
    return out;
}

std::string PMonomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& f : factors_) {
        if (!first) os << "*";
        first = false;
        os << "p[" << f.j << "," << f.n << "]";
        if (f.mult > 1) os << "^" << f.mult;
    }
    return os.str();
}

void FockState::add_term(const PMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockState& FockState::operator+=(const FockState& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockState FockState::operator+(const FockState& o) const {
    FockState r = *this;
    r += o;
    return r;
}

FockState FockState::operator-(const FockState& o) const {
    FockState r = *this;
    r -= o;
    return r;
}

FockState FockState::scale(const Scalar& c) const {
    FockState r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

FockState FockState::operator*(const FockState& o) const {
    FockState r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Scalar FockState::vacuum_coefficient() const {
    return coefficient(PMonomial());
}

Scalar FockState::coefficient(const PMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int FockState::max_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool FockState::is_homogeneous(int d) const {
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

FockState FockState::substitute(const Scalar& s1, const Scalar& s2) const {
    FockState r;
    for (auto& [m, c] : terms_) r.add_term(m, c.substitute(s1, s2));
    return r;
}

std::string FockState::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << m.to_string();
    }
    return os.str();
}

FockState apply_mode(int j, int n, const FockState& s, const ModelConfig& cfg) {
    if (j < 1 || j > cfg.N) throw UsageError("slice index out of range");
    FockState out;
    if (n == 0) return out;
    if (n < 0) {
        for (auto& [m, c] : s.terms()) out.add_term(m.times_p(j, -n), c);
        return out;
    }
    Scalar factor = Scalar(-n) / (cfg.h1v * cfg.h2v);
    for (auto& [m, c] : s.terms()) {
        int e = m.exponent(j, n);
        if (e == 0) continue;
        PMonomial q;
        m.divide_p(j, n, q);
        out.add_term(q, c * Scalar(e) * factor);
    }
    return out;
}

std::vector<PMonomial> monomials_of_degree(int degree, int N) {
    // all ways to write `degree` as sum of parts n with N slice colors
    std::vector<PMonomial> out;
    PMonomial cur;
    // parts enumerated in nonincreasing (n, j) order to avoid duplicates
    auto rec = [&](auto&& self, int remaining, int maxN, int maxJ) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int n = std::min(remaining, maxN); n >= 1; --n) {
            int jstart = (n == maxN) ? maxJ : N;
            for (int j = jstart; j >= 1; --j) {
                PMonomial saved = cur;
                cur = cur.times_p(j, n);
                self(self, remaining - n, n, j);
                cur = saved;
            }
        }
    };
    rec(rec, degree, degree, N);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace trijack
