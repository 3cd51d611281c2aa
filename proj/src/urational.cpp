#include "trijack/urational.hpp"

#include <sstream>

namespace trijack {

URational URational::from_factors(const Scalar& c, const std::map<Scalar, int>& factors) {
    URational r;
    r.c_ = c;
    if (c.is_zero()) return r;
    for (auto& [root, m] : factors)
        if (m != 0) r.factors_[root] = m;
    return r;
}

URational URational::operator*(const URational& o) const {
    URational r;
    r.c_ = c_ * o.c_;
    if (r.c_.is_zero()) return r;
    r.factors_ = factors_;
    for (auto& [root, m] : o.factors_) {
        int& slot = r.factors_[root];
        slot += m;
        if (slot == 0) r.factors_.erase(root);
    }
    return r;
}

int URational::multiplicity(const Scalar& r) const {
    auto it = factors_.find(r);
    return it == factors_.end() ? 0 : it->second;
}

int URational::degree_at_infinity() const {
    int d = 0;
    for (auto& [root, m] : factors_) d += m;
    return d;
}

namespace {

// multiply dense u-polynomial by (u - r)
void mul_linear(std::vector<Scalar>& p, const Scalar& r) {
    p.push_back(Scalar(0));
    for (size_t i = p.size(); i-- > 1;) p[i] = p[i - 1] - r * p[i];
    p[0] = -r * p[0];
}

} // namespace

std::vector<Scalar> URational::num() const {
    std::vector<Scalar> p{c_};
    if (c_.is_zero()) return p;
    for (auto& [root, m] : factors_)
        for (int i = 0; i < m; ++i) mul_linear(p, root);
    return p;
}

std::vector<Scalar> URational::den() const {
    std::vector<Scalar> p{Scalar(1)};
    for (auto& [root, m] : factors_)
        for (int i = 0; i < -m; ++i) mul_linear(p, root);
    return p;
}

Scalar URational::eval(const Scalar& u0) const {
    Scalar v = c_;
    for (auto& [root, m] : factors_) {
        Scalar lin = u0 - root;
        if (lin.is_zero()) {
            if (m < 0) throw PoleError("evaluation at a pole of order " + std::to_string(-m));
            if (m > 0) return Scalar(0);
        } else {
            v *= lin.pow(m);
        }
    }
    return v;
}

Scalar URational::residue_at(const Scalar& pole) const {
    int m = multiplicity(pole);
    if (m >= 0) return Scalar(0);
    if (m < -1) throw PoleError("residue at a pole of order " + std::to_string(-m));
    Scalar v = c_;
    for (auto& [root, mult] : factors_) {
        if (root == pole) continue;
        Scalar lin = pole - root;
        if (lin.is_zero()) throw ConsistencyError("distinct factored roots compare equal");
        v *= lin.pow(mult);
    }
    return v;
}

std::vector<Scalar> URational::series_at_infinity(int order) const {
    int d = degree_at_infinity();
    if (d > 0)
        throw PoleError("function is not regular at u = infinity");
    if (c_.is_zero() || order <= 0) return std::vector<Scalar>(std::max(order, 0), Scalar(0));

    // prod (1 - r/u)^m = exp(-sum_k s_k u^-k / k) with s_k = sum m_r r^k.
    std::vector<Scalar> logc(order + 1, Scalar(0)); // coefficient of u^-k, k>=1
    for (auto& [root, m] : factors_) {
        Scalar pw = root;
        for (int k = 1; k <= order; ++k) {
            logc[k] -= Scalar(m) * pw / Scalar(k);
            pw *= root;
        }
    }
    std::vector<Scalar> e(order + 1, Scalar(0));
    e[0] = Scalar(1);
    for (int n = 1; n <= order; ++n) {
        Scalar acc;
        for (int k = 1; k <= n; ++k) acc += Scalar(k) * logc[k] * e[n - k];
        e[n] = acc / Scalar(n);
    }
    // shift by u^d (d <= 0) and scale by the prefactor
    std::vector<Scalar> out(order, Scalar(0));
    for (int k = 1; k <= order; ++k) {
        int src = k + d;
        if (src >= 0 && src <= order) out[k - 1] = c_ * e[src];
    }
    return out;
}

std::string URational::to_string() const {
    std::ostringstream os;
    os << "(" << c_.to_string() << ")";
    for (auto& [root, m] : factors_)
        os << "*(u-(" << root.to_string() << "))^" << m;
    return os.str();
}

} // namespace trijack
