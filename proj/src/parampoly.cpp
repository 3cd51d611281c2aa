#include "trijack/parampoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace trijack {

ParamPoly ParamPoly::monomial(int d1, int d2, const mpz_class& c) {
    ParamPoly p;
    if (c != 0) p.terms_[Exp{d1, d2}] = c;
    return p;
}

Exp ParamPoly::lead_exp() const {
    if (terms_.empty()) throw ArithmeticError("lead_exp of zero polynomial");
    return terms_.begin()->first;
}

const mpz_class& ParamPoly::lead_coeff() const {
    if (terms_.empty()) throw ArithmeticError("lead_coeff of zero polynomial");
    return terms_.begin()->second;
}

int ParamPoly::degree_h1() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e.d1);
    return d;
}

int ParamPoly::degree_h2() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e.d2);
    return d;
}

int ParamPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

mpz_class ParamPoly::height() const {
    mpz_class h = 0;
    for (auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

mpz_class ParamPoly::content() const {
    mpz_class g = 0;
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void ParamPoly::add_term(Exp e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    if (terms_.empty() || o.terms_.empty()) return r;
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_)
            r.add_term(Exp{ea.d1 + eb.d1, ea.d2 + eb.d2}, ca * cb);
    return r;
}

ParamPoly ParamPoly::mul_int(const mpz_class& c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

ParamPoly ParamPoly::div_int(const mpz_class& c) const {
    if (c == 0) throw ArithmeticError("division by zero integer");
    ParamPoly r;
    for (auto& [e, k] : terms_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw ArithmeticError("inexact integer division of polynomial");
        r.terms_[e] = q;
    }
    return r;
}

bool operator<(const ParamPoly& a, const ParamPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    ExpGrlexDesc less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

mpq_class ParamPoly::eval(const mpq_class& v1, const mpq_class& v2) const {
    mpq_class acc = 0;
    for (auto& [e, c] : terms_) {
        mpq_class t(c);
        for (int i = 0; i < e.d1; ++i) t *= v1;
        for (int i = 0; i < e.d2; ++i) t *= v2;
        acc += t;
    }
    acc.canonicalize();
    return acc;
}

ParamPoly ParamPoly::eval_h2_int(const mpz_class& c) const {
    ParamPoly r;
    for (auto& [e, k] : terms_) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), c.get_mpz_t(), e.d2);
        r.add_term(Exp{e.d1, 0}, k * t);
    }
    return r;
}

mpz_class ParamPoly::eval_h1_int(const mpz_class& c) const {
    mpz_class acc = 0;
    for (auto& [e, k] : terms_) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), c.get_mpz_t(), e.d1);
        acc += k * t;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// string form

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool mono = e.d1 > 0 || e.d2 > 0;
        if (!mono || a != 1) {
            os << a.get_str();
            if (mono) os << "*";
        }
        if (e.d1 > 0) {
            os << "h1";
            if (e.d1 > 1) os << "^" << e.d1;
        }
        if (e.d1 > 0 && e.d2 > 0) os << "*";
        if (e.d2 > 0) {
            os << "h2";
            if (e.d2 > 1) os << "^" << e.d2;
        }
    }
    return os.str();
}

ParamPoly ParamPoly::parse(const std::string& s) {
    ParamPoly out;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw UsageError("cannot parse polynomial '" + s + "': " + why);
    };
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) fail("empty");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        mpz_class coeff = 1;
        bool saw_digits = false, saw_var = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = mpz_class(s.substr(i, j - i));
            i = j;
            saw_digits = true;
        }
        int d1 = 0, d2 = 0;
        while (i < s.size() && (s[i] == '*' || s[i] == 'h')) {
            if (s[i] == '*') ++i;
            if (i + 1 >= s.size() || s[i] != 'h' || (s[i + 1] != '1' && s[i + 1] != '2'))
                fail("expected h1 or h2");
            int which = s[i + 1] - '0';
            i += 2;
            int expn = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) fail("missing exponent");
                expn = std::stoi(s.substr(i, j - i));
                i = j;
            }
            if (which == 1) d1 += expn; else d2 += expn;
            saw_var = true;
        }
        if (!saw_digits && !saw_var) fail("empty term");
        out.add_term(Exp{d1, d2}, sign * coeff);
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail("unexpected character");
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact division

std::optional<ParamPoly> divide_exact(const ParamPoly& f, const ParamPoly& g) {
    if (g.is_zero()) return std::nullopt;
    ParamPoly q;
    ParamPoly r = f;
    const Exp ge = g.is_zero() ? Exp{0, 0} : g.lead_exp();
    const mpz_class& gc = g.lead_coeff();
    while (!r.is_zero()) {
        Exp re = r.lead_exp();
        if (re.d1 < ge.d1 || re.d2 < ge.d2) return std::nullopt;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.lead_coeff().get_mpz_t(), gc.get_mpz_t());
        if (rem != 0) return std::nullopt;
        ParamPoly t = ParamPoly::monomial(re.d1 - ge.d1, re.d2 - ge.d2, qc);
        q += t;
        r -= t * g;
    }
    return q;
}

// ---------------------------------------------------------------------------
// gcd machinery
//
// Fast path is the heuristic gcd (evaluate at a large integer, take the
// integer gcd, reconstruct with balanced base-xi digits, verify by trial
// division).  A primitive pseudo-remainder sequence is kept as a
// deterministic fallback.

namespace {

using ZPoly = std::vector<mpz_class>; // dense univariate over Z, low to high

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zprimitive(ZPoly& p) {
    mpz_class c = zcontent(p);
    if (c == 0) return;
    if (!p.empty() && p.back() < 0) c = -c;
    for (auto& k : p) k /= c;
}

mpz_class zheight(const ZPoly& p) {
    mpz_class h = 0;
    for (auto& c : p) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

mpz_class zeval(const ZPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool zdivides(const ZPoly& d, const ZPoly& f) {
    if (d.empty()) return f.empty();
    ZPoly r = f;
    ztrim(r);
    while (!r.empty()) {
        if (zdeg(r) < zdeg(d)) return false;
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
        if (rem != 0) return false;
        int shift = zdeg(r) - zdeg(d);
        for (size_t i = 0; i < d.size(); ++i) r[i + shift] -= q * d[i];
        ztrim(r);
    }
    return true;
}

mpz_class balanced_mod(const mpz_class& a, const mpz_class& xi) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
    if (2 * r >= xi) r -= xi;
    return r;
}

mpz_class grow_xi(const mpz_class& xi) {
    return xi * 73794 / 27011 + 1;
}

// Heuristic univariate gcd over Z; includes integer content of the result.
std::optional<ZPoly> zgcd_heu(const ZPoly& f, const ZPoly& g) {
    mpz_class hf = zheight(f), hg = zheight(g);
    mpz_class xi = 2 * std::min(hf, hg) + 2;
    if (xi < 36) xi = 36;
    for (int attempt = 0; attempt < 6; ++attempt, xi = grow_xi(xi)) {
        mpz_class a = zeval(f, xi), b = zeval(g, xi);
        if (a == 0 || b == 0) continue;
        mpz_class gam;
        mpz_gcd(gam.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        ZPoly cand;
        int guard = 0;
        while (gam != 0) {
            if (++guard > 4096) break;
            mpz_class d = balanced_mod(gam, xi);
            cand.push_back(d);
            gam = (gam - d) / xi;
        }
        if (gam != 0) continue;
        ztrim(cand);
        if (cand.empty()) continue;
        zprimitive(cand);
        if (zdivides(cand, f) && zdivides(cand, g)) return cand;
    }
    return std::nullopt;
}

// Primitive pseudo-remainder sequence over Z; deterministic fallback.
ZPoly zgcd_prs(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    zprimitive(a);
    zprimitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        // pseudo remainder of a by b
        ZPoly r = a;
        const mpz_class lb = b.back();
        while (!r.empty() && zdeg(r) >= zdeg(b)) {
            mpz_class lr = r.back();
            int shift = zdeg(r) - zdeg(b);
            for (auto& c : r) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
            ztrim(r);
        }
        a = b;
        b = r;
        zprimitive(b);
    }
    zprimitive(a);
    return a;
}

ZPoly zgcd(const ZPoly& f0, const ZPoly& g0) {
    ZPoly f = f0, g = g0;
    ztrim(f);
    ztrim(g);
    if (f.empty()) {
        zprimitive(g);
        return g;
    }
    if (g.empty()) {
        zprimitive(f);
        return f;
    }
    mpz_class cf = zcontent(f), cg = zcontent(g), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    ZPoly fp = f, gp = g;
    zprimitive(fp);
    zprimitive(gp);
    ZPoly pp;
    if (zdeg(fp) == 0 || zdeg(gp) == 0) {
        pp = ZPoly{1};
    } else if (auto h = zgcd_heu(fp, gp)) {
        pp = *h;
    } else {
        pp = zgcd_prs(fp, gp);
    }
    for (auto& k : pp) k *= c;
    return pp;
}

ZPoly to_zpoly_h1(const ParamPoly& p) {
    ZPoly z(p.degree_h1() + 1, mpz_class(0));
    for (auto& [e, c] : p.terms()) {
        if (e.d2 != 0) throw ConsistencyError("to_zpoly_h1 on bivariate polynomial");
        z[e.d1] = c;
    }
    ztrim(z);
    return z;
}

ParamPoly from_zpoly_h1(const ZPoly& z) {
    ParamPoly p;
    for (size_t i = 0; i < z.size(); ++i) p.add_term(Exp{static_cast<int>(i), 0}, z[i]);
    return p;
}

ParamPoly transpose_vars(const ParamPoly& p) {
    ParamPoly r;
    for (auto& [e, c] : p.terms()) r.add_term(Exp{e.d2, e.d1}, c);
    return r;
}

ParamPoly pp_sign_content(const ParamPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.lead_coeff() < 0) c = -c;
    return p.div_int(c);
}

// Heuristic bivariate gcd; inputs primitive, result primitive or nullopt.
std::optional<ParamPoly> gcd_heu_bi(const ParamPoly& f, const ParamPoly& g) {
    mpz_class xi = 2 * std::min(f.height(), g.height()) + 2;
    if (xi < 36) xi = 36;
    for (int attempt = 0; attempt < 6; ++attempt, xi = grow_xi(xi)) {
        ParamPoly F1 = f.eval_h2_int(xi), G1 = g.eval_h2_int(xi);
        if (F1.is_zero() || G1.is_zero()) continue;
        ZPoly gam = zgcd(to_zpoly_h1(F1), to_zpoly_h1(G1));
        // coefficient-wise balanced xi-adic digits give the h2 expansion
        ParamPoly cand;
        ZPoly cur = gam;
        int d2 = 0;
        bool bad = false;
        while (true) {
            ztrim(cur);
            if (cur.empty()) break;
            if (d2 > 4096) {
                bad = true;
                break;
            }
            for (size_t i = 0; i < cur.size(); ++i) {
                mpz_class d = balanced_mod(cur[i], xi);
                if (d != 0) cand.add_term(Exp{static_cast<int>(i), d2}, d);
                cur[i] = (cur[i] - d) / xi;
            }
            ++d2;
        }
        if (bad || cand.is_zero()) continue;
        cand = pp_sign_content(cand);
        if (divide_exact(f, cand) && divide_exact(g, cand)) return cand;
    }
    return std::nullopt;
}

// Dense view in the main variable h1 with Z[h2] coefficients.
using BiVec = std::vector<ParamPoly>;

BiVec to_bivec(const ParamPoly& p) {
    BiVec v(p.degree_h1() + 1);
    for (auto& [e, c] : p.terms()) v[e.d1].add_term(Exp{0, e.d2}, c);
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

ParamPoly from_bivec(const BiVec& v) {
    ParamPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        for (auto& [e, c] : v[i].terms()) p.add_term(Exp{static_cast<int>(i), e.d2}, c);
    return p;
}

void bitrim(BiVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

ParamPoly bicontent(const BiVec& v) {
    ParamPoly g;
    for (auto& c : v) g = poly_gcd(g, c);
    return g;
}

BiVec biprimitive(const BiVec& v) {
    ParamPoly c = bicontent(v);
    if (c.is_zero()) return v;
    BiVec r;
    r.reserve(v.size());
    for (auto& k : v) r.push_back(k.is_zero() ? k : *divide_exact(k, c));
    return r;
}

// Primitive PRS with h1 as the main variable.
ParamPoly gcd_prs_bi(const ParamPoly& f, const ParamPoly& g) {
    BiVec a = to_bivec(f), b = to_bivec(g);
    bitrim(a);
    bitrim(b);
    ParamPoly ca = bicontent(a), cb = bicontent(b);
    a = biprimitive(a);
    b = biprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BiVec r = a;
        const ParamPoly lb = b.back();
        while (!r.empty() && r.size() >= b.size()) {
            ParamPoly lr = r.back();
            size_t shift = r.size() - b.size();
            for (auto& c : r) c = c * lb;
            for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
            bitrim(r);
        }
        a = b;
        b = biprimitive(r);
    }
    ParamPoly result = poly_gcd(ca, cb) * from_bivec(biprimitive(a));
    return pp_sign_content(result);
}

} // namespace

ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g) {
    if (f.is_zero()) return pp_sign_content(g);
    if (g.is_zero()) return pp_sign_content(f);
    mpz_class cf = f.content(), cg = g.content(), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    ParamPoly fp = f.div_int(cf), gp = g.div_int(cg);
    if (fp.is_constant() || gp.is_constant()) return ParamPoly(c);

    ParamPoly pp;
    bool uni1 = fp.degree_h2() == 0 && gp.degree_h2() == 0;
    bool uni2 = fp.degree_h1() == 0 && gp.degree_h1() == 0;
    if (uni1) {
        pp = from_zpoly_h1(zgcd(to_zpoly_h1(fp), to_zpoly_h1(gp)));
    } else if (uni2) {
        pp = transpose_vars(
            from_zpoly_h1(zgcd(to_zpoly_h1(transpose_vars(fp)), to_zpoly_h1(transpose_vars(gp)))));
    } else if (auto h = gcd_heu_bi(fp, gp)) {
        pp = *h;
    } else {
        pp = gcd_prs_bi(fp, gp);
    }
    pp = pp_sign_content(pp);
    return pp.mul_int(c);
}

} // namespace trijack
