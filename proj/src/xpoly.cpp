#include "ctel/xpoly.hpp"

#include <cassert>

namespace ctel {

XPoly::XPoly(int nvars, std::vector<KElem> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
    trim();
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::monomial(int nvars, int deg, const KElem& c) {
    assert(deg >= 0);
    if (c.is_zero()) return XPoly(nvars);
    std::vector<KElem> v(deg + 1, KElem(nvars));
    v[deg] = c;
    return XPoly(nvars, std::move(v));
}

const KElem& XPoly::lc() const {
    assert(!c_.empty());
    return c_.back();
}

KElem XPoly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return KElem(nvars_);
    return c_[i];
}

XPoly XPoly::operator-() const {
    XPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly XPoly::operator+(const XPoly& o) const {
    assert(nvars_ == o.nvars_);
    std::vector<KElem> v(std::max(c_.size(), o.c_.size()), KElem(nvars_));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return XPoly(nvars_, std::move(v));
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator*(const XPoly& o) const {
    assert(nvars_ == o.nvars_);
    if (is_zero() || o.is_zero()) return XPoly(nvars_);
    std::vector<KElem> v(c_.size() + o.c_.size() - 1, KElem(nvars_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return XPoly(nvars_, std::move(v));
}

XPoly XPoly::scaled(const KElem& c) const {
    if (c.is_zero()) return XPoly(nvars_);
    XPoly r(*this);
    for (auto& k : r.c_) k *= c;
    return r;
}

XPoly XPoly::shifted_up(int k) const {
    assert(k >= 0);
    if (is_zero()) return *this;
    std::vector<KElem> v(c_.size() + k, KElem(nvars_));
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return XPoly(nvars_, std::move(v));
}

XPoly XPoly::pow(int k) const {
    assert(k >= 0);
    XPoly r = XPoly::one(nvars_);
    XPoly b(*this);
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

XPoly XPoly::derivative() const {
    if (c_.size() <= 1) return XPoly(nvars_);
    std::vector<KElem> v(c_.size() - 1, KElem(nvars_));
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * KElem::constant(nvars_, Rat((long)i));
    return XPoly(nvars_, std::move(v));
}

XPoly XPoly::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inv());
}

KElem XPoly::eval_k(const KElem& v) const {
    KElem acc(nvars_);
    for (int i = degree(); i >= 0; --i) acc = acc * v + c_[i];
    return acc;
}

XPoly XPoly::param_derivative(int i) const {
    XPoly r(*this);
    for (auto& c : r.c_) c = c.derivative(i);
    r.trim();
    return r;
}

XPoly XPoly::param_shifted(int i) const {
    XPoly r(*this);
    for (auto& c : r.c_) c = c.shifted(i);
    r.trim();
    return r;
}

XPoly XPoly::eval_params(const std::vector<Rat>& point) const {
    std::vector<KElem> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(KElem::constant(0, c.eval(point)));
    return XPoly(0, std::move(v));
}

std::pair<XPoly, XPoly> divrem(const XPoly& a, const XPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial in x");
    int n = a.nvars();
    XPoly q(n), r = a;
    KElem binv = b.lc().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        KElem c = r.lc() * binv;
        int d = r.degree() - b.degree();
        XPoly t = XPoly::monomial(n, d, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

XPoly mod(const XPoly& a, const XPoly& b) { return divrem(a, b).second; }

bool divides_x(const XPoly& b, const XPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).second.is_zero();
}

XPoly exact_div_x(const XPoly& a, const XPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact division in K[x]");
    return q;
}

namespace {

// coefficients cleared to common-denominator MPoly form, content-stripped
std::vector<MPoly> cleared_primitive(const XPoly& p) {
    int n = p.nvars();
    MPoly D = MPoly::constant(n, Rat(1));
    for (auto& c : p.coeffs())
        if (!c.is_zero()) D = lcm(D, c.den());
    std::vector<MPoly> out;
    out.reserve(p.coeffs().size());
    MPoly cont(n);
    for (auto& c : p.coeffs()) {
        out.push_back(c.is_zero() ? MPoly(n) : c.num() * exact_div(D, c.den()));
        if (!out.back().is_zero()) cont = gcd(cont, out.back());
    }
    for (auto& c : out)
        if (!c.is_zero()) c = exact_div(c, cont);
    return out;
}

} // namespace

XPoly gcd_x(const XPoly& a, const XPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    int n = a.nvars();
    if (a.degree() == 0 || b.degree() == 0) return XPoly::one(n);
    if (n == 0) {
        // plain monic Euclid; rational coefficients stay canonical
        XPoly u = a, v = b;
        while (!v.is_zero()) {
            XPoly r = mod(u, v);
            u = v;
            v = r.is_zero() ? r : r.monic();
        }
        return u.monic();
    }
    // fraction-free subresultant PRS over the cleared coefficients
    std::vector<MPoly> g = prs_gcd(cleared_primitive(a), cleared_primitive(b), n);
    std::vector<KElem> cs;
    cs.reserve(g.size());
    for (auto& c : g) cs.emplace_back(c);
    return XPoly(n, std::move(cs)).monic();
}

XPoly lcm_x(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly(a.nvars());
    return exact_div_x(a * b, gcd_x(a, b)).monic();
}

XGcd xpoly_xgcd(const XPoly& a, const XPoly& b) {
    int n = a.nvars();
    if (a.is_zero() && b.is_zero()) throw std::domain_error("xgcd(0,0)");
    XPoly r0 = a, r1 = b;
    XPoly s0 = XPoly::one(n), s1 = XPoly::zero(n);
    XPoly t0 = XPoly::zero(n), t1 = XPoly::one(n);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        XPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    KElem u = r0.lc().inv();
    return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

SqfFactorization squarefree_factorization(const XPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree factorization of 0");
    SqfFactorization out;
    out.unit = p.lc();
    XPoly a = p.monic();
    if (a.degree() == 0) return out;
    // Yun
    XPoly da = a.derivative();
    XPoly g = gcd_x(a, da);
    XPoly w = exact_div_x(a, g);
    XPoly y = exact_div_x(da, g);
    int i = 1;
    while (true) {
        XPoly z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() > 0) out.factors.push_back({w.monic(), i});
            break;
        }
        XPoly f = gcd_x(w, z);
        if (f.degree() > 0) out.factors.push_back({f.monic(), i});
        w = exact_div_x(w, f);
        y = exact_div_x(z, f);
        ++i;
    }
    return out;
}

std::variant<XPoly, ZeroDivisorWitness> invert_mod(const XPoly& U, const XPoly& P) {
    assert(P.degree() >= 1);
    XPoly u = mod(U, P);
    if (u.is_zero()) throw std::domain_error("invert_mod of 0");
    XGcd e = xpoly_xgcd(u, P);
    if (e.g.degree() == 0) {
        // g is monic degree 0, i.e. 1: u*uu + P*v = 1
        return mod(e.u, P);
    }
    return ZeroDivisorWitness{e.g};
}

} // namespace ctel
