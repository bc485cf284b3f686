#include "ctel/xrat.hpp"

#include <cassert>

namespace ctel {

XRat::XRat(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("XRat with zero denominator");
    normalize();
}

void XRat::normalize() {
    if (num_.is_zero()) {
        den_ = XPoly::one(num_.nvars());
        return;
    }
    XPoly g = gcd_x(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div_x(num_, g);
        den_ = exact_div_x(den_, g);
    }
    if (!den_.lc().is_one()) {
        KElem u = den_.lc().inv();
        num_ = num_.scaled(u);
        den_ = den_.scaled(u);
    }
}

XRat XRat::operator-() const {
    XRat r(*this);
    r.num_ = -r.num_;
    return r;
}

XRat XRat::operator+(const XRat& o) const {
    return XRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

XRat XRat::operator-(const XRat& o) const {
    return XRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

XRat XRat::operator*(const XRat& o) const { return XRat(num_ * o.num_, den_ * o.den_); }

XRat XRat::operator/(const XRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in K(x)");
    return XRat(num_ * o.den_, den_ * o.num_);
}

XRat XRat::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in K(x)");
    return XRat(den_, num_);
}

XRat XRat::scaled(const KElem& c) const { return XRat(num_.scaled(c), den_); }

XRat XRat::derivative() const {
    if (is_polynomial()) return XRat(num_.derivative());
    return XRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

XRat XRat::param_derivative(int i) const {
    return XRat(num_.param_derivative(i) * den_ - num_ * den_.param_derivative(i), den_ * den_);
}

XRat XRat::param_shifted(int i) const {
    return XRat(num_.param_shifted(i), den_.param_shifted(i));
}

XRat XRat::eval_params(const std::vector<Rat>& point) const {
    XPoly d = den_.eval_params(point);
    if (d.is_zero()) throw BadPointError();
    return XRat(num_.eval_params(point), d);
}

int XRat::pole_order(const XPoly& P) const {
    assert(P.degree() >= 1);
    int s = 0;
    XPoly d = den_;
    while (true) {
        auto [q, r] = divrem(d, P);
        if (!r.is_zero()) break;
        ++s;
        d = q;
    }
    return s;
}

XRat PolarPart::value() const {
    int n = place.nvars();
    XRat acc(n);
    XPoly pk = XPoly::one(n);
    for (size_t s = 0; s < coeff.size(); ++s) {
        pk *= place;
        if (!coeff[s].is_zero()) acc += XRat(coeff[s], pk);
    }
    return acc;
}

XRat PartialFractions::recombined() const {
    XRat acc(poly_part.nvars());
    acc += XRat(poly_part);
    for (auto& p : parts) acc += p.value();
    return acc;
}

PartialFractions partial_fraction(const XRat& R, const SqfFactorization& factors) {
    int n = R.nvars();
    // check the factorization matches den(R)
    XPoly prod = XPoly::one(n);
    for (auto& [f, m] : factors.factors) prod *= f.pow(m);
    if (prod.monic() != R.den())
        throw std::invalid_argument("factorization does not match the denominator");

    PartialFractions out;
    auto [q, r] = divrem(R.num(), R.den());
    out.poly_part = q;

    // split r/den across coprime factor powers with Bezout cofactors
    struct Piece {
        XPoly numr;
        size_t idx;
    };
    XPoly rem_num = r;
    XPoly rem_den = R.den();
    for (size_t i = 0; i < factors.factors.size(); ++i) {
        const auto& [P, m] = factors.factors[i];
        XPoly Pm = P.pow(m);
        XPoly rest = exact_div_x(rem_den, Pm);
        XPoly local;
        if (rest.degree() == 0) {
            local = rem_num.scaled(rest.lc().inv());
            rem_num = XPoly::zero(n);
            rem_den = XPoly::one(n);
        } else {
            // rem_num/(Pm*rest) = (rem_num*v mod Pm)/Pm + (...)/rest
            XGcd e = xpoly_xgcd(Pm, rest);  // u*Pm + v*rest = 1
            local = mod(rem_num * e.v, Pm);
            // remaining part: (rem_num - local*rest)/Pm exactly
            rem_num = exact_div_x(rem_num - local * rest, Pm);
            rem_den = rest;
        }
        // P-adic digits of local/P^m
        PolarPart pp;
        pp.place = P;
        pp.coeff.assign(m, XPoly::zero(n));
        XPoly cur = local;
        for (int s = m; s >= 1 && !cur.is_zero(); --s) {
            auto [qq, rr] = divrem(cur, P);
            pp.coeff[s - 1] = rr;
            cur = qq;
        }
        // digits above P^0 belong to the polynomial part
        out.poly_part += cur;
        if (!pp.empty()) out.parts.push_back(std::move(pp));
    }
    return out;
}

} // namespace ctel
