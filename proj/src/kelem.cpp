#include "ctel/kelem.hpp"

#include <cassert>

namespace ctel {

KElem::KElem(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("KElem with zero denominator");
    normalize();
}

KElem::KElem(MPoly num)
    : num_(std::move(num)), den_(MPoly::constant(0, Rat(1))) {
    den_ = MPoly::constant(num_.nvars(), Rat(1));
}

void KElem::normalize() {
    assert(num_.nvars() == den_.nvars());
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.nvars(), Rat(1));
        return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    auto [c, d] = den_.rat_content_split();
    den_ = d;
    num_ = num_.scaled(Rat(1) / c);
}

KElem KElem::operator-() const {
    KElem r(*this);
    r.num_ = -r.num_;
    return r;
}

KElem KElem::operator+(const KElem& o) const {
    return KElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

KElem KElem::operator-(const KElem& o) const {
    return KElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

KElem KElem::operator*(const KElem& o) const {
    return KElem(num_ * o.num_, den_ * o.den_);
}

KElem KElem::operator/(const KElem& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in K");
    return KElem(num_ * o.den_, den_ * o.num_);
}

KElem KElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in K");
    return KElem(den_, num_);
}

KElem KElem::derivative(int i) const {
    return KElem(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

KElem KElem::shifted(int i) const { return KElem(num_.shifted(i), den_.shifted(i)); }

Rat KElem::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw BadPointError();
    return num_.eval(point) / d;
}

KElem k_arith(const KElem& a, const KElem& b, KOp op) {
    switch (op) {
        case KOp::Add: return a + b;
        case KOp::Sub: return a - b;
        case KOp::Mul: return a * b;
        case KOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

} // namespace ctel
