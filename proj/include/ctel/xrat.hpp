#ifndef CTEL_XRAT_HPP
#define CTEL_XRAT_HPP

#include "ctel/xpoly.hpp"

#include <map>

namespace ctel {

// Rational function in x over K, in lowest terms with monic denominator.
class XRat {
public:
    XRat() : num_(0), den_(XPoly::one(0)) {}
    explicit XRat(int nvars) : num_(nvars), den_(XPoly::one(nvars)) {}
    XRat(XPoly num, XPoly den);
    explicit XRat(XPoly num) : num_(std::move(num)), den_(XPoly::one(num_.nvars())) {}

    static XRat zero(int nvars) { return XRat(nvars); }
    static XRat one(int nvars) { return XRat(XPoly::one(nvars)); }
    static XRat constant(const KElem& c) { return XRat(XPoly::constant(c)); }
    static XRat x(int nvars) { return XRat(XPoly::x(nvars)); }

    int nvars() const { return num_.nvars(); }
    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    XRat operator-() const;
    XRat operator+(const XRat& o) const;
    XRat operator-(const XRat& o) const;
    XRat operator*(const XRat& o) const;
    XRat operator/(const XRat& o) const;
    XRat& operator+=(const XRat& o) { return *this = *this + o; }
    XRat& operator-=(const XRat& o) { return *this = *this - o; }
    XRat& operator*=(const XRat& o) { return *this = *this * o; }
    XRat& operator/=(const XRat& o) { return *this = *this / o; }
    XRat inv() const;
    XRat scaled(const KElem& c) const;

    bool operator==(const XRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const XRat& o) const { return !(*this == o); }

    XRat derivative() const;  // d/dx

    XRat param_derivative(int i) const;
    XRat param_shifted(int i) const;
    XRat eval_params(const std::vector<Rat>& point) const;

    // multiplicity of the monic squarefree place P in the denominator
    int pole_order(const XPoly& P) const;

private:
    XPoly num_, den_;
    void normalize();
};

// Polar part of the P-adic expansion at one squarefree place:
// sum over s>=1 of coeff[s-1] * P^-s with deg coeff[s-1] < deg P.
struct PolarPart {
    XPoly place;
    std::vector<XPoly> coeff;
    bool empty() const {
        for (auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    XRat value() const;
};

struct PartialFractions {
    XPoly poly_part;
    std::vector<PolarPart> parts;  // one per factor with a pole, factor order
    XRat recombined() const;
};

// factors must be a squarefree factorization of den(R); throws otherwise.
PartialFractions partial_fraction(const XRat& R, const SqfFactorization& factors);

} // namespace ctel

#endif
