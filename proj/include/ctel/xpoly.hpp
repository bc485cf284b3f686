#ifndef CTEL_XPOLY_HPP
#define CTEL_XPOLY_HPP

#include "ctel/kelem.hpp"

#include <optional>
#include <variant>

namespace ctel {

// Dense univariate polynomial in the main variable x over K.
// Coefficients are stored lowest degree first; the leading coefficient of a
// nonzero polynomial is nonzero.
class XPoly {
public:
    XPoly() : nvars_(0) {}
    explicit XPoly(int nvars) : nvars_(nvars) {}
    XPoly(int nvars, std::vector<KElem> coeffs);

    static XPoly zero(int nvars) { return XPoly(nvars); }
    static XPoly one(int nvars) { return constant(nvars, Rat(1)); }
    static XPoly constant(int nvars, const Rat& c) { return XPoly(nvars, {KElem::constant(nvars, c)}); }
    static XPoly constant(const KElem& c) { return XPoly(c.nvars(), {c}); }
    static XPoly x(int nvars) { return monomial(nvars, 1, KElem::one(nvars)); }
    static XPoly monomial(int nvars, int deg, const KElem& c);

    int nvars() const { return nvars_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    const KElem& lc() const;
    KElem coeff(int i) const;  // 0 outside range
    const std::vector<KElem>& coeffs() const { return c_; }

    XPoly operator-() const;
    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }
    XPoly scaled(const KElem& c) const;
    XPoly shifted_up(int k) const;  // * x^k
    XPoly pow(int k) const;

    bool operator==(const XPoly& o) const { return nvars_ == o.nvars_ && c_ == o.c_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    XPoly derivative() const;          // d/dx
    XPoly monic() const;
    KElem eval_k(const KElem& v) const;

    // parameter actions, coefficient-wise
    XPoly param_derivative(int i) const;
    XPoly param_shifted(int i) const;
    XPoly eval_params(const std::vector<Rat>& point) const;  // result has nvars 0

private:
    int nvars_;
    std::vector<KElem> c_;
    void trim();
};

// Euclidean division over the field K; den must be nonzero.
std::pair<XPoly, XPoly> divrem(const XPoly& a, const XPoly& b);
XPoly mod(const XPoly& a, const XPoly& b);
bool divides_x(const XPoly& b, const XPoly& a);
XPoly exact_div_x(const XPoly& a, const XPoly& b);

// monic gcd; gcd_x(0,0) = 0
XPoly gcd_x(const XPoly& a, const XPoly& b);
XPoly lcm_x(const XPoly& a, const XPoly& b);

// extended gcd: g monic, g = u*a + v*b
struct XGcd {
    XPoly g, u, v;
};
XGcd xpoly_xgcd(const XPoly& a, const XPoly& b);

struct SqfFactorization {
    // pairwise coprime squarefree monic factors with multiplicities;
    // unit * prod factor^mult == input
    std::vector<std::pair<XPoly, int>> factors;
    KElem unit;
};

// Yun's algorithm (characteristic 0). p must be nonzero.
SqfFactorization squarefree_factorization(const XPoly& p);

// Witness that U is a zero divisor modulo squarefree P: a monic proper
// divisor of P.
struct ZeroDivisorWitness {
    XPoly g;
};

// V with U*V = 1 mod P, or a witness when gcd(U mod P, P) is proper.
// U = 0 mod P throws.
std::variant<XPoly, ZeroDivisorWitness> invert_mod(const XPoly& U, const XPoly& P);

} // namespace ctel

#endif
