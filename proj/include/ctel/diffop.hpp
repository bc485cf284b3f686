#ifndef CTEL_DIFFOP_HPP
#define CTEL_DIFFOP_HPP

#include "ctel/xrat.hpp"

#include <random>

namespace ctel {

// Linear differential operator sum c_i(x) * Dx^i over K(x).
class DiffOp {
public:
    DiffOp() : nvars_(0) {}
    explicit DiffOp(int nvars) : nvars_(nvars) {}
    DiffOp(int nvars, std::vector<XRat> coeffs);

    static DiffOp zero(int nvars) { return DiffOp(nvars); }
    static DiffOp mult(const XRat& c) { return DiffOp(c.nvars(), {c}); }
    static DiffOp mult(const XPoly& c) { return mult(XRat(c)); }
    static DiffOp dx(int nvars) { return DiffOp(nvars, {XRat(nvars), XRat::one(nvars)}); }
    static DiffOp from_poly_coeffs(int nvars, const std::vector<XPoly>& cs);

    int nvars() const { return nvars_; }
    int order() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    XRat coeff(int i) const;
    const std::vector<XRat>& coeffs() const { return c_; }
    bool has_polynomial_coefficients() const;
    XPoly poly_coeff(int i) const;  // requires polynomial coefficients

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp scaled(const XRat& c) const;  // left multiplication by an element of K(x)
    bool operator==(const DiffOp& o) const { return nvars_ == o.nvars_ && c_ == o.c_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    // coefficient-wise parameter actions (used for Ore commutation checks)
    DiffOp param_shifted(int i) const;
    DiffOp param_derivative(int i) const;
    DiffOp eval_params(const std::vector<Rat>& point) const;

    // canonical K-scaling: polynomial primitive coefficients, positive sign
    DiffOp content_normalized() const;

private:
    int nvars_;
    std::vector<XRat> c_;
    void trim();
};

XRat apply(const DiffOp& M, const XRat& R);
DiffOp adjoint(const DiffOp& L);
DiffOp op_mul(const DiffOp& A, const DiffOp& B);
// C = Q*L + B with order(B) < order(L)
std::pair<DiffOp, DiffOp> right_divrem(const DiffOp& C, const DiffOp& L);
DiffOp right_remainder(const DiffOp& C, const DiffOp& L);

// M' = M*Q with polynomial coefficients and the same image. M nonzero.
std::pair<DiffOp, XPoly> poly_normalize(const DiffOp& M);

// Polynomial in the formal root-order variable with coefficients in K[x]
// (reduced mod the place for indicial data) or in K for the place at
// infinity.
struct SPolyX {
    std::vector<XPoly> c;  // c[k] * s^k
    bool is_zero() const {
        for (auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    int degree() const;
    XPoly eval(long m, const XPoly& modP) const;  // value reduced mod P
    XPoly eval_plain(long m) const;
};

struct SPolyK {
    std::vector<KElem> c;
    bool is_zero() const {
        for (auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    int degree() const;
    KElem eval(long m) const;
};

struct LocalDataFinite {
    XPoly place;     // monic squarefree
    int shift;       // sigma_P
    SPolyX indicial; // ind_P, coefficients reduced mod place
};

struct LocalDataInfinity {
    int shift;       // sigma_inf
    SPolyK indicial; // ind_inf over K
};

// the place must be split before local data is well defined
struct SplitRequest {
    XPoly divisor;  // monic proper divisor of the place
};

// M with polynomial coefficients, P monic squarefree.
std::variant<LocalDataFinite, SplitRequest> local_data_finite(const DiffOp& M, const XPoly& P);
LocalDataInfinity local_data_infinity(const DiffOp& M);

// monic squarefree factors of the leading coefficient
std::vector<XPoly> singular_places(const DiffOp& M);

// Exactly the integers m with q(m) = 0 in the coefficient algebra (K, or
// K[x]/(P)). Randomized specializations are only a candidate filter; every
// candidate is verified symbolically. q must be nonzero.
std::vector<long> integer_roots(const SPolyK& q, std::mt19937_64& rng);

struct RootScan {
    std::vector<long> roots;      // integers with full vanishing mod P
    std::optional<XPoly> split;   // set when some integer vanishes only mod a proper factor
};
// detect_partial also looks for integers vanishing modulo a proper factor of
// P and reports the factor instead of a root list.
RootScan integer_roots_mod(const SPolyX& q, const XPoly& P, std::mt19937_64& rng,
                           bool detect_partial);

} // namespace ctel

#endif
