#ifndef CTEL_MPOLY_HPP
#define CTEL_MPOLY_HPP

#include "ctel/rat.hpp"

#include <utility>
#include <vector>

namespace ctel {

using ExpVec = std::vector<int>;

// Canonical monomial order on the parameters t_1 < t_2 < ... < t_e:
// total degree first, ties broken from the last variable down
// (larger exponent on a later variable wins).
int cmp_expvec(const ExpVec& a, const ExpVec& b);

// Sparse multivariate polynomial in the parameters t_1,...,t_e over Rat.
// Terms are kept sorted in decreasing monomial order with no zero
// coefficients; nvars is fixed per value and must agree across operands.
class MPoly {
public:
    using Term = std::pair<ExpVec, Rat>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int i);
    // from unsorted term list (merges duplicates, drops zeros)
    static MPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == ExpVec(nvars_, 0)); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    int total_degree() const;          // -1 for zero
    int degree_in(int i) const;        // -1 for zero
    const Rat& leading_coeff() const;  // under the canonical order
    const ExpVec& leading_monomial() const;
    Rat constant_value() const;        // requires is_constant()

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const Rat& c) const;
    MPoly pow(int k) const;

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int i) const;     // d/dt_i
    MPoly shifted(int i) const;        // t_i -> t_i + 1
    Rat eval(const std::vector<Rat>& point) const;

    // Rational content: *this = c * P with P having coprime integer
    // coefficients and positive leading coefficient. Returns {c, P};
    // zero splits as {0, 0}.
    std::pair<Rat, MPoly> rat_content_split() const;

    // Coefficients of *this viewed as univariate in t_k (index = power of
    // t_k); each coefficient has exponent 0 on t_k.
    std::vector<MPoly> univariate_in(int k) const;
    static MPoly from_univariate(int nvars, int k, const std::vector<MPoly>& coeffs);

private:
    int nvars_;
    std::vector<Term> terms_;
    void normalize();
    friend MPoly mpoly_mul_impl(const MPoly&, const MPoly&);
};

// Primitive gcd: integer coefficients, content 1, positive leading
// coefficient (content-stripped subresultant PRS). gcd(0,0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// Subresultant PRS gcd of univariate coefficient lists over the MPoly ring
// (lowest degree first, nonzero, content-stripped by the caller); returns a
// gcd list up to content. Shared by the multivariate gcd and by gcd
// computations in K[x].
std::vector<MPoly> prs_gcd(std::vector<MPoly> pa, std::vector<MPoly> pb, int nvars);

// Exact division; throws std::domain_error if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);

MPoly lcm(const MPoly& a, const MPoly& b);

} // namespace ctel

#endif
