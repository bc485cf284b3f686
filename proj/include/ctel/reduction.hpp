#ifndef CTEL_REDUCTION_HPP
#define CTEL_REDUCTION_HPP

#include "ctel/diffop.hpp"

#include <memory>

namespace ctel {

struct ReductionResult {
    XRat reduced;
    XRat certificate;  // input = reduced + M(certificate), exactly
};

struct ExcCapExceeded : std::runtime_error {
    explicit ExcCapExceeded(size_t count, size_t cap)
        : std::runtime_error("exceptional generator count " + std::to_string(count) +
                             " exceeds the cap " + std::to_string(cap)) {}
};

// Echelonized basis of Exc_M = H(im M), written as Q^-1 * V with V spanned
// by the rows. Each row keeps a preimage u with M(u) = row/Q so that
// eliminations stay certified.
struct ExcBasis {
    std::vector<XRat> generators;  // the nonzero reductions H(M(g)) of the generator family
    XPoly common_den;              // Q
    struct Row {
        XPoly v;       // monic at its pivot (leading) degree
        XRat preimage;
    };
    std::vector<Row> rows;  // decreasing pivot degree, fully inter-reduced
    int dimension() const { return (int)rows.size(); }
};

struct ReducerOptions {
    size_t exc_cap = 256;
    uint64_t seed = 0x1d9a7e11u;
};

class LocalContext;

// Precomputed reduction context for an operator. Construction normalizes
// rational coefficients away (recording Q so certificates map back) and
// computes the exceptional basis; afterwards reduce() computes canonical
// forms [R] with certificates.
class Reducer {
public:
    explicit Reducer(const DiffOp& M, ReducerOptions opt = {});
    // shell preconditioner: requires M*A = B*L for the derived L (checked)
    Reducer(const DiffOp& M, const XRat& A, const XRat& B, ReducerOptions opt = {});

    const DiffOp& original() const { return original_; }
    const DiffOp& op() const;             // polynomial operator reduced against
    const XPoly& normalizer() const { return polyQ_; }
    const ExcBasis& exceptional() const { return exc_; }
    const LocalDataInfinity& infinity_data() const;
    const XRat& shell_A() const { return shellA_; }
    const XRat& shell_B() const { return shellB_; }

    ReductionResult reduce(const XRat& R) const;  // [R] and its certificate
    XRat rho(const XRat& R) const;

private:
    DiffOp original_;
    XRat shellA_, shellB_;
    XPoly polyQ_;
    std::shared_ptr<LocalContext> ctx_;
    ExcBasis exc_;
    void build(const DiffOp& inner, ReducerOptions opt);
};

// Algorithm: rational weak Hermite reduction. M nonzero with polynomial
// coefficients.
ReductionResult weak_reduce(const XRat& R, const DiffOp& M);

ExcBasis exceptional_basis(const DiffOp& M, ReducerOptions opt = {});

// idempotent projection along the span of the basis
XRat rho(const ExcBasis& exc, const XRat& R);

ReductionResult canonical_form(const XRat& R, const Reducer& reducer);

// Lemma-style adapter [R]_M = B*[R/B]_L built from M*A = B*L.
Reducer shell_transform(const DiffOp& M, const XRat& A, const XRat& B, ReducerOptions opt = {});
// A = B = prod P^{m_P}, m_P the smallest negative integer root of ind_P (0 if none)
std::pair<XRat, XRat> default_shell(const DiffOp& M, ReducerOptions opt = {});

// Exact linear-algebra search for U with M(U) = R over a bounded ansatz;
// none is conclusive only for the searched space.
std::optional<XRat> brute_force_preimage(const DiffOp& M, const XRat& R, int bound);

// Adolphson bound (deg P + 1)*r + d on dim E_P / M(E_P)
int quotient_dimension_bound(const DiffOp& M, const XPoly& P);

} // namespace ctel

#endif
