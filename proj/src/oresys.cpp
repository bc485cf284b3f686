#include "ctel/oresys.hpp"

#include "ctel/linalg.hpp"

#include <cassert>
#include <random>

namespace ctel {

std::pair<XRat, XRat> sigma_delta(int i, const XRat& R, const OreSpec& specs) {
    if (i < 0 || i >= (int)specs.size()) throw std::out_of_range("bad Ore operator index");
    const OreAction& a = specs[i];
    if (a.kind == OreKind::Shift) return {R.param_shifted(a.param), XRat(R.nvars())};
    return {R, R.param_derivative(a.param)};
}

namespace {

// clear denominators by left scaling; the kernel is unchanged
DiffOp clear_denominators(const DiffOp& L) {
    if (L.has_polynomial_coefficients()) return L;
    XPoly D = XPoly::one(L.nvars());
    for (int i = 0; i <= L.order(); ++i)
        if (!L.coeff(i).is_zero()) D = lcm_x(D, L.coeff(i).den());
    return L.scaled(XRat(D));
}

XRat sigma_xrat(const OreAction& a, const XRat& R) {
    return a.kind == OreKind::Shift ? R.param_shifted(a.param) : R;
}

DiffOp sigma_op(const OreAction& a, const DiffOp& L) {
    return a.kind == OreKind::Shift ? L.param_shifted(a.param) : L;
}

// integrability spot-check: T must be a left multiple of L when L is a
// minimal annihilator consistent with the relation
DiffOp compatibility_defect(const DiffOp& L, const DiffOp& C, const OreAction& a) {
    DiffOp T = a.kind == OreKind::Derivation ? L.param_derivative(a.param) + op_mul(L, C)
                                             : op_mul(sigma_op(a, L), C);
    return right_remainder(T, L);
}

bool vanishes_at_specializations(const DiffOp& D, int nvars, std::mt19937_64& rng) {
    if (D.is_zero()) return true;
    if (nvars == 0) return false;
    std::uniform_int_distribution<int> d(3, 89);
    for (int k = 0; k < 2; ++k) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<Rat> pt;
            for (int i = 0; i < nvars; ++i) pt.push_back(Rat(d(rng)));
            try {
                if (!D.eval_params(pt).is_zero()) return false;
                break;
            } catch (const BadPointError&) {
                continue;
            }
        }
    }
    return true;
}

std::vector<XRat> mat_vec(const KxMatrix& A, const std::vector<XRat>& v, int n) {
    size_t r = A.size();
    std::vector<XRat> out(r, XRat(n));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!A[i][j].is_zero() && !v[j].is_zero()) out[i] += A[i][j] * v[j];
    return out;
}

} // namespace

CyclicData from_scalar(const ScalarSystem& sys) {
    if (sys.rels.size() != sys.specs.size())
        throw std::invalid_argument("one relation per Ore operator is required");
    DiffOp L = clear_denominators(sys.L);
    if (L.is_zero() || L.order() < 1) throw std::invalid_argument("annihilator must have order >= 1");
    int n = L.nvars();
    CyclicData cd;
    cd.L = L;
    cd.specs = sys.specs;
    cd.A_f = DiffOp::mult(XRat::one(n));
    cd.gamma.assign(L.order(), XRat(n));
    cd.gamma[0] = XRat::one(n);
    std::mt19937_64 rng(0xabcdef12u);
    for (size_t i = 0; i < sys.rels.size(); ++i) {
        cd.B.push_back(right_remainder(sys.rels[i], L));
        DiffOp defect = compatibility_defect(L, cd.B.back(), sys.specs[i]);
        if (!vanishes_at_specializations(defect, n, rng))
            cd.warnings.push_back("relation " + std::to_string(i) +
                                  " is inconsistent with L, or L is not minimal");
    }
    return cd;
}

MatrixSystem companion_system(const ScalarSystem& sys) {
    DiffOp L = clear_denominators(sys.L);
    int n = L.nvars();
    int r = L.order();
    MatrixSystem ms;
    ms.nvars = n;
    ms.dim = r;
    ms.specs = sys.specs;
    ms.dx.assign(r, std::vector<XRat>(r, XRat(n)));
    XRat lr = L.coeff(r);
    for (int j = 0; j + 1 < r; ++j) ms.dx[j + 1][j] = XRat::one(n);
    for (int i = 0; i < r; ++i) ms.dx[i][r - 1] = -(L.coeff(i) / lr);
    for (auto& C : sys.rels) {
        KxMatrix A(r, std::vector<XRat>(r, XRat(n)));
        DiffOp dxj = DiffOp::mult(XRat::one(n));
        for (int j = 0; j < r; ++j) {
            if (j > 0) dxj = op_mul(DiffOp::dx(n), dxj);
            DiffOp img = right_remainder(op_mul(dxj, C), L);
            for (int i = 0; i < r; ++i) A[i][j] = img.coeff(i);
        }
        ms.act.push_back(std::move(A));
    }
    ms.f.assign(r, XRat(n));
    ms.f[0] = XRat::one(n);
    return ms;
}

CyclicData cyclic_vector(const MatrixSystem& sys, uint64_t seed, int max_trials) {
    int r = sys.dim;
    int n = sys.nvars;
    if ((int)sys.dx.size() != r) throw std::invalid_argument("inconsistent matrix dimensions");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2);

    auto dvec = [&](const std::vector<XRat>& v) {
        std::vector<XRat> out = mat_vec(sys.dx, v, n);
        for (int i = 0; i < r; ++i) out[i] += v[i].derivative();
        return out;
    };

    for (int trial = 0; trial < max_trials; ++trial) {
        std::vector<XRat> gamma(r, XRat(n));
        if (trial < r) {
            gamma[trial] = XRat::one(n);
        } else {
            bool nonzero = false;
            for (int i = 0; i < r; ++i) {
                int c = small(rng);
                if (c != 0) nonzero = true;
                gamma[i] = XRat::constant(KElem::constant(n, Rat((long)c)));
            }
            if (!nonzero) continue;
        }
        std::vector<std::vector<XRat>> cols;  // gamma, dx(gamma), ...
        cols.push_back(gamma);
        for (int k = 1; k <= r; ++k) cols.push_back(dvec(cols.back()));
        std::vector<std::vector<XRat>> W(r, std::vector<XRat>(r, XRat(n)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) W[i][j] = cols[j][i];
        if (rank_of(W) != r) continue;

        auto solve_against = [&](const std::vector<XRat>& rhs) {
            auto sol = solve_linear(W, rhs, XRat(n));
            if (!sol) throw std::logic_error("full-rank system with no solution");
            return *sol;
        };

        CyclicData cd;
        cd.gamma = gamma;
        cd.specs = sys.specs;
        std::vector<XRat> a = solve_against(cols[r]);
        std::vector<XRat> lc(r + 1, XRat(n));
        for (int k = 0; k < r; ++k) lc[k] = -a[k];
        lc[r] = XRat::one(n);
        cd.L = clear_denominators(DiffOp(n, lc)).content_normalized();
        for (size_t i = 0; i < sys.act.size(); ++i) {
            std::vector<XRat> sg(r, XRat(n));
            for (int k = 0; k < r; ++k) sg[k] = sigma_xrat(sys.specs[i], gamma[k]);
            std::vector<XRat> rhs = mat_vec(sys.act[i], sg, n);
            for (int k = 0; k < r; ++k) {
                auto [s, d] = sigma_delta((int)i, gamma[k], sys.specs);
                rhs[k] += d;
            }
            std::vector<XRat> beta = solve_against(rhs);
            cd.B.push_back(DiffOp(n, beta));
        }
        cd.A_f = DiffOp(n, solve_against(sys.f));
        return cd;
    }
    throw std::runtime_error("no cyclic vector found after " + std::to_string(max_trials) +
                             " trials");
}

XRat lambda_map(int i, const XRat& R, const CyclicData& cd) {
    auto [s, d] = sigma_delta(i, R, cd.specs);
    return apply(adjoint(cd.B.at(i)), s) + d;
}

XRat initial_F(const CyclicData& cd, const Reducer& reducer) {
    return reducer.reduce(apply(adjoint(cd.A_f), XRat::one(cd.L.nvars()))).reduced;
}

} // namespace ctel
