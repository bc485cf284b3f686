#include "ctel/reduction.hpp"

#include "ctel/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ctel {

// Shared local data for one polynomial operator: the place cache and the
// data at infinity. Mutable through a const Reducer; callers provide
// external synchronization if they share a Reducer across threads.
class LocalContext {
public:
    LocalContext(DiffOp M, uint64_t seed) : M_(std::move(M)), rng_(seed) {
        inf_ = local_data_infinity(M_);
    }

    const DiffOp& op() const { return M_; }
    const LocalDataInfinity& infinity() const { return inf_; }
    std::mt19937_64& rng() const { return rng_; }

    // local data or the divisor the place must be split at
    std::variant<const LocalDataFinite*, XPoly> local(const XPoly& P) const {
        for (auto& d : cache_)
            if (d->place == P) return d.get();
        auto res = local_data_finite(M_, P);
        if (std::holds_alternative<SplitRequest>(res))
            return std::get<SplitRequest>(res).divisor;
        cache_.push_back(std::make_unique<LocalDataFinite>(std::get<LocalDataFinite>(res)));
        return cache_.back().get();
    }

private:
    DiffOp M_;
    LocalDataInfinity inf_;
    mutable std::vector<std::unique_ptr<LocalDataFinite>> cache_;
    mutable std::mt19937_64 rng_;
};

namespace {

ReductionResult weak_reduce_ctx(const XRat& R, const LocalContext& ctx) {
    const DiffOp& M = ctx.op();
    int n = M.nvars();
    XRat work = R, emitted(n), cert(n);

    std::vector<XPoly> places;
    if (!work.is_polynomial())
        for (auto& [f, m] : squarefree_factorization(work.den()).factors) places.push_back(f);

    while (!places.empty()) {
        XPoly P = places.back();
        places.pop_back();
        bool split = false;
        while (!split) {
            int s = work.pole_order(P);
            if (s == 0) break;
            auto loc = ctx.local(P);
            if (std::holds_alternative<XPoly>(loc)) {
                XPoly g = std::get<XPoly>(loc);
                places.push_back(g);
                places.push_back(exact_div_x(P, g).monic());
                split = true;
                break;
            }
            const LocalDataFinite* ld = std::get<const LocalDataFinite*>(loc);
            XPoly Ps = P.pow(s);
            XPoly Qd = exact_div_x(work.den(), Ps);
            auto qi = invert_mod(mod(Qd, P), P);
            if (std::holds_alternative<ZeroDivisorWitness>(qi)) {
                XPoly g = std::get<ZeroDivisorWitness>(qi).g;
                places.push_back(g);
                places.push_back(exact_div_x(P, g).monic());
                split = true;
                break;
            }
            XPoly U0 = mod(work.num() * std::get<XPoly>(qi), P);
            XPoly val = ld->indicial.eval(-(long)s - ld->shift, P);
            if (val.is_zero()) {
                XRat term(U0, Ps);
                emitted += term;
                work -= term;
            } else {
                if (s + ld->shift <= 0)
                    throw std::logic_error("nonzero indicial value at a nonnegative power");
                auto vi = invert_mod(val, P);
                if (std::holds_alternative<ZeroDivisorWitness>(vi)) {
                    XPoly g = std::get<ZeroDivisorWitness>(vi).g;
                    places.push_back(g);
                    places.push_back(exact_div_x(P, g).monic());
                    split = true;
                    break;
                }
                XPoly W = mod(U0 * std::get<XPoly>(vi), P);
                XRat theta(W, P.pow(s + ld->shift));
                cert += theta;
                work -= apply(M, theta);
            }
        }
    }

    if (!work.is_polynomial())
        throw std::logic_error("weak reduction left a non-polynomial remainder");
    XPoly poly = work.num();
    const LocalDataInfinity& inf = ctx.infinity();
    XPoly respoly(n);
    while (!poly.is_zero()) {
        int s = poly.degree();
        KElem c = poly.lc();
        bool reduced_here = false;
        if (s + inf.shift >= 0) {
            KElem val = inf.indicial.eval(-(long)s - inf.shift);
            if (!val.is_zero()) {
                XRat theta(XPoly::monomial(n, s + inf.shift, c * val.inv()));
                cert += theta;
                XRat img = apply(M, theta);
                assert(img.is_polynomial());
                poly -= img.num();
                assert(poly.degree() < s);
                reduced_here = true;
            }
        }
        if (!reduced_here) {
            XPoly t = XPoly::monomial(n, s, c);
            respoly += t;
            poly -= t;
        }
    }
    return {emitted + XRat(respoly), cert};
}

struct GenReduction {
    XRat w;
    XRat pre;
};

ExcBasis build_exceptional(const LocalContext& ctx, size_t cap) {
    const DiffOp& M = ctx.op();
    int n = M.nvars();

    std::vector<XRat> gens;
    std::vector<XPoly> work = singular_places(M);
    while (!work.empty()) {
        XPoly P = work.back();
        work.pop_back();
        auto loc = ctx.local(P);
        if (std::holds_alternative<XPoly>(loc)) {
            XPoly g = std::get<XPoly>(loc);
            work.push_back(g);
            work.push_back(exact_div_x(P, g).monic());
            continue;
        }
        const LocalDataFinite* ld = std::get<const LocalDataFinite*>(loc);
        RootScan scan = integer_roots_mod(ld->indicial, P, ctx.rng(), true);
        if (scan.split) {
            work.push_back(*scan.split);
            work.push_back(exact_div_x(P, *scan.split).monic());
            continue;
        }
        std::set<int> S;
        for (long u : scan.roots)
            if (u < 0) S.insert((int)-u);
        for (int s = 1; s <= ld->shift; ++s) S.insert(s);
        for (int s : S)
            for (int j = 0; j < P.degree(); ++j)
                gens.push_back(XRat(XPoly::monomial(n, j, KElem::one(n)), P.pow(s)));
        if (gens.size() > cap) throw ExcCapExceeded(gens.size(), cap);
    }
    for (long u : integer_roots(ctx.infinity().indicial, ctx.rng()))
        if (u <= 0) gens.push_back(XRat(XPoly::monomial(n, (int)-u, KElem::one(n))));
    if (gens.size() > cap) throw ExcCapExceeded(gens.size(), cap);

    ExcBasis exc;
    exc.common_den = XPoly::one(n);
    std::vector<GenReduction> ws;
    for (auto& g : gens) {
        XRat v = apply(M, g);
        ReductionResult wr = weak_reduce_ctx(v, ctx);
        if (wr.reduced.is_zero()) continue;
        exc.generators.push_back(wr.reduced);
        ws.push_back({wr.reduced, g - wr.certificate});
        exc.common_den = lcm_x(exc.common_den, wr.reduced.den());
    }

    // echelonize numerators of Q*w with preimage tracking
    for (auto& gw : ws) {
        XRat scaled = XRat(exc.common_den) * gw.w;
        if (!scaled.is_polynomial()) throw std::logic_error("bad common denominator for Exc");
        XPoly v = scaled.num();
        XRat pre = gw.pre;
        while (!v.is_zero()) {
            int d = v.degree();
            auto it = std::find_if(exc.rows.begin(), exc.rows.end(),
                                   [&](const ExcBasis::Row& r) { return r.v.degree() == d; });
            if (it == exc.rows.end()) break;
            KElem c = v.lc();  // rows are monic at the pivot
            v -= it->v.scaled(c);
            pre -= it->preimage.scaled(c);
        }
        if (v.is_zero()) continue;
        KElem u = v.lc().inv();
        exc.rows.push_back({v.scaled(u), pre.scaled(u)});
        std::sort(exc.rows.begin(), exc.rows.end(),
                  [](const ExcBasis::Row& a, const ExcBasis::Row& b) {
                      return a.v.degree() > b.v.degree();
                  });
    }
    // full inter-reduction
    for (size_t i = 0; i < exc.rows.size(); ++i)
        for (size_t j = 0; j < exc.rows.size(); ++j) {
            if (i == j) continue;
            KElem c = exc.rows[i].v.coeff(exc.rows[j].v.degree());
            if (c.is_zero()) continue;
            exc.rows[i].v -= exc.rows[j].v.scaled(c);
            exc.rows[i].preimage -= exc.rows[j].preimage.scaled(c);
        }
    return exc;
}

// eliminate the Exc span out of R; returns the projection and the
// accumulated preimage so that R = result + M(extra) + (unchanged part)
std::pair<XRat, XRat> rho_apply(const ExcBasis& exc, const XRat& R) {
    int n = R.nvars();
    if (exc.rows.empty()) return {R, XRat(n)};
    XRat S = XRat(exc.common_den) * R;
    auto [q, rem] = divrem(S.num(), S.den());
    XPoly spoly = q;
    XRat srest = XRat(rem, S.den());
    XRat extra(n);
    for (auto& row : exc.rows) {
        KElem c = spoly.coeff(row.v.degree());
        if (c.is_zero()) continue;
        spoly -= row.v.scaled(c);
        extra += row.preimage.scaled(c);
    }
    XRat value = (XRat(spoly) + srest) / XRat(exc.common_den);
    return {value, extra};
}

} // namespace

// ---------------------------------------------------------------------------
// Reducer

void Reducer::build(const DiffOp& inner, ReducerOptions opt) {
    if (inner.is_zero()) throw std::domain_error("Reducer over the zero operator");
    DiffOp Mp = inner;
    polyQ_ = XPoly::one(inner.nvars());
    if (!Mp.has_polynomial_coefficients()) {
        auto [m, q] = poly_normalize(inner);
        Mp = m;
        polyQ_ = q;
    }
    ctx_ = std::make_shared<LocalContext>(Mp, opt.seed);
    exc_ = build_exceptional(*ctx_, opt.exc_cap);
}

Reducer::Reducer(const DiffOp& M, ReducerOptions opt)
    : original_(M), shellA_(XRat::one(M.nvars())), shellB_(XRat::one(M.nvars())) {
    build(M, opt);
}

Reducer::Reducer(const DiffOp& M, const XRat& A, const XRat& B, ReducerOptions opt)
    : original_(M), shellA_(A), shellB_(B) {
    if (A.is_zero() || B.is_zero())
        throw std::domain_error("shell factors must be nonzero rational functions");
    DiffOp L = op_mul(M, DiffOp::mult(A)).scaled(B.inv());
    // M*A = B*L holds by construction; check the expansion anyway
    if (op_mul(M, DiffOp::mult(A)) != op_mul(DiffOp::mult(B), L))
        throw std::logic_error("shell factorization failed to verify");
    build(L, opt);
}

const DiffOp& Reducer::op() const { return ctx_->op(); }
const LocalDataInfinity& Reducer::infinity_data() const { return ctx_->infinity(); }

ReductionResult Reducer::reduce(const XRat& R) const {
    bool shell = !shellB_.num().is_one() || !shellB_.den().is_one() ||
                 !shellA_.num().is_one() || !shellA_.den().is_one();
    XRat target = shell ? R / shellB_ : R;
    ReductionResult wr = weak_reduce_ctx(target, *ctx_);
    auto [value, extra] = rho_apply(exc_, wr.reduced);
    XRat cert_inner = XRat(polyQ_) * (wr.certificate + extra);
    if (!shell) return {value, cert_inner};
    return {shellB_ * value, shellA_ * cert_inner};
}

XRat Reducer::rho(const XRat& R) const { return rho_apply(exc_, R).first; }

// ---------------------------------------------------------------------------
// free functions

ReductionResult weak_reduce(const XRat& R, const DiffOp& M) {
    if (M.is_zero()) throw std::domain_error("weak reduction modulo the zero operator");
    if (!M.has_polynomial_coefficients())
        throw std::invalid_argument("weak_reduce needs polynomial coefficients");
    LocalContext ctx(M, ReducerOptions{}.seed);
    return weak_reduce_ctx(R, ctx);
}

ExcBasis exceptional_basis(const DiffOp& M, ReducerOptions opt) {
    if (M.is_zero()) throw std::domain_error("exceptional basis of the zero operator");
    if (!M.has_polynomial_coefficients())
        throw std::invalid_argument("exceptional_basis needs polynomial coefficients");
    LocalContext ctx(M, opt.seed);
    return build_exceptional(ctx, opt.exc_cap);
}

XRat rho(const ExcBasis& exc, const XRat& R) { return rho_apply(exc, R).first; }

ReductionResult canonical_form(const XRat& R, const Reducer& reducer) {
    return reducer.reduce(R);
}

Reducer shell_transform(const DiffOp& M, const XRat& A, const XRat& B, ReducerOptions opt) {
    return Reducer(M, A, B, opt);
}

std::pair<XRat, XRat> default_shell(const DiffOp& M, ReducerOptions opt) {
    if (M.is_zero()) throw std::domain_error("shell of the zero operator");
    DiffOp Mp = M;
    if (!Mp.has_polynomial_coefficients()) Mp = poly_normalize(M).first;
    int n = M.nvars();
    std::mt19937_64 rng(opt.seed);
    LocalContext ctx(Mp, opt.seed);
    XRat A = XRat::one(n);
    std::vector<XPoly> work = singular_places(Mp);
    while (!work.empty()) {
        XPoly P = work.back();
        work.pop_back();
        auto loc = ctx.local(P);
        if (std::holds_alternative<XPoly>(loc)) {
            XPoly g = std::get<XPoly>(loc);
            work.push_back(g);
            work.push_back(exact_div_x(P, g).monic());
            continue;
        }
        const LocalDataFinite* ld = std::get<const LocalDataFinite*>(loc);
        RootScan scan = integer_roots_mod(ld->indicial, P, rng, true);
        if (scan.split) {
            work.push_back(*scan.split);
            work.push_back(exact_div_x(P, *scan.split).monic());
            continue;
        }
        long m = 0;
        for (long u : scan.roots)
            if (u < 0) m = std::min(m, u);
        if (m < 0) A = A / XRat(P.pow((int)-m));
    }
    return {A, A};
}

std::optional<XRat> brute_force_preimage(const DiffOp& M, const XRat& R, int bound) {
    if (bound < 0) throw std::invalid_argument("negative ansatz bound");
    if (M.is_zero()) throw std::domain_error("preimage under the zero operator");
    if (!M.has_polynomial_coefficients())
        throw std::invalid_argument("brute_force_preimage needs polynomial coefficients");
    const DiffOp& Mp = M;
    int n = Mp.nvars();
    int sigma = local_data_infinity(Mp).shift;
    XPoly D = (R.den() * Mp.poly_coeff(Mp.order())).pow(bound);
    int N = bound + D.degree() + std::max(-sigma, 0);

    std::vector<XRat> images;
    XPoly CD = R.den();
    for (int j = 0; j <= N; ++j) {
        images.push_back(apply(Mp, XRat(XPoly::monomial(n, j, KElem::one(n)), D)));
        CD = lcm_x(CD, images.back().den());
    }
    std::vector<XPoly> cols;
    int maxdeg = 0;
    for (auto& b : images) {
        XRat s = XRat(CD) * b;
        assert(s.is_polynomial());
        cols.push_back(s.num());
        maxdeg = std::max(maxdeg, cols.back().degree());
    }
    XRat rs = XRat(CD) * R;
    assert(rs.is_polynomial());
    XPoly rhs = rs.num();
    maxdeg = std::max(maxdeg, rhs.degree());

    std::vector<std::vector<KElem>> A(maxdeg + 1, std::vector<KElem>(N + 1, KElem(n)));
    std::vector<KElem> b(maxdeg + 1, KElem(n));
    for (int row = 0; row <= maxdeg; ++row) {
        for (int j = 0; j <= N; ++j) A[row][j] = cols[j].coeff(row);
        b[row] = rhs.coeff(row);
    }
    auto sol = solve_linear(A, b, KElem(n));
    if (!sol) return std::nullopt;
    std::vector<KElem> cs(N + 1, KElem(n));
    for (int j = 0; j <= N; ++j) cs[j] = (*sol)[j];
    XRat U = XRat(XPoly(n, cs), D);
    if (apply(Mp, U) != R) throw std::logic_error("brute force solution failed verification");
    return U;
}

int quotient_dimension_bound(const DiffOp& M, const XPoly& P) {
    DiffOp Mp = M;
    if (!Mp.has_polynomial_coefficients()) Mp = poly_normalize(M).first;
    int d = 0;
    for (int i = 0; i <= Mp.order(); ++i) d = std::max(d, Mp.poly_coeff(i).degree());
    return (P.degree() + 1) * Mp.order() + d;
}

} // namespace ctel
