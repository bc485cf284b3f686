#include "ctel/diffop.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace ctel {

DiffOp::DiffOp(int nvars, std::vector<XRat> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
    trim();
}

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::from_poly_coeffs(int nvars, const std::vector<XPoly>& cs) {
    std::vector<XRat> v;
    v.reserve(cs.size());
    for (auto& p : cs) v.emplace_back(p);
    return DiffOp(nvars, std::move(v));
}

XRat DiffOp::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return XRat(nvars_);
    return c_[i];
}

bool DiffOp::has_polynomial_coefficients() const {
    for (auto& c : c_)
        if (!c.is_polynomial()) return false;
    return true;
}

XPoly DiffOp::poly_coeff(int i) const {
    XRat c = coeff(i);
    if (!c.is_polynomial()) throw std::logic_error("operator coefficient is not polynomial");
    return c.num();
}

DiffOp DiffOp::operator-() const {
    DiffOp r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    assert(nvars_ == o.nvars_);
    std::vector<XRat> v(std::max(c_.size(), o.c_.size()), XRat(nvars_));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return DiffOp(nvars_, std::move(v));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const XRat& c) const {
    if (c.is_zero()) return DiffOp(nvars_);
    DiffOp r(*this);
    for (auto& k : r.c_) k *= c;
    return r;
}

DiffOp DiffOp::param_shifted(int i) const {
    DiffOp r(*this);
    for (auto& c : r.c_) c = c.param_shifted(i);
    r.trim();
    return r;
}

DiffOp DiffOp::param_derivative(int i) const {
    DiffOp r(*this);
    for (auto& c : r.c_) c = c.param_derivative(i);
    r.trim();
    return r;
}

DiffOp DiffOp::eval_params(const std::vector<Rat>& point) const {
    std::vector<XRat> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(c.eval_params(point));
    return DiffOp(0, std::move(v));
}

DiffOp DiffOp::content_normalized() const {
    if (is_zero()) return *this;
    // K-content over all numerator coefficients
    MPoly D = MPoly::constant(nvars_, Rat(1));
    for (auto& c : c_)
        for (auto& k : c.num().coeffs())
            if (!k.is_zero()) D = lcm(D, k.den());
    MPoly N(nvars_);
    for (auto& c : c_)
        for (auto& k : c.num().coeffs())
            if (!k.is_zero()) N = gcd(N, k.num() * exact_div(D, k.den()));
    KElem gamma = KElem(N, D).inv();
    DiffOp out(nvars_);
    out = scaled(XRat::constant(gamma));
    // global rational content and sign
    Int gn = 0, gl = 1;
    for (auto& c : out.c_)
        for (auto& k : c.num().coeffs())
            for (auto& t : k.num().terms()) {
                mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), t.second.get_num().get_mpz_t());
                mpz_lcm(gl.get_mpz_t(), gl.get_mpz_t(), t.second.get_den().get_mpz_t());
            }
    Rat gc(gn, gl);
    gc.canonicalize();
    const XRat& top = out.c_.back();
    if (top.num().lc().num().leading_coeff() < 0) gc = -gc;
    out = out.scaled(XRat::constant(KElem::constant(nvars_, Rat(1) / gc)));
    return out;
}

XRat apply(const DiffOp& M, const XRat& R) {
    XRat acc(M.nvars());
    XRat d = R;
    for (int i = 0; i <= M.order(); ++i) {
        if (i > 0) d = d.derivative();
        if (!M.coeff(i).is_zero()) acc += M.coeff(i) * d;
    }
    return acc;
}

DiffOp op_mul(const DiffOp& A, const DiffOp& B) {
    assert(A.nvars() == B.nvars());
    int n = A.nvars();
    if (A.is_zero() || B.is_zero()) return DiffOp(n);
    // dx * (sum b_j Dx^j) = sum (b_j' Dx^j + b_j Dx^(j+1))
    auto dx_times = [n](const DiffOp& C) {
        std::vector<XRat> v(C.order() + 2, XRat(n));
        for (int j = 0; j <= C.order(); ++j) {
            v[j] += C.coeff(j).derivative();
            v[j + 1] += C.coeff(j);
        }
        return DiffOp(n, std::move(v));
    };
    DiffOp acc(n), cur = B;
    for (int i = 0; i <= A.order(); ++i) {
        if (i > 0) cur = dx_times(cur);
        if (!A.coeff(i).is_zero()) acc = acc + cur.scaled(A.coeff(i));
    }
    return acc;
}

DiffOp adjoint(const DiffOp& L) {
    int n = L.nvars();
    DiffOp acc(n);
    DiffOp T = DiffOp::mult(XRat::one(n));
    DiffOp negdx = DiffOp(n, {XRat(n), -XRat::one(n)});
    for (int i = 0; i <= L.order(); ++i) {
        if (i > 0) T = op_mul(negdx, T);
        if (!L.coeff(i).is_zero()) acc = acc + op_mul(T, DiffOp::mult(L.coeff(i)));
    }
    return acc;
}

std::pair<DiffOp, DiffOp> right_divrem(const DiffOp& C, const DiffOp& L) {
    if (L.is_zero()) throw std::domain_error("right division by the zero operator");
    int n = C.nvars();
    DiffOp q(n), r = C;
    while (!r.is_zero() && r.order() >= L.order()) {
        int k = r.order() - L.order();
        XRat c = r.coeff(r.order()) / L.coeff(L.order());
        std::vector<XRat> mono(k + 1, XRat(n));
        mono[k] = c;
        DiffOp t(n, std::move(mono));
        q = q + t;
        r = r - op_mul(t, L);
    }
    return {q, r};
}

DiffOp right_remainder(const DiffOp& C, const DiffOp& L) { return right_divrem(C, L).second; }

std::pair<DiffOp, XPoly> poly_normalize(const DiffOp& M) {
    if (M.is_zero()) throw std::domain_error("poly_normalize of the zero operator");
    int n = M.nvars();
    DiffOp cur = M;
    XPoly Q = XPoly::one(n);
    int guard = 0;
    while (!cur.has_polynomial_coefficients()) {
        XPoly D = XPoly::one(n);
        for (int i = 0; i <= cur.order(); ++i)
            if (!cur.coeff(i).is_zero()) D = lcm_x(D, cur.coeff(i).den());
        cur = op_mul(cur, DiffOp::mult(XRat(D)));
        Q *= D;
        if (++guard > 256) throw std::logic_error("poly_normalize did not stabilize");
    }
    return {cur, Q};
}

// ---------------------------------------------------------------------------
// s-polynomials

int SPolyX::degree() const {
    for (int i = (int)c.size() - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

XPoly SPolyX::eval_plain(long m) const {
    if (c.empty()) return XPoly(0);
    int n = c[0].nvars();
    XPoly acc(n);
    KElem mv = KElem::constant(n, Rat((long)m));
    for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc.scaled(mv) + c[i];
    return acc;
}

XPoly SPolyX::eval(long m, const XPoly& modP) const {
    if (c.empty()) return XPoly(modP.nvars());
    int n = c[0].nvars();
    XPoly acc(n);
    KElem mv = KElem::constant(n, Rat((long)m));
    for (int i = (int)c.size() - 1; i >= 0; --i) acc = mod(acc.scaled(mv) + c[i], modP);
    return acc;
}

int SPolyK::degree() const {
    for (int i = (int)c.size() - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

KElem SPolyK::eval(long m) const {
    if (c.empty()) return KElem(0);
    int n = c[0].nvars();
    KElem acc(n);
    KElem mv = KElem::constant(n, Rat((long)m));
    for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * mv + c[i];
    return acc;
}

namespace {

void spx_trim(SPolyX& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

SPolyX spx_add(const SPolyX& a, const SPolyX& b, int n) {
    SPolyX out;
    out.c.resize(std::max(a.c.size(), b.c.size()), XPoly(n));
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    spx_trim(out);
    return out;
}

SPolyX spx_mul_xpoly(const SPolyX& a, const XPoly& p) {
    SPolyX out;
    out.c.reserve(a.c.size());
    for (auto& ci : a.c) out.c.push_back(ci * p);
    spx_trim(out);
    return out;
}

SPolyX spx_derivative_x(const SPolyX& a) {
    SPolyX out;
    out.c.reserve(a.c.size());
    for (auto& ci : a.c) out.c.push_back(ci.derivative());
    spx_trim(out);
    return out;
}

// a * (-(s + k))
SPolyX spx_mul_neg_s_plus(const SPolyX& a, long k, int n) {
    SPolyX out;
    out.c.assign(a.c.size() + 1, XPoly(n));
    KElem kk = KElem::constant(n, Rat(-k));
    for (size_t i = 0; i < a.c.size(); ++i) {
        out.c[i + 1] -= a.c[i];
        out.c[i] += a.c[i].scaled(kk);
    }
    spx_trim(out);
    return out;
}

// substitute s -> -s
SPolyX spx_flip(const SPolyX& a) {
    SPolyX out = a;
    for (size_t i = 1; i < out.c.size(); i += 2) out.c[i] = -out.c[i];
    return out;
}

SPolyK spk_flip(const SPolyK& a) {
    SPolyK out = a;
    for (size_t i = 1; i < out.c.size(); i += 2) out.c[i] = -out.c[i];
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// local data

std::variant<LocalDataFinite, SplitRequest> local_data_finite(const DiffOp& M, const XPoly& P_in) {
    if (M.is_zero()) throw std::domain_error("local data of the zero operator");
    if (!M.has_polynomial_coefficients())
        throw std::invalid_argument("local_data_finite needs polynomial coefficients");
    XPoly P = P_in.monic();
    if (P.degree() < 1) throw std::invalid_argument("place must have positive degree");
    if (gcd_x(P, P.derivative()).degree() != 0)
        throw std::invalid_argument("place is not squarefree");
    int n = M.nvars();
    int r = M.order();
    XPoly pr = M.poly_coeff(r);

    XPoly g0 = gcd_x(P, pr);
    if (g0.degree() > 0 && g0.degree() < P.degree()) return SplitRequest{g0};
    if (g0.degree() == 0) {
        // ordinary place: sigma = -r, ind_P(t) = p_r*(P')^r * t(t-1)...(t-r+1) mod P
        XPoly u = mod(pr, P);
        XPoly dp = mod(P.derivative(), P);
        for (int i = 0; i < r; ++i) u = mod(u * dp, P);
        SPolyX ind;
        ind.c = {u};
        for (int j = 0; j < r; ++j) {
            // multiply by (t - j)
            SPolyX next;
            next.c.assign(ind.c.size() + 1, XPoly(n));
            KElem mj = KElem::constant(n, Rat((long)-j));
            for (size_t i = 0; i < ind.c.size(); ++i) {
                next.c[i + 1] += ind.c[i];
                next.c[i] += ind.c[i].scaled(mj);
            }
            for (auto& cc : next.c) cc = mod(cc, P);
            spx_trim(next);
            ind = next;
        }
        return LocalDataFinite{P, -r, ind};
    }

    // P divides the leading coefficient: symbolic P-adic cascade.
    XPoly dP = P.derivative();
    std::map<int, SPolyX> cur;  // Dx^j(P^-s) = sum_k cur[k](x,s) P^(-s-k)
    cur[0] = SPolyX{{XPoly::one(n)}};
    std::map<int, SPolyX> acc;
    for (int j = 0; j <= r; ++j) {
        if (j > 0) {
            std::map<int, SPolyX> next;
            for (auto& [k, U] : cur) {
                SPolyX du = spx_derivative_x(U);
                if (!du.is_zero())
                    next[k] = next.count(k) ? spx_add(next[k], du, n) : du;
                SPolyX up = spx_mul_xpoly(spx_mul_neg_s_plus(U, k, n), dP);
                if (!up.is_zero())
                    next[k + 1] = next.count(k + 1) ? spx_add(next[k + 1], up, n) : up;
            }
            cur = std::move(next);
        }
        XPoly pj = M.poly_coeff(j);
        if (pj.is_zero()) continue;
        for (auto& [k, U] : cur) {
            SPolyX t = spx_mul_xpoly(U, pj);
            if (t.is_zero()) continue;
            acc[k] = acc.count(k) ? spx_add(acc[k], t, n) : t;
        }
    }

    int kmax = 0;
    for (auto& [k, U] : acc) kmax = std::max(kmax, k);
    SPolyX carry;
    int guard = 0;
    for (int k = kmax;; --k) {
        SPolyX W = carry;
        auto it = acc.find(k);
        if (it != acc.end()) W = spx_add(W, it->second, n);
        // reduce mod P, push quotients to the next level up (smaller k)
        SPolyX rem, quo;
        rem.c.resize(W.c.size(), XPoly(n));
        quo.c.resize(W.c.size(), XPoly(n));
        for (size_t i = 0; i < W.c.size(); ++i) {
            auto [q, rr] = divrem(W.c[i], P);
            rem.c[i] = rr;
            quo.c[i] = q;
        }
        spx_trim(rem);
        spx_trim(quo);
        if (!rem.is_zero()) {
            XPoly gc = P;
            for (auto& cc : rem.c)
                if (!cc.is_zero()) gc = gcd_x(gc, cc);
            if (gc.degree() >= 1) return SplitRequest{gc};
            return LocalDataFinite{P, -k, spx_flip(rem)};
        }
        carry = quo;
        if (k < 0 && carry.is_zero()) break;
        if (++guard > 4096) throw std::logic_error("P-adic cascade did not terminate");
    }
    throw std::logic_error("zero P-adic expansion for a nonzero operator");
}

LocalDataInfinity local_data_infinity(const DiffOp& M) {
    if (M.is_zero()) throw std::domain_error("local data of the zero operator");
    if (!M.has_polynomial_coefficients())
        throw std::invalid_argument("local_data_infinity needs polynomial coefficients");
    int n = M.nvars();
    int r = M.order();
    int sigma = 0;
    bool first = true;
    for (int i = 0; i <= r; ++i) {
        XPoly pi = M.poly_coeff(i);
        if (pi.is_zero()) continue;
        int v = i - pi.degree();
        if (first || v < sigma) sigma = v, first = false;
    }
    // phi(s) = sum over attaining i of lc(p_i) * s(s-1)...(s-i+1)
    SPolyK phi;
    for (int i = 0; i <= r; ++i) {
        XPoly pi = M.poly_coeff(i);
        if (pi.is_zero() || i - pi.degree() != sigma) continue;
        SPolyK ff;
        ff.c = {pi.lc()};
        for (int j = 0; j < i; ++j) {
            SPolyK next;
            next.c.assign(ff.c.size() + 1, KElem(n));
            KElem mj = KElem::constant(n, Rat((long)-j));
            for (size_t k = 0; k < ff.c.size(); ++k) {
                next.c[k + 1] += ff.c[k];
                next.c[k] += ff.c[k] * mj;
            }
            ff = next;
        }
        if (phi.c.size() < ff.c.size()) phi.c.resize(ff.c.size(), KElem(n));
        for (size_t k = 0; k < ff.c.size(); ++k) phi.c[k] += ff.c[k];
    }
    while (!phi.c.empty() && phi.c.back().is_zero()) phi.c.pop_back();
    return LocalDataInfinity{sigma, spk_flip(phi)};
}

std::vector<XPoly> singular_places(const DiffOp& M) {
    if (M.is_zero()) throw std::domain_error("singular places of the zero operator");
    DiffOp Mp = M;
    if (!Mp.has_polynomial_coefficients()) Mp = poly_normalize(M).first;
    XPoly pr = Mp.poly_coeff(Mp.order());
    std::vector<XPoly> out;
    if (pr.degree() == 0) return out;
    for (auto& [f, m] : squarefree_factorization(pr).factors)
        if (f.degree() >= 1) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// integer roots

namespace {

// dense univariate over Q, for specialized computations
struct QPoly {
    std::vector<Rat> c;
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
};

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

QPoly qp_exact_div(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly division by zero");
    QPoly r = a, q;
    if (a.is_zero()) return q;
    q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat f = r.c.back() / b.c.back();
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    if (!r.is_zero()) throw std::logic_error("inexact QPoly division in Bareiss step");
    return q;
}

// resultant of A and B in x via Bareiss on the Sylvester matrix;
// entries are polynomials in s
QPoly sylvester_resultant(const std::vector<QPoly>& A, const std::vector<QPoly>& B) {
    int m = (int)A.size() - 1, nb = (int)B.size() - 1;
    if (m < 0 || nb < 0) return {};
    if (m == 0 && nb == 0) return QPoly{{Rat(1)}};
    if (nb == 0) {
        QPoly r{{Rat(1)}};
        for (int i = 0; i < m; ++i) r = qp_mul(r, B[0]);
        return r;
    }
    if (m == 0) {
        QPoly r{{Rat(1)}};
        for (int i = 0; i < nb; ++i) r = qp_mul(r, A[0]);
        return r;
    }
    int N = m + nb;
    std::vector<std::vector<QPoly>> S(N, std::vector<QPoly>(N));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = A[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= nb; ++j) S[nb + i][i + j] = B[nb - j];
    // fraction-free elimination
    QPoly prev{{Rat(1)}};
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        int piv = -1;
        for (int i = k; i < N; ++i)
            if (!S[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return {};
        if (piv != k) {
            std::swap(S[piv], S[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                S[i][j] = qp_exact_div(qp_sub(qp_mul(S[k][k], S[i][j]), qp_mul(S[i][k], S[k][j])),
                                       prev);
            S[i][k] = QPoly{};
        }
        prev = S[k][k];
    }
    QPoly det = S[N - 1][N - 1];
    if (sign < 0) det = qp_sub(QPoly{}, det);
    return det;
}

// random specialization point for the parameters
std::vector<Rat> random_point(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(2, 97);
    std::vector<Rat> p;
    p.reserve(nvars);
    for (int i = 0; i < nvars; ++i) p.push_back(Rat(d(rng)));
    return p;
}

// integer root candidates of an integer-cleared polynomial: divisors of the
// trailing coefficient within the Cauchy bound. The caller intersects
// across specializations via a gcd of trailing coefficients.
struct SpecData {
    Int trailing;  // absolute value, nonzero
    Int bound;     // Cauchy root bound
};

std::optional<SpecData> spec_data(const QPoly& q) {
    if (q.is_zero()) return std::nullopt;
    size_t v = 0;
    while (v < q.c.size() && q.c[v] == 0) ++v;
    std::vector<Rat> cs(q.c.begin() + v, q.c.end());
    Int l = 1;
    for (auto& r : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Int> ic;
    ic.reserve(cs.size());
    for (auto& r : cs) ic.push_back(Int(r * Rat(l)));
    Int t = abs(ic[0]);
    if (t == 0) return std::nullopt;
    // Cauchy: |root| <= 1 + max |a_i| / |a_d|
    Int lead = abs(ic.back());
    Int mx = 0;
    for (auto& a : ic) {
        Int aa = abs(a);
        if (aa > mx) mx = aa;
    }
    Int bound = mx / lead + 2;
    return SpecData{t, bound};
}

std::vector<long> divisor_candidates(const Int& g, const Int& bound) {
    std::vector<long> out;
    Int lim = sqrt(g) + 1;
    Int cap = 2000000;
    if (lim > cap) lim = cap;
    for (Int d = 1; d <= lim; ++d) {
        if (g % d == 0) {
            if (d <= bound) out.push_back(d.get_si());
            Int e = g / d;
            if (e <= bound && e.fits_slong_p()) out.push_back(e.get_si());
        }
    }
    std::vector<long> all;
    for (long d : out) {
        all.push_back(d);
        all.push_back(-d);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

} // namespace

std::vector<long> integer_roots(const SPolyK& q, std::mt19937_64& rng) {
    if (q.is_zero()) throw std::domain_error("integer roots of the zero polynomial");
    int n = q.c[0].nvars();
    size_t v = 0;
    while (v < q.c.size() && q.c[v].is_zero()) ++v;
    SPolyK qt;
    qt.c.assign(q.c.begin() + v, q.c.end());
    std::vector<long> roots;
    if (v > 0) roots.push_back(0);
    if (qt.degree() <= 0) return roots;

    Int g = 0, bound = -1;
    int specs = n == 0 ? 1 : 3;
    for (int s = 0; s < specs; ++s) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw std::logic_error("no good specialization point found");
            auto pt = random_point(n, rng);
            try {
                QPoly qp;
                qp.c.reserve(qt.c.size());
                for (auto& k : qt.c) qp.c.push_back(k.eval(pt));
                qp.trim();
                auto sd = spec_data(qp);
                if (!sd) continue;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sd->trailing.get_mpz_t());
                if (bound < 0 || sd->bound < bound) bound = sd->bound;
                break;
            } catch (const BadPointError&) {
                continue;
            }
        }
    }
    for (long cand : divisor_candidates(g, bound))
        if (qt.eval(cand).is_zero()) roots.push_back(cand);
    std::sort(roots.begin(), roots.end());
    return roots;
}

RootScan integer_roots_mod(const SPolyX& q, const XPoly& P, std::mt19937_64& rng,
                           bool detect_partial) {
    if (q.is_zero()) throw std::domain_error("integer roots of the zero polynomial");
    int n = P.nvars();
    RootScan out;
    SPolyX qr;
    qr.c.reserve(q.c.size());
    for (auto& cc : q.c) qr.c.push_back(mod(cc, P));
    spx_trim(qr);
    if (qr.is_zero()) throw std::domain_error("polynomial vanishes identically modulo the place");
    size_t v = 0;
    while (v < qr.c.size() && qr.c[v].is_zero()) ++v;
    SPolyX qt;
    qt.c.assign(qr.c.begin() + v, qr.c.end());

    {
        XPoly gc = P;
        for (auto& cc : qt.c)
            if (!cc.is_zero()) gc = gcd_x(gc, cc);
        if (gc.degree() >= 1 && gc.degree() < P.degree()) {
            if (detect_partial) {
                out.split = gc;
                return out;
            }
            // q vanishes identically modulo gc; full roots are the roots
            // modulo the cofactor
            return integer_roots_mod(q, exact_div_x(P, gc).monic(), rng, false);
        }
    }
    if (v > 0) out.roots.push_back(0);

    std::vector<long> candidates;
    if (detect_partial) candidates.push_back(0);
    if (qt.degree() > 0) {
        if (P.degree() == 1) {
            SPolyK qc;
            for (auto& cc : qt.c) qc.c.push_back(cc.is_zero() ? KElem(n) : cc.coeff(0));
            // full roots over K when the place has degree 1
            for (long m : integer_roots(qc, rng)) candidates.push_back(m);
        } else {
            Int g = 0, bound = -1;
            int specs = n == 0 ? 1 : 3;
            for (int s = 0; s < specs; ++s) {
                for (int attempt = 0;; ++attempt) {
                    if (attempt > 64) throw std::logic_error("no good specialization point found");
                    auto pt = random_point(n, rng);
                    try {
                        std::vector<QPoly> A(P.degree() + 1);
                        for (int i = 0; i <= P.degree(); ++i) {
                            Rat ci = P.coeff(i).eval(pt);
                            if (ci != 0) A[i].c = {ci};
                        }
                        // x-major view of qt with specialized coefficients
                        int dx = 0;
                        for (auto& cc : qt.c) dx = std::max(dx, cc.degree());
                        std::vector<QPoly> B(dx + 1);
                        for (size_t k = 0; k < qt.c.size(); ++k)
                            for (int j = 0; j <= qt.c[k].degree(); ++j) {
                                Rat cv = qt.c[k].coeff(j).eval(pt);
                                if (cv == 0) continue;
                                if (B[j].c.size() <= k) B[j].c.resize(k + 1, Rat(0));
                                B[j].c[k] += cv;
                            }
                        for (auto& b : B) b.trim();
                        while (!B.empty() && B.back().is_zero()) B.pop_back();
                        if (B.empty()) continue;
                        QPoly N = sylvester_resultant(A, B);
                        auto sd = spec_data(N);
                        if (!sd) continue;
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sd->trailing.get_mpz_t());
                        if (bound < 0 || sd->bound < bound) bound = sd->bound;
                        break;
                    } catch (const BadPointError&) {
                        continue;
                    }
                }
            }
            for (long c : divisor_candidates(g, bound)) candidates.push_back(c);
        }
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (long m : candidates) {
        XPoly z = qt.eval(m, P);
        if (z.is_zero()) {
            if (m != 0) out.roots.push_back(m);
            else if (v == 0 && std::find(out.roots.begin(), out.roots.end(), 0L) == out.roots.end())
                out.roots.push_back(0);
        } else if (detect_partial) {
            XPoly gz = gcd_x(z, P);
            if (gz.degree() >= 1) {
                out.split = gz;
                return out;
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

} // namespace ctel
