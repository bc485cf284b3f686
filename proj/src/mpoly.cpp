#include "ctel/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

namespace ctel {

int cmp_expvec(const ExpVec& a, const ExpVec& b) {
    assert(a.size() == b.size());
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {
struct TermLess {
    // decreasing canonical order
    bool operator()(const ExpVec& a, const ExpVec& b) const { return cmp_expvec(a, b) > 0; }
};
} // namespace

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_expvec(a.first, b.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    // a zero sum in the middle can hide later equal keys; redo until stable
    bool again = false;
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].first == out[i].first) again = true;
    terms_ = std::move(out);
    if (again) normalize();
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.push_back({ExpVec(nvars, 0), c});
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    assert(i >= 0 && i < nvars);
    MPoly p(nvars);
    ExpVec e(nvars, 0);
    e[i] = 1;
    p.terms_.push_back({e, Rat(1)});
    return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
    MPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 && terms_[0].first == ExpVec(nvars_, 0);
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& t : terms_) {
        int s = 0;
        for (int x : t.first) s += x;
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree_in(int i) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first[i]);
    return d;
}

const Rat& MPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_[0].second;
}

const ExpVec& MPoly::leading_monomial() const {
    assert(!terms_.empty());
    return terms_[0].first;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    assert(is_constant());
    return terms_[0].second;
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(nvars_ == o.nvars_);
    MPoly out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_expvec(terms_[i].first, o.terms_[j].first);
        if (c > 0)
            out.terms_.push_back(terms_[i++]);
        else if (c < 0)
            out.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (s != 0) out.terms_.push_back({terms_[i].first, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    assert(nvars_ == o.nvars_);
    std::map<ExpVec, Rat, TermLess> acc;
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            ExpVec e(nvars_);
            for (int k = 0; k < nvars_; ++k) e[k] = a.first[k] + b.first[k];
            acc[e] += a.second * b.second;
        }
    MPoly out(nvars_);
    for (auto& kv : acc)
        if (kv.second != 0) out.terms_.push_back({kv.first, kv.second});
    return out;
}

MPoly MPoly::scaled(const Rat& c) const {
    if (c == 0) return MPoly(nvars_);
    MPoly p(*this);
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

MPoly MPoly::pow(int k) const {
    assert(k >= 0);
    MPoly r = MPoly::constant(nvars_, Rat(1));
    MPoly base(*this);
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

MPoly MPoly::derivative(int i) const {
    MPoly out(nvars_);
    for (auto& t : terms_) {
        if (t.first[i] == 0) continue;
        ExpVec e = t.first;
        Rat c = t.second * e[i];
        e[i] -= 1;
        out.terms_.push_back({e, c});
    }
    out.normalize();
    return out;
}

MPoly MPoly::shifted(int i) const {
    // binomial expansion of (t_i + 1)^k per term
    MPoly out(nvars_);
    std::vector<Term> acc;
    for (auto& t : terms_) {
        int k = t.first[i];
        Int binom = 1;
        for (int j = k; j >= 0; --j) {
            // binom = C(k, j); iterate from j=k down: C(k,k)=1, C(k,j-1)=C(k,j)*j/(k-j+1)
            ExpVec e = t.first;
            e[i] = j;
            acc.push_back({e, t.second * Rat(binom)});
            if (j > 0) binom = binom * j / (k - j + 1);
        }
    }
    return MPoly::from_terms(nvars_, std::move(acc));
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    assert((int)point.size() == nvars_);
    Rat acc(0);
    for (auto& t : terms_) {
        Rat m = t.second;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.first[i]; ++k) m *= point[i];
        acc += m;
    }
    return acc;
}

std::pair<Rat, MPoly> MPoly::rat_content_split() const {
    if (terms_.empty()) return {Rat(0), MPoly(nvars_)};
    Int g = 0, l = 1;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    Rat c(g, l);
    c.canonicalize();
    if (leading_coeff() < 0) c = -c;
    MPoly p = scaled(Rat(1) / c);
    return {c, p};
}

std::vector<MPoly> MPoly::univariate_in(int k) const {
    std::vector<MPoly> out;
    for (auto& t : terms_) {
        int d = t.first[k];
        if ((int)out.size() <= d) out.resize(d + 1, MPoly(nvars_));
        ExpVec e = t.first;
        e[k] = 0;
        out[d] += MPoly::from_terms(nvars_, {{e, t.second}});
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

MPoly MPoly::from_univariate(int nvars, int k, const std::vector<MPoly>& coeffs) {
    MPoly out(nvars);
    MPoly tk = MPoly::variable(nvars, k);
    for (int d = (int)coeffs.size() - 1; d >= 0; --d) {
        out *= tk;
        out += coeffs[d];
    }
    return out;
}

// ---------------------------------------------------------------------------
// division and gcd

bool divides(const MPoly& b, const MPoly& a) {
    if (b.is_zero()) return a.is_zero();
    try {
        exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    int n = a.nvars();
    MPoly rem = a, q(n);
    const ExpVec& lb = b.leading_monomial();
    while (!rem.is_zero()) {
        const ExpVec la = rem.leading_monomial();
        ExpVec e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = la[i] - lb[i];
            if (e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Rat c = rem.leading_coeff() / b.leading_coeff();
        MPoly t = MPoly::from_terms(n, {{e, c}});
        q += t;
        rem -= t * b;
        if (!rem.is_zero() && cmp_expvec(rem.leading_monomial(), la) >= 0)
            throw std::domain_error("inexact polynomial division");
    }
    return q;
}

namespace {

// content of a list of coefficients (primitive gcd fold)
MPoly content_of(const std::vector<MPoly>& cs) {
    MPoly g(cs.empty() ? 0 : cs[0].nvars());
    for (auto& c : cs) g = gcd(g, c);
    return g;
}

int first_var_present(const MPoly& a) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.degree_in(i) > 0) return i;
    return -1;
}

// pseudo-remainder of univariate views: lc(B)^(da-db+1) * A = Q*B + R
std::vector<MPoly> prem_uv(std::vector<MPoly> A, const std::vector<MPoly>& B, int nvars) {
    int db = (int)B.size() - 1;
    const MPoly& lb = B.back();
    int da = (int)A.size() - 1;
    int steps = da - db + 1;
    for (int it = 0; it < steps; ++it) {
        da = (int)A.size() - 1;
        if (da < db) {
            // multiply remaining times to keep the subresultant bookkeeping exact
            for (auto& c : A) c *= lb;
            continue;
        }
        MPoly la = A.back();
        std::vector<MPoly> next(std::max<size_t>(A.size() - 1, (size_t)db), MPoly(nvars));
        // next = lb*A - la * x^(da-db) * B, degree da removed
        for (int i = 0; i < da; ++i) next[i] = A[i] * lb;
        for (int i = 0; i <= db; ++i) {
            int pos = i + da - db;
            if (pos < (int)next.size()) next[pos] -= la * B[i];
        }
        while (!next.empty() && next.back().is_zero()) next.pop_back();
        A = std::move(next);
        if (A.empty()) break;
    }
    return A;
}

MPoly sign_normalized_primitive(const MPoly& a) {
    if (a.is_zero()) return a;
    return a.rat_content_split().second;
}

} // namespace

namespace {

// exponent-wise min against every monomial of b (primitive gcd with a monomial)
MPoly monomial_gcd(const ExpVec& m, const MPoly& b) {
    ExpVec g = m;
    for (auto& t : b.terms())
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t.first[i]);
    return MPoly::from_terms(b.nvars(), {{g, Rat(1)}});
}

// exact univariate gcd degree of the images under a random specialization of
// the other variables; valid upper bound on deg_k(gcd) whenever neither
// leading coefficient degree drops
int image_gcd_degree(const MPoly& a, const MPoly& b, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(2, 19);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Rat> pt(a.nvars(), Rat(0));
        for (int i = 0; i < a.nvars(); ++i) pt[i] = Rat(d(rng));
        auto image = [&](const MPoly& p) {
            std::vector<MPoly> uv = p.univariate_in(k);
            std::vector<Rat> c;
            c.reserve(uv.size());
            for (auto& q : uv) c.push_back(q.eval(pt));
            while (!c.empty() && c.back() == 0) c.pop_back();
            return c;
        };
        std::vector<Rat> ua = image(a), ub = image(b);
        if ((int)ua.size() - 1 != a.degree_in(k) || (int)ub.size() - 1 != b.degree_in(k))
            continue;  // leading coefficient vanished, resample
        // Euclid over Q
        while (!ub.empty()) {
            // ua mod ub
            while ((int)ua.size() >= (int)ub.size() && !ua.empty()) {
                Rat f = ua.back() / ub.back();
                int off = (int)(ua.size() - ub.size());
                for (size_t i = 0; i < ub.size(); ++i) ua[off + i] -= f * ub[i];
                while (!ua.empty() && ua.back() == 0) ua.pop_back();
            }
            std::swap(ua, ub);
        }
        return (int)ua.size() - 1;
    }
    return -1;  // inconclusive
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return sign_normalized_primitive(b);
    if (b.is_zero()) return sign_normalized_primitive(a);
    int n = a.nvars();
    assert(n == b.nvars());
    if (a.is_constant() || b.is_constant()) return MPoly::constant(n, Rat(1));

    if (a.terms().size() == 1) return monomial_gcd(a.leading_monomial(), b);
    if (b.terms().size() == 1) return monomial_gcd(b.leading_monomial(), a);

    // sound coprimality filter: if every shared variable has image gcd of
    // degree 0, the gcd is constant
    {
        static thread_local std::mt19937_64 rng(0x51f15eedu);
        bool trivial = true;
        for (int k = 0; k < n && trivial; ++k) {
            int da = a.degree_in(k), db = b.degree_in(k);
            if (da <= 0 || db <= 0) continue;  // the gcd is free of t_k
            int dg = image_gcd_degree(a, b, k, rng);
            if (dg != 0) trivial = false;
        }
        if (trivial) return MPoly::constant(n, Rat(1));
    }

    int ka = first_var_present(a), kb = first_var_present(b);
    int k = std::max(ka, kb); // a variable present in at least one
    if (ka < 0) k = kb;
    else if (kb < 0) k = ka;
    else k = std::min(ka, kb);

    std::vector<MPoly> ua = a.univariate_in(k), ub = b.univariate_in(k);
    if (ua.size() == 1 || ub.size() == 1) {
        // one operand free of t_k: gcd(a,b) = gcd(a, cont_k(b)) (or symmetric)
        if (ua.size() == 1) return gcd(a, content_of(ub));
        return gcd(content_of(ua), b);
    }

    MPoly ca = content_of(ua), cb = content_of(ub);
    std::vector<MPoly> pa = ua, pb = ub;
    for (auto& c : pa) c = exact_div(c, ca);
    for (auto& c : pb) c = exact_div(c, cb);
    MPoly cg = gcd(ca, cb);

    std::vector<MPoly> g = prs_gcd(std::move(pa), std::move(pb), n);
    if (g.size() == 1) return sign_normalized_primitive(cg);
    MPoly cpg = content_of(g);
    for (auto& c : g) c = exact_div(c, cpg);
    MPoly res = cg * MPoly::from_univariate(n, k, g);
    return sign_normalized_primitive(res);
}

std::vector<MPoly> prs_gcd(std::vector<MPoly> pa, std::vector<MPoly> pb, int n) {
    if (pa.size() < pb.size()) std::swap(pa, pb);
    MPoly g = MPoly::constant(n, Rat(1)), h = MPoly::constant(n, Rat(1));
    while (true) {
        int d = (int)pa.size() - (int)pb.size();
        std::vector<MPoly> r = prem_uv(pa, pb, n);
        if (r.empty()) break;
        if (r.size() == 1) return {MPoly::constant(n, Rat(1))};
        pa = pb;
        MPoly divisor = g * h.pow(d);
        for (auto& c : r) c = exact_div(c, divisor);
        pb = std::move(r);
        g = pa.back();
        if (d > 0) h = exact_div(g.pow(d), h.pow(d - 1));
    }
    return pb;
}

MPoly lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
    return sign_normalized_primitive(exact_div(a * b, gcd(a, b)));
}

} // namespace ctel
