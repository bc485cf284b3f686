#include "ctel/telescope.hpp"

#include "ctel/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ctel {

int cmp_dmonomial(const DMonomial& a, const DMonomial& b, TermOrder order) {
    assert(a.e.size() == b.e.size());
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    if (order == TermOrder::Grevlex) {
        // scan from d_1: the first difference decides, smaller exponent wins
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    // deglex: compare from the largest variable d_e down
    for (size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

DMonomial monomial_succ(TermOrder order, const std::vector<DMonomial>& frontier) {
    if (frontier.empty()) throw std::invalid_argument("empty monomial frontier");
    const DMonomial* best = &frontier[0];
    for (auto& m : frontier)
        if (cmp_dmonomial(m, *best, order) < 0) best = &m;
    return *best;
}

Telescoper normalize_telescoper(std::vector<std::pair<DMonomial, KElem>> terms, TermOrder order) {
    std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
    if (terms.empty()) throw std::invalid_argument("zero telescoper");
    std::sort(terms.begin(), terms.end(), [order](const auto& a, const auto& b) {
        return cmp_dmonomial(a.first, b.first, order) > 0;
    });
    int n = terms[0].second.nvars();
    MPoly D = MPoly::constant(n, Rat(1));
    for (auto& [m, c] : terms) D = lcm(D, c.den());
    MPoly g(n);
    std::vector<MPoly> nums;
    for (auto& [m, c] : terms) {
        nums.push_back(c.num() * exact_div(D, c.den()));
        g = gcd(g, nums.back());
    }
    Int gn = 0, gl = 1;
    std::vector<MPoly> cleared;
    for (auto& p : nums) {
        cleared.push_back(exact_div(p, g));
        for (auto& t : cleared.back().terms()) {
            mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), t.second.get_num().get_mpz_t());
            mpz_lcm(gl.get_mpz_t(), gl.get_mpz_t(), t.second.get_den().get_mpz_t());
        }
    }
    Rat gc(gn, gl);
    gc.canonicalize();
    if (cleared[0].leading_coeff() < 0) gc = -gc;
    Telescoper out;
    for (size_t i = 0; i < terms.size(); ++i)
        out.terms.push_back({terms[i].first, KElem(cleared[i].scaled(Rat(1) / gc))});
    return out;
}

std::optional<std::vector<KElem>> linear_relation(const std::vector<XRat>& candidates,
                                                  const XRat& target, std::mt19937_64& rng) {
    if (candidates.empty()) {
        if (target.is_zero()) return std::vector<KElem>{};
        return std::nullopt;
    }
    int n = candidates[0].nvars();

    auto assemble = [](const std::vector<XRat>& cand, const XRat& tgt, int nv) {
        XPoly D = tgt.den();
        for (auto& c : cand) D = lcm_x(D, c.den());
        std::vector<XPoly> cols;
        int maxdeg = 0;
        for (auto& c : cand) {
            XRat s = XRat(D) * c;
            cols.push_back(s.num());
            maxdeg = std::max(maxdeg, cols.back().degree());
        }
        XRat ts = XRat(D) * tgt;
        XPoly rhs = ts.num();
        maxdeg = std::max(maxdeg, rhs.degree());
        std::vector<std::vector<KElem>> A(maxdeg + 1, std::vector<KElem>(cand.size(), KElem(nv)));
        std::vector<KElem> b(maxdeg + 1, KElem(nv));
        for (int row = 0; row <= maxdeg; ++row) {
            for (size_t j = 0; j < cand.size(); ++j) A[row][j] = cols[j].coeff(row);
            b[row] = rhs.coeff(row);
        }
        return std::pair{A, b};
    };

    // infeasibility pre-filter at one random parameter point
    if (n > 0) {
        std::uniform_int_distribution<int> d(2, 97);
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::vector<Rat> pt;
            for (int i = 0; i < n; ++i) pt.push_back(Rat(d(rng)));
            try {
                std::vector<XRat> cs;
                for (auto& c : candidates) cs.push_back(c.eval_params(pt));
                XRat ts = target.eval_params(pt);
                auto [A, b] = assemble(cs, ts, 0);
                if (!solve_linear(A, b, KElem(0))) return std::nullopt;
                break;
            } catch (const BadPointError&) {
                continue;
            }
        }
    }

    auto [A, b] = assemble(candidates, target, n);
    auto sol = solve_linear(A, b, KElem(n));
    if (!sol) return std::nullopt;
    return sol;
}

TelescopingBasis telescope(const CyclicData& cd, const TelescopeOptions& opts) {
    int n = cd.L.nvars();
    int e = (int)cd.specs.size();
    Reducer red = [&] {
        DiffOp M = adjoint(cd.L);
        if (!opts.shell) return Reducer(M, opts.reducer);
        auto [A, B] = default_shell(M, opts.reducer);
        return Reducer(M, A, B, opts.reducer);
    }();
    std::mt19937_64 rng(opts.reducer.seed ^ 0x7e1e5c03u);

    TelescopingBasis out;
    out.order = opts.order;
    auto cmp = [&](const DMonomial& a, const DMonomial& b) {
        return cmp_dmonomial(a, b, opts.order) < 0;
    };
    std::set<DMonomial, decltype(cmp)> pending(cmp);
    pending.insert(DMonomial{std::vector<int>(e, 0)});

    while (!pending.empty()) {
        DMonomial mu = *pending.begin();
        pending.erase(pending.begin());
        bool reducible = false;
        for (auto& r : out.R)
            if (r.divides(mu)) {
                reducible = true;
                break;
            }
        if (reducible) continue;
        if (mu.total_degree() > opts.max_degree) {
            out.status = TeleStatus::DegreeCapped;
            break;
        }

        XRat Fmu(n);
        if (mu.is_one()) {
            Fmu = red.reduce(apply(adjoint(cd.A_f), XRat::one(n))).reduced;
        } else {
            int pick = -1;
            DMonomial nu;
            for (int i = 0; i < e; ++i) {
                auto down = mu.divided_by(i);
                if (!down) continue;
                if (std::find(out.Q.begin(), out.Q.end(), *down) != out.Q.end()) {
                    pick = i;
                    nu = *down;
                    break;
                }
            }
            if (pick < 0) throw std::logic_error("visited monomial with no predecessor in Q");
            Fmu = red.reduce(lambda_map(pick, out.F.at(nu), cd)).reduced;
        }
        ++out.f_computations;

        std::vector<XRat> cands;
        for (auto& q : out.Q) cands.push_back(out.F.at(q));
        auto rel = linear_relation(cands, Fmu, rng);
        if (rel) {
            out.F[mu] = Fmu;
            std::vector<std::pair<DMonomial, KElem>> terms;
            terms.push_back({mu, KElem::one(n)});
            for (size_t j = 0; j < out.Q.size(); ++j)
                if (!(*rel)[j].is_zero()) terms.push_back({out.Q[j], -(*rel)[j]});
            out.G.push_back(normalize_telescoper(std::move(terms), opts.order));
            out.R.push_back(mu);
            if (opts.first_only) {
                out.status = TeleStatus::FirstFound;
                break;
            }
        } else {
            out.F[mu] = Fmu;
            out.Q.push_back(mu);
            for (int i = 0; i < e; ++i) pending.insert(mu.times(i));
        }
    }
    return out;
}

bool verify_basis(const TelescopingBasis& B, const std::map<DMonomial, XRat>& Fs) {
    // every relation must vanish exactly
    for (auto& T : B.G) {
        if (T.terms.empty()) return false;
        auto it0 = Fs.find(T.terms[0].first);
        if (it0 == Fs.end()) return false;
        XRat acc(it0->second.nvars());
        for (auto& [m, c] : T.terms) {
            auto it = Fs.find(m);
            if (it == Fs.end()) return false;
            acc += it->second.scaled(c);
        }
        if (!acc.is_zero()) return false;
    }
    // leading monomials of G are exactly R
    if (B.G.size() != B.R.size()) return false;
    for (size_t i = 0; i < B.G.size(); ++i)
        if (B.G[i].leading_monomial() != B.R[i]) return false;
    // R is an antichain under divisibility
    for (size_t i = 0; i < B.R.size(); ++i)
        for (size_t j = 0; j < B.R.size(); ++j)
            if (i != j && B.R[i].divides(B.R[j])) return false;
    // no standard monomial is a multiple of a reducible one
    for (auto& q : B.Q)
        for (auto& r : B.R)
            if (r.divides(q)) return false;
    return true;
}

} // namespace ctel
