#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "testutil.hpp"

#include "ctel/linalg.hpp"

#include <doctest.h>

using namespace ctel;
using namespace ctel::testutil;

namespace {

// the integrand system for e^{-px} T_n(x) / sqrt(1-x^2): d/dp and the shift in n
ScalarSystem chebyshev_bessel() {
    ScalarSystem sys;
    sys.L = OP("(1-x^2)*Dx^2 - (2*p*x^2+3*x-2*p)*Dx - (p^2*x^2+3*p*x-n^2-p^2+1)", pn());
    sys.rels = {OP("-x", pn()),
                OP("((x^2-1)*Dx + 2*x + p*x^2 + (n-1)*x - p)/n", pn())};
    sys.specs = {{OreKind::Derivation, 0}, {OreKind::Shift, 1}};
    return sys;
}

} // namespace

TEST_CASE("sigma and delta") {
    OreSpec specs{{OreKind::Derivation, 0}, {OreKind::Shift, 1}};
    SUBCASE("shift substitutes") {
        auto [s, d] = sigma_delta(1, RX("n^2/p", pn()), specs);
        CHECK(s == RX("(n+1)^2/p", pn()));
        CHECK(d.is_zero());
    }
    SUBCASE("derivation differentiates") {
        auto [s, d] = sigma_delta(0, RX("x/p", pn()), specs);
        CHECK(s == RX("x/p", pn()));
        CHECK(d == RX("-x/p^2", pn()));
    }
    SUBCASE("constants are fixed") {
        auto [s0, d0] = sigma_delta(0, RX("5", pn()), specs);
        auto [s1, d1] = sigma_delta(1, RX("5", pn()), specs);
        CHECK(s0 == RX("5", pn()));
        CHECK(d0.is_zero());
        CHECK(s1 == RX("5", pn()));
        CHECK(d1.is_zero());
    }
}

TEST_CASE("from_scalar") {
    SUBCASE("chebyshev-bessel relations") {
        CyclicData cd = from_scalar(chebyshev_bessel());
        CHECK(cd.warnings.empty());
        CHECK(cd.B[0] == OP("-x", pn()));
        CHECK(cd.B[1] == OP("((x^2-1)/n)*Dx + (p*x^2 + (n+1)*x - p)/n", pn()));
        CHECK(cd.A_f == OP("1", pn()));
        CHECK(cd.L == chebyshev_bessel().L);
    }
    SUBCASE("hermite polynomial integrand") {
        std::vector<std::string> nt{"n", "t"};
        ScalarSystem sys;
        sys.L = parse_opexpr("(t+x)*Dx - (n + 2*x*(t+x))", nt, "x");
        sys.rels = {parse_opexpr("n/(t+x)", nt, "x")};
        sys.specs = {{OreKind::Derivation, 1}};
        CyclicData cd = from_scalar(sys);
        CHECK(cd.warnings.empty());
        CHECK(cd.B[0] == sys.rels[0]);
        // L annihilates (t+x)^n e^{x^2} formally: check via the logarithmic derivative
        // L(f)/f = (t+x)*(n/(t+x) + 2x) - (n + 2x(t+x)) = 0
    }
    SUBCASE("no auxiliary operators") {
        ScalarSystem sys;
        sys.L = m_intro();
        CyclicData cd = from_scalar(sys);
        CHECK(cd.B.empty());
        CHECK(cd.specs.empty());
    }
    SUBCASE("inconsistent relation warns") {
        ScalarSystem sys = chebyshev_bessel();
        sys.rels[0] = OP("x^2 - 7", pn());  // not a valid d/dp relation
        CyclicData cd = from_scalar(sys);
        CHECK(!cd.warnings.empty());
    }
}

TEST_CASE("companion system and cyclic vector") {
    SUBCASE("companion recovery of the annihilator") {
        MatrixSystem ms = companion_system(chebyshev_bessel());
        CHECK(ms.dim == 2);
        CyclicData cd = cyclic_vector(ms);
        // gamma = first basis vector works
        CHECK(cd.gamma[0] == XRat::one(2));
        CHECK(cd.gamma[1].is_zero());
        CHECK(cd.L.content_normalized() == chebyshev_bessel().L.content_normalized());
        CHECK(cd.A_f == OP("1", pn()));
        // recovered relations agree with from_scalar
        CyclicData sc = from_scalar(chebyshev_bessel());
        CHECK(cd.B[0] == sc.B[0]);
        CHECK(cd.B[1] == sc.B[1]);
    }
    SUBCASE("order one system") {
        ScalarSystem sys;
        sys.L = OP("x*Dx - 3");
        MatrixSystem ms = companion_system(sys);
        CyclicData cd = cyclic_vector(ms);
        CHECK(cd.L.order() == 1);
        CHECK(cd.L.content_normalized() == sys.L.content_normalized());
    }
    SUBCASE("wronskian has full rank") {
        MatrixSystem ms = companion_system(chebyshev_bessel());
        CyclicData cd = cyclic_vector(ms);
        // columns gamma, dx(gamma) are the identity here
        std::vector<std::vector<XRat>> W(2, std::vector<XRat>(2, XRat(2)));
        std::vector<XRat> g0 = cd.gamma;
        std::vector<XRat> g1(2, XRat(2));
        for (int i = 0; i < 2; ++i) {
            g1[i] = g0[i].derivative();
            for (int j = 0; j < 2; ++j)
                if (!ms.dx[i][j].is_zero() && !g0[j].is_zero()) g1[i] += ms.dx[i][j] * g0[j];
        }
        for (int i = 0; i < 2; ++i) {
            W[i][0] = g0[i];
            W[i][1] = g1[i];
        }
        CHECK(rank_of(W) == 2);
    }
}

TEST_CASE("Ore rule compliance for matrix actions") {
    // applying the operator twice through the matrices equals the
    // coordinate rule applied to the once-applied vector
    Rng rng(211);
    MatrixSystem ms = companion_system(chebyshev_bessel());
    auto act_apply = [&](int i, const std::vector<XRat>& v) {
        std::vector<XRat> sg(ms.dim, XRat(ms.nvars));
        for (int k = 0; k < ms.dim; ++k) {
            auto [s, d] = sigma_delta(i, v[k], ms.specs);
            sg[k] = s;
        }
        std::vector<XRat> out(ms.dim, XRat(ms.nvars));
        for (int r = 0; r < ms.dim; ++r) {
            for (int c = 0; c < ms.dim; ++c)
                if (!ms.act[i][r][c].is_zero() && !sg[c].is_zero())
                    out[r] += ms.act[i][r][c] * sg[c];
            auto [s, d] = sigma_delta(i, v[r], ms.specs);
            out[r] += d;
        }
        return out;
    };
    for (int i = 0; i < 2; ++i) {
        for (int it = 0; it < 5; ++it) {
            std::vector<XRat> v{XRat(rng.xpoly(2, 1, 3), rng.nonzero_xpoly(2, 1, 3)),
            	                 XRat(rng.xpoly(2, 1, 3), rng.nonzero_xpoly(2, 1, 3))};
            // associativity of repeated application
            auto once = act_apply(i, v);
            auto twice = act_apply(i, once);
            auto twice2 = act_apply(i, act_apply(i, v));
            CHECK(twice == twice2);
        }
    }
}

TEST_CASE("lambda maps") {
    CyclicData cd = from_scalar(chebyshev_bessel());
    SUBCASE("derivation lambda on 1") {
        CHECK(lambda_map(0, RX("1", pn()), cd) == RX("-x", pn()));
    }
    SUBCASE("derivation lambda on -x") {
        CHECK(lambda_map(0, RX("-x", pn()), cd) == RX("x^2", pn()));
    }
    SUBCASE("shift lambda on 1") {
        CHECK(lambda_map(1, RX("1", pn()), cd) == RX("(p*x^2 + (n-1)*x - p)/n", pn()));
    }
}

TEST_CASE("initial F") {
    SUBCASE("scalar mode gives the canonical form of 1") {
        CyclicData cd = from_scalar(chebyshev_bessel());
        Reducer red(adjoint(cd.L));
        CHECK(initial_F(cd, red) == RX("1", pn()));
    }
    SUBCASE("adjoint of Dx kills constants") {
        ScalarSystem sys;
        sys.L = OP("Dx^2 + 1");
        CyclicData cd = from_scalar(sys);
        cd.A_f = DiffOp::dx(0);
        Reducer red(adjoint(cd.L));
        CHECK(initial_F(cd, red).is_zero());
    }
    SUBCASE("order zero A_f") {
        ScalarSystem sys;
        sys.L = OP("Dx^2 + 1");
        CyclicData cd = from_scalar(sys);
        cd.A_f = OP("x");
        Reducer red(adjoint(cd.L));
        CHECK(initial_F(cd, red) == red.reduce(RX("x")).reduced);
    }
}

TEST_CASE("matrix model matches operator-level commutation") {
    // the matrix of the squared Ore operator must agree with the operator
    // computed through the commutation rule and reduced modulo L
    Rng rng(223);
    int done = 0;
    while (done < 10) {
        bool use_shift = done % 2;
        std::vector<std::string> tp{"t"};
        ScalarSystem sys;
        sys.L = DiffOp(1, {XRat(rng.xpoly_k(1, 1, 1, 3)), XRat(rng.xpoly_k(1, 1, 1, 3)),
                           XRat(rng.nonzero_xpoly(1, 1, 3))});
        if (sys.L.order() != 2) continue;
        DiffOp C(1, {XRat(rng.xpoly_k(1, 1, 1, 2)), XRat(rng.xpoly_k(1, 1, 1, 2))});
        sys.rels = {C};
        sys.specs = {{use_shift ? OreKind::Shift : OreKind::Derivation, 0}};
        MatrixSystem ms;
        try {
            ms = companion_system(sys);
        } catch (const std::domain_error&) {
            continue;  // degenerate leading coefficient
        }
        CyclicData cd = from_scalar(sys);
        DiffOp B = cd.B[0];
        // operator for the double application
        DiffOp D2 = use_shift ? op_mul(B.param_shifted(0), B)
                              : B.param_derivative(0) + op_mul(B, B);
        DiffOp D2r = right_remainder(D2, sys.L);
        // matrix route: act twice on the first basis vector
        auto act_once = [&](const std::vector<XRat>& v) {
            std::vector<XRat> sg(ms.dim, XRat(1));
            for (int k = 0; k < ms.dim; ++k)
                sg[k] = use_shift ? v[k].param_shifted(0) : v[k];
            std::vector<XRat> out(ms.dim, XRat(1));
            for (int r = 0; r < ms.dim; ++r)
                for (int cix = 0; cix < ms.dim; ++cix)
                    if (!ms.act[0][r][cix].is_zero() && !sg[cix].is_zero())
                        out[r] += ms.act[0][r][cix] * sg[cix];
            if (!use_shift)
                for (int r = 0; r < ms.dim; ++r) out[r] += v[r].param_derivative(0);
            return out;
        };
        std::vector<XRat> e0(ms.dim, XRat(1));
        e0[0] = XRat::one(1);
        std::vector<XRat> twice = act_once(act_once(e0));
        for (int k = 0; k < ms.dim; ++k) CHECK(twice[k] == D2r.coeff(k));
        ++done;
    }
}
