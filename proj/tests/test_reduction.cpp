#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "testutil.hpp"

#include "ctel/linalg.hpp"

#include <doctest.h>

using namespace ctel;
using namespace ctel::testutil;

TEST_CASE("weak reduction") {
    SUBCASE("fixed point of the rational reduction") {
        DiffOp M = OP("(x^2+1)*Dx + 10*x");
        XRat R = RX("1/(x^2+1)^5");
        ReductionResult r = weak_reduce(R, M);
        CHECK(r.reduced == R);
        CHECK(r.certificate.is_zero());
    }
    SUBCASE("exact derivative") {
        ReductionResult r = weak_reduce(RX("1/x^2"), DiffOp::dx(0));
        CHECK(r.reduced.is_zero());
        CHECK(r.certificate == RX("-1/x"));
    }
    SUBCASE("polynomial reduction under the intro operator") {
        ReductionResult r = weak_reduce(RX("x^2", pn()), m_intro());
        CHECK(r.reduced == RX("x/p + (n^2+p^2)/p^2", pn()));
        CHECK(RX("x^2", pn()) == r.reduced + apply(m_intro(), r.certificate));
    }
    SUBCASE("zero input") {
        ReductionResult r = weak_reduce(XRat(2), m_intro());
        CHECK(r.reduced.is_zero());
        CHECK(r.certificate.is_zero());
    }
    SUBCASE("certificate identity and support on random inputs") {
        Rng rng(71);
        int done = 0;
        while (done < 50) {
            DiffOp M = rng.diffop(0, 2, 3, 4);
            XRat R = rng.xrat(0, 3, 4);
            ReductionResult r = weak_reduce(R, M);
            CHECK(R == r.reduced + apply(M, r.certificate));
            ReductionResult r2 = weak_reduce(r.reduced, M);
            CHECK(r2.reduced == r.reduced);
            CHECK(r2.certificate.is_zero());
            ++done;
        }
    }
}

TEST_CASE("weak reduction splits squarefree places on demand") {
    // den = x^2-x is squarefree but the place structure differs at x
    DiffOp M = OP("x*Dx + 1");
    XRat R = RX("1/(x^2-x)");
    ReductionResult r = weak_reduce(R, M);
    CHECK(R == r.reduced + apply(M, r.certificate));
}

TEST_CASE("exceptional basis") {
    SUBCASE("x^10*Dx spans the monomials below 9") {
        ExcBasis exc = exceptional_basis(OP("x^10*Dx"));
        CHECK(exc.dimension() == 9);
        CHECK(exc.common_den == PX("1"));
        for (int k = 0; k < 9; ++k) {
            CHECK(exc.rows[k].v == PX("x").pow(8 - k));
            // preimage certifies membership in the image
            CHECK(apply(OP("x^10*Dx"), exc.rows[k].preimage) == XRat(exc.rows[k].v));
        }
    }
    SUBCASE("intro operator has a trivial exceptional space") {
        CHECK(exceptional_basis(m_intro()).dimension() == 0);
    }
    SUBCASE("classical Hermite reduction has no exceptional directions") {
        CHECK(exceptional_basis(DiffOp::dx(0)).dimension() == 0);
    }
    SUBCASE("generator count cap") {
        ReducerOptions opt;
        opt.exc_cap = 3;
        CHECK_THROWS_AS(exceptional_basis(OP("x^10*Dx"), opt), ExcCapExceeded);
    }
}

TEST_CASE("rho projection") {
    SUBCASE("single pivot") {
        ExcBasis exc;
        exc.common_den = PX("1");
        exc.generators = {RX("x+1")};
        exc.rows = {{PX("x+1"), XRat(0)}};
        CHECK(rho(exc, RX("x")) == RX("-1"));
        CHECK(rho(exc, RX("x+1")).is_zero());
    }
    SUBCASE("kernel property on stored generators") {
        ExcBasis exc = exceptional_basis(OP("x^10*Dx"));
        for (auto& w : exc.generators) CHECK(rho(exc, w).is_zero());
    }
    SUBCASE("monomial elimination") {
        ExcBasis exc = exceptional_basis(OP("x^10*Dx"));
        CHECK(rho(exc, RX("x^9+x^3")) == RX("x^9"));
    }
    SUBCASE("idempotence") {
        ExcBasis exc = exceptional_basis(OP("x^10*Dx"));
        Rng rng(73);
        for (int it = 0; it < 10; ++it) {
            XRat R = rng.xrat(0, 4, 4);
            CHECK(rho(exc, rho(exc, R)) == rho(exc, R));
        }
    }
}

TEST_CASE("canonical form") {
    SUBCASE("intro operator worked values") {
        Reducer red(m_intro());
        CHECK(red.reduce(RX("1", pn())).reduced == RX("1", pn()));
        CHECK(red.reduce(RX("x", pn())).reduced == RX("x", pn()));
        CHECK(red.reduce(RX("x^2", pn())).reduced == RX("x/p + (n^2+p^2)/p^2", pn()));
        CHECK(red.reduce(RX("p^2*x^2 - p*x - n^2 - p^2", pn())).reduced.is_zero());
    }
    SUBCASE("recurrence combination") {
        Reducer red(m_intro());
        CHECK(red.reduce(RX("p*x^2 + (n-1)*x - p", pn())).reduced == RX("n*x + n^2/p", pn()));
    }
    SUBCASE("image of a rational function reduces to zero") {
        Reducer red(m_intro());
        CHECK(red.reduce(apply(m_intro(), RX("1/(x-3)", pn()))).reduced.is_zero());
    }
    SUBCASE("nontrivial exceptional space is projected out") {
        DiffOp M = OP("x^10*Dx");
        Reducer red(M);
        for (int s = 1; s <= 9; ++s) {
            ReductionResult r = red.reduce(apply(M, RX("1/x^" + std::to_string(s))));
            CHECK(r.reduced.is_zero());
        }
    }
    SUBCASE("canonical form properties on random operators") {
        Rng rng(79);
        int done = 0;
        while (done < 12) {
            DiffOp M = rng.diffop(0, 2, 3, 3);
            Reducer red(M);
            for (int it = 0; it < 4; ++it) {
                XRat R = rng.xrat(0, 3, 4);
                ReductionResult r = red.reduce(R);
                CHECK(R == r.reduced + apply(M, r.certificate));
                CHECK(red.reduce(r.reduced).reduced == r.reduced);
                CHECK(red.reduce(apply(M, R)).reduced.is_zero());
            }
            ++done;
        }
    }
    SUBCASE("linearity") {
        Reducer red(m_intro());
        Rng rng(83);
        auto lift = [](const XRat& r) {
            std::vector<KElem> nc, dc;
            for (auto& c : r.num().coeffs()) nc.push_back(KElem::constant(2, c.rational_value()));
            for (auto& c : r.den().coeffs()) dc.push_back(KElem::constant(2, c.rational_value()));
            return XRat(XPoly(2, nc), XPoly(2, dc));
        };
        for (int it = 0; it < 6; ++it) {
            XRat Rl = lift(rng.xrat(0, 2, 3)), Sl = lift(rng.xrat(0, 2, 3));
            KElem a = rng.kelem(2, 1, 3);
            CHECK(red.reduce(Rl.scaled(a) + Sl).reduced ==
                  red.reduce(Rl).reduced.scaled(a) + red.reduce(Sl).reduced);
        }
    }
}

TEST_CASE("shell transform") {
    SUBCASE("identity shell equals the plain reducer") {
        Reducer plain(m_intro());
        Reducer shelled = shell_transform(m_intro(), XRat::one(2), XRat::one(2));
        Rng rng(89);
        for (int it = 0; it < 5; ++it) {
            XRat R(rng.xpoly(2, 3, 4), rng.nonzero_xpoly(2, 2, 4));
            CHECK(shelled.reduce(R).reduced == plain.reduce(R).reduced);
        }
    }
    SUBCASE("first order operator with an indicial root") {
        // M = (x-1)Dx + 2 has the indicial root -2 at x-1
        DiffOp M = OP("(x-1)*Dx + 2");
        auto [A, B] = default_shell(M);
        CHECK(A == RX("1/(x-1)^2"));
        Reducer red = shell_transform(M, A, B);
        Rng rng(97);
        for (int it = 0; it < 20; ++it) {
            XRat R = rng.xrat(0, 2, 3);
            ReductionResult r = red.reduce(R);
            CHECK(R == r.reduced + apply(M, r.certificate));
            CHECK(red.reduce(apply(M, R)).reduced.is_zero());
            CHECK(red.reduce(r.reduced).reduced == r.reduced);
        }
    }
    SUBCASE("no negative roots gives the identity shell") {
        auto [A, B] = default_shell(m_intro());
        CHECK(A == XRat::one(2));
        CHECK(B == XRat::one(2));
    }
}

TEST_CASE("brute force preimage") {
    SUBCASE("antiderivative") {
        auto U = brute_force_preimage(DiffOp::dx(0), RX("-1/x^2"), 2);
        REQUIRE(U.has_value());
        CHECK(*U == RX("1/x"));
    }
    SUBCASE("polynomial preimage of the intro image") {
        auto U = brute_force_preimage(m_intro(), RX("p^2*x^2 - p*x - n^2 - p^2", pn()), 0);
        REQUIRE(U.has_value());
        CHECK(*U == RX("1", pn()));
    }
    SUBCASE("logarithmic obstruction") {
        CHECK(!brute_force_preimage(DiffOp::dx(0), RX("1/x"), 0).has_value());
        CHECK(!brute_force_preimage(DiffOp::dx(0), RX("1/x"), 2).has_value());
        CHECK(!brute_force_preimage(DiffOp::dx(0), RX("1/x"), 4).has_value());
    }
    SUBCASE("oracle coherence with the canonical form") {
        Rng rng(103);
        int done = 0;
        while (done < 8) {
            DiffOp M = rng.diffop(0, 2, 2, 3);
            Reducer red(M);
            XRat R = rng.xrat(0, 2, 3);
            XRat img = apply(M, R);
            CHECK(red.reduce(img).reduced.is_zero());
            auto U = brute_force_preimage(M, img, 3);
            if (U) CHECK(apply(M, *U) == img);
            ++done;
        }
    }
}

TEST_CASE("quotient dimension bound") {
    CHECK(quotient_dimension_bound(m_intro(), PX("x^2-1", pn())) == 8);
    CHECK(quotient_dimension_bound(DiffOp::dx(0), PX("x")) == 2);
    CHECK(quotient_dimension_bound(OP("x^10*Dx"), PX("x")) == 12);
}

TEST_CASE("Adolphson confinement") {
    Rng rng(107);
    int done = 0;
    while (done < 4) {
        DiffOp M = rng.diffop(0, 3, 4, 3);
        XPoly P = rng.nonzero_xpoly(0, 3, 3).monic();
        if (P.degree() < 1) continue;
        if (gcd_x(P, P.derivative()).degree() != 0) continue;
        Reducer red(M);
        std::vector<XRat> reductions;
        for (int j = 0; j < P.degree(); ++j)
            for (int s = 1; s <= 4; ++s)
                reductions.push_back(
                    red.reduce(XRat(XPoly::monomial(0, j, KElem::one(0)), P.pow(s))).reduced);
        for (int s = 0; s <= 4; ++s)
            reductions.push_back(red.reduce(XRat(XPoly::monomial(0, s, KElem::one(0)))).reduced);
        XPoly D = XPoly::one(0);
        for (auto& r : reductions) D = lcm_x(D, r.den());
        int maxdeg = 0;
        std::vector<XPoly> nums;
        for (auto& r : reductions) {
            XRat s = XRat(D) * r;
            REQUIRE(s.is_polynomial());
            nums.push_back(s.num());
            maxdeg = std::max(maxdeg, nums.back().degree());
        }
        std::vector<std::vector<KElem>> A;
        for (auto& nm : nums) {
            std::vector<KElem> row;
            for (int k = 0; k <= maxdeg; ++k) row.push_back(nm.coeff(k));
            A.push_back(std::move(row));
        }
        CHECK(rank_of(A) <= quotient_dimension_bound(M, P));
        ++done;
    }
}
