#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "testutil.hpp"

#include <doctest.h>

using namespace ctel;
using namespace ctel::testutil;

namespace {

ScalarSystem chebyshev_bessel() {
    ScalarSystem sys;
    sys.L = OP("(1-x^2)*Dx^2 - (2*p*x^2+3*x-2*p)*Dx - (p^2*x^2+3*p*x-n^2-p^2+1)", pn());
    sys.rels = {OP("-x", pn()),
                OP("((x^2-1)*Dx + 2*x + p*x^2 + (n-1)*x - p)/n", pn())};
    sys.specs = {{OreKind::Derivation, 0}, {OreKind::Shift, 1}};
    return sys;
}

ScalarSystem hermite_sys() {
    std::vector<std::string> nt{"n", "t"};
    ScalarSystem sys;
    sys.L = parse_opexpr("(t+x)*Dx - (n + 2*x*(t+x))", nt, "x");
    sys.rels = {parse_opexpr("n/(t+x)", nt, "x")};
    sys.specs = {{OreKind::Derivation, 1}};
    return sys;
}

DMonomial mono(std::vector<int> e) { return DMonomial{std::move(e)}; }

} // namespace

TEST_CASE("monomial orders") {
    SUBCASE("degree first") {
        CHECK(cmp_dmonomial(mono({0, 0}), mono({1, 0}), TermOrder::Grevlex) < 0);
        CHECK(cmp_dmonomial(mono({1, 0}), mono({0, 0}), TermOrder::Deglex) > 0);
    }
    SUBCASE("grevlex picks d1 before d2") {
        std::vector<DMonomial> frontier{mono({0, 1}), mono({1, 0})};
        CHECK(monomial_succ(TermOrder::Grevlex, frontier) == mono({1, 0}));
    }
    SUBCASE("grevlex tie break within a degree") {
        std::vector<DMonomial> frontier{mono({1, 1}), mono({2, 0})};
        CHECK(monomial_succ(TermOrder::Grevlex, frontier) == mono({2, 0}));
    }
    SUBCASE("one precedes everything") {
        std::vector<DMonomial> frontier{mono({0, 0}), mono({1, 0}), mono({0, 2})};
        CHECK(monomial_succ(TermOrder::Grevlex, frontier) == mono({0, 0}));
        CHECK(monomial_succ(TermOrder::Deglex, frontier) == mono({0, 0}));
    }
}

TEST_CASE("linear relation") {
    std::mt19937_64 rng(301);
    SUBCASE("independent pair") {
        // [1] and [-x] are linearly independent
        std::vector<XRat> cands{RX("1", pn())};
        CHECK(!linear_relation(cands, RX("-x", pn()), rng).has_value());
    }
    SUBCASE("worked relation coefficients") {
        // p^2*[x^2] + p*[-x] - (n^2+p^2)*[1] = 0
        std::vector<XRat> cands{RX("1", pn()), RX("-x", pn())};
        auto rel = linear_relation(cands, RX("x/p + (n^2+p^2)/p^2", pn()), rng);
        REQUIRE(rel.has_value());
        CHECK((*rel)[0] == KE("(n^2+p^2)/p^2", pn()));
        CHECK((*rel)[1] == KE("-1/p", pn()));
    }
    SUBCASE("identity") {
        std::vector<XRat> cands{RX("x^2+1"), RX("1/(x-1)")};
        auto rel = linear_relation(cands, RX("x^2+1"), rng);
        REQUIRE(rel.has_value());
        CHECK((*rel)[0] == KElem::one(0));
        CHECK((*rel)[1].is_zero());
    }
    SUBCASE("empty candidate list") {
        CHECK(linear_relation({}, XRat(0), rng).has_value());
        CHECK(!linear_relation({}, RX("x"), rng).has_value());
    }
}

TEST_CASE("telescoper normalization") {
    // Sn + Dp - n/p normalizes to p*Sn + p*Dp - n
    std::vector<std::pair<DMonomial, KElem>> terms{
        {mono({0, 1}), KElem::one(2)},
        {mono({1, 0}), KElem::one(2)},
        {mono({0, 0}), -KE("n/p", pn())}};
    Telescoper t = normalize_telescoper(terms, TermOrder::Grevlex);
    REQUIRE(t.terms.size() == 3);
    CHECK(t.terms[0].first == mono({0, 1}));
    CHECK(t.terms[0].second == KE("p", pn()));
    CHECK(t.terms[1].first == mono({1, 0}));
    CHECK(t.terms[1].second == KE("p", pn()));
    CHECK(t.terms[2].first == mono({0, 0}));
    CHECK(t.terms[2].second == KE("-n", pn()));
}

TEST_CASE("telescoping the chebyshev-bessel system") {
    CyclicData cd = from_scalar(chebyshev_bessel());
    TelescopingBasis B = telescope(cd);
    CHECK(B.status == TeleStatus::Complete);
    REQUIRE(B.G.size() == 2);
    // standard monomials 1 and Dp
    REQUIRE(B.Q.size() == 2);
    CHECK(B.Q[0] == mono({0, 0}));
    CHECK(B.Q[1] == mono({1, 0}));
    // p*Sn + p*Dp - n
    Telescoper t1 = B.G[0];
    CHECK(t1.terms == std::vector<std::pair<DMonomial, KElem>>{
                          {mono({0, 1}), KE("p", pn())},
                          {mono({1, 0}), KE("p", pn())},
                          {mono({0, 0}), KE("-n", pn())}});
    // p^2*Dp^2 + p*Dp - (n^2+p^2)
    Telescoper t2 = B.G[1];
    CHECK(t2.terms == std::vector<std::pair<DMonomial, KElem>>{
                          {mono({2, 0}), KE("p^2", pn())},
                          {mono({1, 0}), KE("p", pn())},
                          {mono({0, 0}), KE("-n^2-p^2", pn())}});
    CHECK(verify_basis(B, B.F));
    SUBCASE("a perturbed coefficient fails verification") {
        TelescopingBasis bad = B;
        bad.G[0].terms[1].second += KElem::one(2);
        CHECK(!verify_basis(bad, bad.F));
    }
    SUBCASE("F values are computed once per visited monomial") {
        CHECK(B.f_computations == B.F.size());
    }
}

TEST_CASE("telescoping the hermite polynomial system") {
    CyclicData cd = from_scalar(hermite_sys());
    TelescopingBasis B = telescope(cd);
    CHECK(B.status == TeleStatus::Complete);
    REQUIRE(B.G.size() == 1);
    std::vector<std::string> nt{"n", "t"};
    // Dt^2 - 2t*Dt + 2n
    CHECK(B.G[0].terms == std::vector<std::pair<DMonomial, KElem>>{
                              {mono({2}), KElem::one(2)},
                              {mono({1}), KE("-2*t", nt)},
                              {mono({0}), KE("2*n", nt)}});
    CHECK(verify_basis(B, B.F));
}

TEST_CASE("order independence of the ideal") {
    CyclicData cd = from_scalar(chebyshev_bessel());
    TelescopeOptions g, d;
    g.order = TermOrder::Grevlex;
    d.order = TermOrder::Deglex;
    TelescopingBasis Bg = telescope(cd, g), Bd = telescope(cd, d);
    CHECK(Bg.status == TeleStatus::Complete);
    CHECK(Bd.status == TeleStatus::Complete);
    // cross-check: every relation of one basis vanishes on the F-values of
    // a joint run; since F depends only on the monomial, combine both maps
    std::map<DMonomial, XRat> joint = Bg.F;
    for (auto& [m, f] : Bd.F) {
        auto it = joint.find(m);
        if (it != joint.end())
            CHECK(it->second == f);
        else
            joint[m] = f;
    }
    CHECK(verify_basis(Bg, joint));
    CHECK(verify_basis(Bd, joint));
}

TEST_CASE("termination variants") {
    CyclicData cd = from_scalar(chebyshev_bessel());
    SUBCASE("first-only stops at the order-minimal relation") {
        TelescopeOptions o;
        o.first_only = true;
        TelescopingBasis B = telescope(cd, o);
        CHECK(B.status == TeleStatus::FirstFound);
        REQUIRE(B.G.size() == 1);
        // the first relation in grevlex order is the Sn one
        CHECK(B.G[0].leading_monomial() == mono({0, 1}));
    }
    SUBCASE("degree cap") {
        TelescopeOptions o;
        o.max_degree = 0;
        TelescopingBasis B = telescope(cd, o);
        CHECK(B.status == TeleStatus::DegreeCapped);
        CHECK(B.G.empty());
    }
}

TEST_CASE("no auxiliary operators") {
    SUBCASE("nonzero F1 telescopes to nothing") {
        ScalarSystem sys;
        sys.L = m_intro();
        TelescopingBasis B = telescope(from_scalar(sys));
        CHECK(B.status == TeleStatus::Complete);
        CHECK(B.G.empty());
        CHECK(B.Q == std::vector<DMonomial>{mono({})});
    }
    SUBCASE("a pure derivative yields the unit ideal") {
        ScalarSystem sys;
        sys.L = OP("Dx^2 + 1");
        CyclicData cd = from_scalar(sys);
        cd.A_f = DiffOp::dx(0);  // f = gamma' is a derivative
        TelescopingBasis B = telescope(cd);
        CHECK(B.status == TeleStatus::Complete);
        REQUIRE(B.G.size() == 1);
        CHECK(B.G[0].terms ==
              std::vector<std::pair<DMonomial, KElem>>{{mono({}), KElem::one(0)}});
    }
}

TEST_CASE("shell preconditioner leaves the basis unchanged") {
    CyclicData cd = from_scalar(hermite_sys());
    TelescopeOptions plain, shelled;
    shelled.shell = true;
    TelescopingBasis A = telescope(cd, plain), B = telescope(cd, shelled);
    CHECK(A.status == TeleStatus::Complete);
    CHECK(B.status == TeleStatus::Complete);
    REQUIRE(A.G.size() == B.G.size());
    for (size_t i = 0; i < A.G.size(); ++i) CHECK(A.G[i] == B.G[i]);
}
