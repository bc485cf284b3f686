#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "testutil.hpp"

#include "ctel/cli.hpp"

#include <doctest.h>
#include <fstream>
#include <sstream>

using namespace ctel;
using namespace ctel::testutil;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string problems(const std::string& name) {
    return std::string(CTEL_PROBLEMS_DIR) + "/" + name;
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parsing the telescope system file") {
    Problem p = parse_problem(slurp(problems("chebyshev-bessel.ct")));
    CHECK(p.kind == Problem::Kind::Telescope);
    CHECK(p.params == std::vector<std::string>{"p", "n"});
    CHECK(p.ore_names == std::vector<std::string>{"Dp", "Sn"});
    CHECK(p.specs[0].kind == OreKind::Derivation);
    CHECK(p.specs[0].param == 0);
    CHECK(p.specs[1].kind == OreKind::Shift);
    CHECK(p.specs[1].param == 1);
    CHECK(p.var == "x");
    CHECK(p.system.L.order() == 2);
    CHECK(p.system.rels.size() == 2);
    CHECK(p.system.rels[0] == OP("-x", pn()));
}

TEST_CASE("parsing a reduce file") {
    Problem p = parse_problem(slurp(problems("intro-reduce.ct")));
    CHECK(p.kind == Problem::Kind::Reduce);
    CHECK(p.R == RX("x^2", pn()));
    CHECK(p.M == m_intro());
}

TEST_CASE("parse errors") {
    SUBCASE("undeclared ore operator is named") {
        try {
            parse_problem("params q\nvar x\nL = Dx\nrel Dq: x");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("Dq") != std::string::npos);
        }
    }
    SUBCASE("undeclared identifier") {
        CHECK_THROWS_AS(parse_problem("var x\nL = y*Dx"), ParseError);
    }
    SUBCASE("division by Dx") {
        CHECK_THROWS_AS(parse_problem("var x\nL = x/Dx"), ParseError);
    }
    SUBCASE("reduce operand with Dx") {
        CHECK_THROWS_AS(parse_problem("var x\nreduce Dx by Dx"), ParseError);
    }
    SUBCASE("missing relation") {
        CHECK_THROWS_AS(parse_problem("params t\nore Dt = d/dt\nvar x\nL = Dx"), ParseError);
    }
    SUBCASE("error position") {
        try {
            parse_problem("var x\nL = x + $");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.col == 9);
        }
    }
}

TEST_CASE("canonical printing") {
    Names nm{{"p", "n"}, "x", {"Dp", "Sn"}};
    SUBCASE("worked canonical form") {
        CHECK(print_canonical(RX("x/p + (n^2+p^2)/p^2", pn()), nm) ==
              "x/p + (n^2+p^2)/p^2");
    }
    SUBCASE("telescopers") {
        std::vector<std::pair<DMonomial, KElem>> t1{
            {DMonomial{{2, 0}}, KE("p^2", pn())},
            {DMonomial{{1, 0}}, KE("p", pn())},
            {DMonomial{{0, 0}}, KE("-n^2-p^2", pn())}};
        CHECK(print_canonical(normalize_telescoper(t1, TermOrder::Grevlex), nm) ==
              "p^2*Dp^2 + p*Dp - (n^2+p^2)");
        std::vector<std::pair<DMonomial, KElem>> t2{
            {DMonomial{{0, 1}}, KE("p", pn())},
            {DMonomial{{1, 0}}, KE("p", pn())},
            {DMonomial{{0, 0}}, KE("-n", pn())}};
        CHECK(print_canonical(normalize_telescoper(t2, TermOrder::Grevlex), nm) ==
              "p*Sn + p*Dp - n");
    }
    SUBCASE("zero") {
        CHECK(print_canonical(XRat(2), nm) == "0");
        CHECK(print_canonical(DiffOp(2), nm) == "0");
    }
    SUBCASE("worked recurrence value") {
        CHECK(print_canonical(RX("n*x + n^2/p", pn()), nm) == "n*x + n^2/p");
    }
}

TEST_CASE("round trips") {
    Names nm{{"p", "n"}, "x", {"Dp", "Sn"}};
    Rng rng(401);
    SUBCASE("rational functions") {
        for (int it = 0; it < 40; ++it) {
            XRat r(rng.xpoly_k(2, 2, 2, 5), rng.nonzero_xpoly(2, 2, 5));
            std::string s = print_canonical(r, nm);
            CHECK(parse_ratexpr(s, nm.params, nm.var) == r);
        }
    }
    SUBCASE("operators") {
        for (int it = 0; it < 40; ++it) {
            std::vector<XRat> cs;
            for (int i = 0; i <= 2; ++i)
                cs.push_back(XRat(rng.xpoly_k(2, 2, 1, 4), rng.nonzero_xpoly(2, 1, 3)));
            DiffOp d(2, cs);
            std::string s = print_canonical(d, nm);
            CHECK(parse_opexpr(s, nm.params, nm.var) == d);
        }
    }
    SUBCASE("telescopers") {
        for (int it = 0; it < 20; ++it) {
            std::vector<std::pair<DMonomial, KElem>> terms;
            for (int k = 0; k < 3; ++k) {
                DMonomial m{{(int)rng.integer(0, 2), (int)rng.integer(0, 2)}};
                terms.push_back({m, rng.nonzero_kelem(2, 2, 4)});
            }
            Telescoper t;
            try {
                t = normalize_telescoper(terms, TermOrder::Grevlex);
            } catch (const std::invalid_argument&) {
                continue;  // coefficients collapsed to zero
            }
            std::string s = print_canonical(t, nm);
            CHECK(parse_telescoper(s, nm.params, nm.ores, TermOrder::Grevlex) == t);
        }
    }
}

TEST_CASE("cli") {
    SUBCASE("reduce command") {
        CliRun r = cli({"reduce", problems("intro-reduce.ct")});
        CHECK(r.code == 0);
        CHECK(r.out == "x/p + (n^2+p^2)/p^2\n");
    }
    SUBCASE("reduce with certificate") {
        CliRun r = cli({"reduce", problems("intro-reduce.ct"), "--certificate"});
        CHECK(r.code == 0);
        CHECK(r.out.find("certificate: 1/p^2") != std::string::npos);
    }
    SUBCASE("telescope command") {
        CliRun r = cli({"telescope", problems("chebyshev-bessel.ct")});
        CHECK(r.code == 0);
        CHECK(r.out.find("p*Sn + p*Dp - n") != std::string::npos);
        CHECK(r.out.find("p^2*Dp^2 + p*Dp - (n^2+p^2)") != std::string::npos);
        CHECK(r.out.find("standard: 1 Dp") != std::string::npos);
    }
    SUBCASE("hermite system") {
        CliRun r = cli({"telescope", problems("hermite-weight.ct")});
        CHECK(r.code == 0);
        CHECK(r.out.find("Dt^2 - 2*t*Dt + 2*n") != std::string::npos);
    }
    SUBCASE("exceptional command") {
        CliRun r = cli({"exceptional", problems("monomial-exc.ct")});
        CHECK(r.code == 0);
        CHECK(r.out.find("dimension: 9") != std::string::npos);
        CHECK(r.out.find("basis: x^8") != std::string::npos);
        CHECK(r.out.find("basis: 1") != std::string::npos);
    }
    SUBCASE("localdata command") {
        CliRun r = cli({"localdata", problems("monomial-exc.ct"), "--place", "x"});
        CHECK(r.code == 0);
        CHECK(r.out.find("shift: 9") != std::string::npos);
        CliRun ri = cli({"localdata", problems("monomial-exc.ct"), "--place", "inf"});
        CHECK(ri.code == 0);
        CHECK(ri.out.find("shift: -9") != std::string::npos);
    }
    SUBCASE("determinism") {
        for (auto cmd : {std::vector<std::string>{"telescope", problems("chebyshev-bessel.ct"),
                                                  "--seed", "7"},
                         std::vector<std::string>{"reduce", problems("intro-reduce.ct")},
                         std::vector<std::string>{"exceptional", problems("monomial-exc.ct")}}) {
            CliRun a = cli(cmd), b = cli(cmd);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
            CHECK(a.err == b.err);
        }
    }
    SUBCASE("json carries the same canonical strings") {
        CliRun t = cli({"reduce", problems("intro-reduce.ct")});
        CliRun j = cli({"reduce", problems("intro-reduce.ct"), "--json"});
        CHECK(j.code == 0);
        CHECK(j.out.find("\"status\": \"ok\"") != std::string::npos);
        CHECK(j.out.find("x/p + (n^2+p^2)/p^2") != std::string::npos);
        CliRun tj = cli({"telescope", problems("chebyshev-bessel.ct"), "--json"});
        CHECK(tj.out.find("\"complete\"") != std::string::npos);
        CHECK(tj.out.find("p*Sn + p*Dp - n") != std::string::npos);
    }
    SUBCASE("exit codes") {
        CHECK(cli({"reduce", problems("no-such-file.ct")}).code == 1);
        CHECK(cli({"telescope", problems("intro-reduce.ct")}).code == 1);
        CHECK(cli({"telescope", problems("chebyshev-bessel.ct"), "--max-degree", "0"}).code == 2);
        CHECK(cli({"exceptional", problems("monomial-exc.ct"), "--exc-cap", "3"}).code == 3);
    }
    SUBCASE("deglex order also completes") {
        CliRun r = cli({"telescope", problems("chebyshev-bessel.ct"), "--order", "deglex"});
        CHECK(r.code == 0);
        CHECK(r.out.find("p*Sn + p*Dp - n") != std::string::npos);
    }
}
