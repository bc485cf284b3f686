#include "ctel/cli.hpp"

#include "ctel/print.hpp"
#include "ctel/problem.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ctel {

namespace {

using nlohmann::json;

struct Output {
    bool as_json = false;
    std::string status = "ok";
    std::vector<std::string> results;
    std::vector<std::string> diagnostics;

    void emit(std::ostream& out, std::ostream& err) const {
        if (as_json) {
            json j;
            j["status"] = status;
            j["results"] = results;
            j["diagnostics"] = diagnostics;
            out << j.dump(2) << "\n";
            return;
        }
        for (auto& r : results) out << r << "\n";
        for (auto& d : diagnostics) err << d << "\n";
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Names names_of(const Problem& p) { return Names{p.params, p.var, p.ore_names}; }

int do_reduce(const std::string& file, bool certificate, bool shell, ReducerOptions ropt,
              Output& o) {
    Problem p = parse_problem(read_file(file));
    if (p.kind != Problem::Kind::Reduce)
        throw std::invalid_argument("reduce needs a file with a reduce statement");
    Names nm = names_of(p);
    Reducer red = [&] {
        if (!shell) return Reducer(p.M, ropt);
        auto [A, B] = default_shell(p.M, ropt);
        return Reducer(p.M, A, B, ropt);
    }();
    ReductionResult r = red.reduce(p.R);
    o.results.push_back(print_canonical(r.reduced, nm));
    if (certificate) o.results.push_back("certificate: " + print_canonical(r.certificate, nm));
    return 0;
}

int do_localdata(const std::string& file, const std::string& place, Output& o) {
    Problem p = parse_problem(read_file(file));
    Names nm = names_of(p);
    DiffOp M = p.named_operator();
    if (!M.has_polynomial_coefficients()) M = poly_normalize(M).first;
    if (place == "inf") {
        LocalDataInfinity ld = local_data_infinity(M);
        o.results.push_back("place: inf");
        o.results.push_back("shift: " + std::to_string(ld.shift));
        o.results.push_back("indicial: " + print_indicial(ld.indicial, nm));
        return 0;
    }
    XPoly P = parse_place(place, p).monic();
    auto res = local_data_finite(M, P);
    if (std::holds_alternative<SplitRequest>(res)) {
        o.results.push_back("split: " + print_canonical(std::get<SplitRequest>(res).divisor, nm));
        o.diagnostics.push_back("the place must be split before local data is defined");
        return 0;
    }
    const LocalDataFinite& ld = std::get<LocalDataFinite>(res);
    o.results.push_back("place: " + print_canonical(ld.place, nm));
    o.results.push_back("shift: " + std::to_string(ld.shift));
    o.results.push_back("indicial: " + print_indicial(ld.indicial, nm));
    return 0;
}

int do_exceptional(const std::string& file, ReducerOptions ropt, Output& o) {
    Problem p = parse_problem(read_file(file));
    Names nm = names_of(p);
    DiffOp M = p.named_operator();
    if (!M.has_polynomial_coefficients()) M = poly_normalize(M).first;
    ExcBasis exc = exceptional_basis(M, ropt);
    o.results.push_back("dimension: " + std::to_string(exc.dimension()));
    o.results.push_back("common_denominator: " + print_canonical(exc.common_den, nm));
    for (auto& row : exc.rows) {
        XRat w = XRat(row.v) / XRat(exc.common_den);
        o.results.push_back("basis: " + print_canonical(w, nm));
    }
    return 0;
}

int do_telescope(const std::string& file, const TelescopeOptions& topt, Output& o) {
    Problem p = parse_problem(read_file(file));
    if (p.kind != Problem::Kind::Telescope)
        throw std::invalid_argument("telescope needs a file with an L/rel system");
    Names nm = names_of(p);
    CyclicData cd = from_scalar(p.system);
    for (auto& w : cd.warnings) o.diagnostics.push_back("warning: " + w);
    TelescopingBasis B = telescope(cd, topt);
    switch (B.status) {
        case TeleStatus::Complete: o.status = "complete"; break;
        case TeleStatus::FirstFound: o.status = "first-found"; break;
        case TeleStatus::DegreeCapped: o.status = "degree-capped"; break;
    }
    for (auto& T : B.G) o.results.push_back(print_canonical(T, nm));
    std::string q = "standard:";
    for (auto& m : B.Q) {
        Telescoper unit{{{m, KElem::one(p.nvars())}}};
        q += " " + print_canonical(unit, nm);
    }
    o.results.push_back(q);
    return B.status == TeleStatus::DegreeCapped ? 2 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Hermite reduction and creative telescoping"};
    app.require_subcommand(1);

    std::string file, place = "inf", order = "grevlex";
    bool certificate = false, as_json = false, shell = false, first_only = false;
    int max_degree = 20;
    uint64_t seed = ReducerOptions{}.seed;
    size_t exc_cap = ReducerOptions{}.exc_cap;

    auto add_common = [&](CLI::App* c) {
        c->add_option("file", file, "problem file (.ct)")->required();
        c->add_flag("--json", as_json, "machine-readable output");
        c->add_option("--seed", seed, "seed for randomized subroutines");
        c->add_option("--exc-cap", exc_cap, "cap on exceptional generators");
    };
    CLI::App* creduce = app.add_subcommand("reduce", "canonical form of R modulo the operator");
    add_common(creduce);
    creduce->add_flag("--certificate", certificate, "also print the certificate");
    creduce->add_flag("--shell", shell, "use the indicial-root shell preconditioner");

    CLI::App* clocal = app.add_subcommand("localdata", "shift and indicial polynomial at a place");
    add_common(clocal);
    clocal->add_option("--place", place, "a polynomial in the main variable, or 'inf'")
        ->required();

    CLI::App* cexc = app.add_subcommand("exceptional", "echelonized exceptional space");
    add_common(cexc);

    CLI::App* ctel = app.add_subcommand("telescope", "creative telescoping basis");
    add_common(ctel);
    ctel->add_option("--order", order, "term order: grevlex or deglex")
        ->check(CLI::IsMember({"grevlex", "deglex"}));
    ctel->add_flag("--first-only", first_only, "stop at the first relation");
    ctel->add_option("--max-degree", max_degree, "total degree cap (default 20)");
    ctel->add_flag("--shell", shell, "use the indicial-root shell preconditioner");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to the output stream
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Output o;
    o.as_json = as_json;
    ReducerOptions ropt;
    ropt.seed = seed;
    ropt.exc_cap = exc_cap;
    int code = 0;
    try {
        if (creduce->parsed()) {
            code = do_reduce(file, certificate, shell, ropt, o);
        } else if (clocal->parsed()) {
            code = do_localdata(file, place, o);
        } else if (cexc->parsed()) {
            code = do_exceptional(file, ropt, o);
        } else if (ctel->parsed()) {
            TelescopeOptions topt;
            topt.order = order == "deglex" ? TermOrder::Deglex : TermOrder::Grevlex;
            topt.first_only = first_only;
            topt.max_degree = max_degree;
            topt.shell = shell;
            topt.reducer = ropt;
            code = do_telescope(file, topt, o);
        }
    } catch (const ExcCapExceeded& e) {
        o.status = "error";
        o.diagnostics.push_back(std::string("internal limit: ") + e.what());
        o.emit(out, err);
        return 3;
    } catch (const std::exception& e) {
        o.status = "error";
        o.diagnostics.push_back(std::string("error: ") + e.what());
        o.emit(out, err);
        return 1;
    }
    if (code == 2 && o.status == "degree-capped")
        o.diagnostics.push_back("degree cap reached; output is partial");
    o.emit(out, err);
    return code;
}

} // namespace ctel
