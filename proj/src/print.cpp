#include "ctel/print.hpp"

#include <cassert>
#include <sstream>

namespace ctel {

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }

// one monomial term, positive coefficient expected
std::string mpoly_term_str(const Rat& c, const ExpVec& e, const Names& names) {
    std::vector<std::string> parts;
    bool allzero = true;
    for (int x : e)
        if (x) allzero = false;
    if (c != 1 || allzero) parts.push_back(rat_str(c));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string v = names.params.at(i);
        if (e[i] > 1) v += "^" + std::to_string(e[i]);
        parts.push_back(v);
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

// compact signed sum: "n^2+p^2", "-2*n+1"
std::string mpoly_str(const MPoly& p, const Names& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        out += mpoly_term_str(a, e, names);
        first = false;
    }
    return out;
}

bool mpoly_single(const MPoly& p) { return p.terms().size() == 1; }

// denominators safe without parentheses: a single power of one variable
bool mpoly_safe_den(const MPoly& p) {
    if (!mpoly_single(p)) return false;
    if (p.leading_coeff() != 1) return false;
    int nz = 0;
    for (int x : p.leading_monomial())
        if (x) ++nz;
    return nz == 1;
}

std::string kelem_den_str(const MPoly& d, const Names& names) {
    if (mpoly_safe_den(d)) return mpoly_str(d, names);
    return "(" + mpoly_str(d, names) + ")";
}

struct TermStr {
    bool neg;
    std::string body;
};

std::string join_spaced(const std::vector<TermStr>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].neg ? "-" : "";
        else
            out += terms[i].neg ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

bool kelem_neg(const KElem& c) { return !c.is_zero() && c.num().leading_coeff() < 0; }

// body of the term |c| * x^k; c nonzero
std::string xrat_poly_term(const KElem& c, int k, const Names& names) {
    const MPoly& num = c.num();
    std::string xs;
    if (k >= 1) {
        xs = names.var;
        if (k > 1) xs += "^" + std::to_string(k);
    }
    std::string numstr;
    if (k == 0) {
        numstr = mpoly_single(num) ? mpoly_str(num, names) : "(" + mpoly_str(num, names) + ")";
    } else if (num.is_one()) {
        numstr = xs;
    } else if (mpoly_single(num)) {
        numstr = mpoly_str(num, names) + "*" + xs;
    } else {
        numstr = "(" + mpoly_str(num, names) + ")*" + xs;
    }
    if (c.den().is_one()) return numstr;
    return numstr + "/" + kelem_den_str(c.den(), names);
}

// compact polynomial in x: "x^2-1"
std::string xpoly_compact(const XPoly& p, const Names& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        KElem c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = kelem_neg(c);
        KElem a = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        out += xrat_poly_term(a, k, names);
        first = false;
    }
    return out;
}

bool xpoly_single_term(const XPoly& p) {
    int cnt = 0;
    for (auto& c : p.coeffs())
        if (!c.is_zero()) ++cnt;
    return cnt == 1;
}

bool xpoly_is_unit_power(const XPoly& p) {
    // x^k with coefficient 1
    if (p.is_zero() || !xpoly_single_term(p)) return false;
    return p.lc().is_one() && p.degree() >= 1;
}

// positive-leading atom usable inside products (never contains a top-level sum)
std::string xrat_atom(const XRat& a, const Names& names) {
    if (a.is_polynomial()) {
        const XPoly& p = a.num();
        if (xpoly_single_term(p)) return xrat_poly_term(p.lc(), p.degree(), names);
        return "(" + xpoly_compact(p, names) + ")";
    }
    std::string numstr = xpoly_single_term(a.num())
                             ? xrat_poly_term(a.num().lc(), a.num().degree(), names)
                             : "(" + xpoly_compact(a.num(), names) + ")";
    std::string denstr = xpoly_is_unit_power(a.den())
                             ? xpoly_compact(a.den(), names)
                             : "(" + xpoly_compact(a.den(), names) + ")";
    return numstr + "/" + denstr;
}

bool xrat_neg(const XRat& r) { return !r.is_zero() && kelem_neg(r.num().lc()); }

std::vector<TermStr> xrat_terms(const XRat& r, const Names& names) {
    std::vector<TermStr> terms;
    if (r.is_zero()) return terms;
    if (r.is_polynomial()) {
        for (int k = r.num().degree(); k >= 0; --k) {
            KElem c = r.num().coeff(k);
            if (c.is_zero()) continue;
            bool neg = kelem_neg(c);
            terms.push_back({neg, xrat_poly_term(neg ? -c : c, k, names)});
        }
        return terms;
    }
    bool neg = xrat_neg(r);
    XRat a = neg ? -r : r;
    terms.push_back({neg, xrat_atom(a, names)});
    return terms;
}

} // namespace

std::string print_canonical(const KElem& c, const Names& names) {
    if (c.is_zero()) return "0";
    if (c.den().is_one()) return mpoly_str(c.num(), names);
    std::string numstr =
        mpoly_single(c.num()) ? mpoly_str(c.num(), names) : "(" + mpoly_str(c.num(), names) + ")";
    return numstr + "/" + kelem_den_str(c.den(), names);
}

std::string print_canonical(const XPoly& p, const Names& names) {
    return print_canonical(XRat(p), names);
}

std::string print_canonical(const XRat& r, const Names& names) {
    return join_spaced(xrat_terms(r, names));
}

std::string print_canonical(const DiffOp& d, const Names& names) {
    if (d.is_zero()) return "0";
    std::vector<TermStr> terms;
    for (int i = d.order(); i >= 0; --i) {
        XRat c = d.coeff(i);
        if (c.is_zero()) continue;
        bool neg = xrat_neg(c);
        XRat a = neg ? -c : c;
        std::string body;
        if (i == 0) {
            body = xrat_atom(a, names);
        } else {
            std::string dxs = "Dx";
            if (i > 1) dxs += "^" + std::to_string(i);
            bool is_one = a.is_polynomial() && a.num().is_one();
            body = is_one ? dxs : xrat_atom(a, names) + "*" + dxs;
        }
        terms.push_back({neg, body});
    }
    return join_spaced(terms);
}

std::string print_canonical(const Telescoper& t, const Names& names) {
    std::vector<TermStr> terms;
    for (auto& [m, c] : t.terms) {
        bool neg = kelem_neg(c);
        KElem a = neg ? -c : c;
        std::string mono;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.ores.at(i);
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        std::string body;
        if (mono.empty()) {
            body = mpoly_single(a.num()) ? mpoly_str(a.num(), names)
                                         : "(" + mpoly_str(a.num(), names) + ")";
        } else if (a.is_one()) {
            body = mono;
        } else {
            std::string cs = mpoly_single(a.num()) ? mpoly_str(a.num(), names)
                                                   : "(" + mpoly_str(a.num(), names) + ")";
            body = cs + "*" + mono;
        }
        terms.push_back({neg, body});
    }
    return join_spaced(terms);
}

std::string print_indicial(const SPolyX& q, const Names& names) {
    std::vector<TermStr> terms;
    for (int k = (int)q.c.size() - 1; k >= 0; --k) {
        if (q.c[k].is_zero()) continue;
        XRat c(q.c[k]);
        bool neg = xrat_neg(c);
        XRat a = neg ? -c : c;
        std::string body;
        std::string ss = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
        bool is_one = a.is_polynomial() && a.num().is_one();
        if (ss.empty())
            body = xrat_atom(a, names);
        else
            body = is_one ? ss : xrat_atom(a, names) + "*" + ss;
        terms.push_back({neg, body});
    }
    return join_spaced(terms);
}

std::string print_indicial(const SPolyK& q, const Names& names) {
    std::vector<TermStr> terms;
    for (int k = (int)q.c.size() - 1; k >= 0; --k) {
        if (q.c[k].is_zero()) continue;
        KElem c = q.c[k];
        bool neg = kelem_neg(c);
        KElem a = neg ? -c : c;
        std::string ss = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
        std::string cs = print_canonical(a, names);
        bool needs_paren = cs.find('+') != std::string::npos ||
                           cs.find('-', 1) != std::string::npos;
        if (needs_paren) cs = "(" + cs + ")";
        std::string body;
        if (ss.empty())
            body = cs;
        else
            body = a.is_one() ? ss : cs + "*" + ss;
        terms.push_back({neg, body});
    }
    return join_spaced(terms);
}

} // namespace ctel
