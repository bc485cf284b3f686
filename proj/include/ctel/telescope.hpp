#ifndef CTEL_TELESCOPE_HPP
#define CTEL_TELESCOPE_HPP

#include "ctel/oresys.hpp"

#include <map>

namespace ctel {

// monomial in the auxiliary Ore operators
struct DMonomial {
    std::vector<int> e;
    int total_degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const { return total_degree() == 0; }
    DMonomial times(int i) const {
        DMonomial m = *this;
        m.e.at(i) += 1;
        return m;
    }
    std::optional<DMonomial> divided_by(int i) const {
        if (e.at(i) == 0) return std::nullopt;
        DMonomial m = *this;
        m.e[i] -= 1;
        return m;
    }
    bool divides(const DMonomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool operator==(const DMonomial& o) const { return e == o.e; }
    bool operator!=(const DMonomial& o) const { return !(*this == o); }
    bool operator<(const DMonomial& o) const { return e < o.e; }  // storage order only
};

enum class TermOrder { Grevlex, Deglex };

// variables ordered d_1 < d_2 < ... < d_e
int cmp_dmonomial(const DMonomial& a, const DMonomial& b, TermOrder order);

// smallest queued monomial under the order; frontier must be nonempty
DMonomial monomial_succ(TermOrder order, const std::vector<DMonomial>& frontier);

// element of K<d_1,...,d_e>: nonzero distinct monomials, coefficients
// cleared to content-1 polynomials with a positive leading sign
struct Telescoper {
    std::vector<std::pair<DMonomial, KElem>> terms;  // decreasing monomial order
    DMonomial leading_monomial() const { return terms.at(0).first; }
    bool operator==(const Telescoper& o) const { return terms == o.terms; }
};

Telescoper normalize_telescoper(std::vector<std::pair<DMonomial, KElem>> terms, TermOrder order);

enum class TeleStatus { Complete, FirstFound, DegreeCapped };

struct TelescopingBasis {
    std::vector<Telescoper> G;
    std::vector<DMonomial> Q;  // standard monomials, in visit order
    std::vector<DMonomial> R;  // reducible leading monomials
    TeleStatus status = TeleStatus::Complete;
    TermOrder order = TermOrder::Grevlex;
    std::map<DMonomial, XRat> F;  // reductions for every visited monomial
    size_t f_computations = 0;    // one canonical-form evaluation per visited monomial
};

struct TelescopeOptions {
    TermOrder order = TermOrder::Grevlex;
    bool first_only = false;
    int max_degree = 20;
    bool shell = false;
    ReducerOptions reducer;
};

TelescopingBasis telescope(const CyclicData& cd, const TelescopeOptions& opts = {});

// coefficients a with target = sum a_j candidates_j over K, or none;
// a random specialization pre-filters infeasible systems
std::optional<std::vector<KElem>> linear_relation(const std::vector<XRat>& candidates,
                                                  const XRat& target, std::mt19937_64& rng);

bool verify_basis(const TelescopingBasis& B, const std::map<DMonomial, XRat>& Fs);

} // namespace ctel

#endif
