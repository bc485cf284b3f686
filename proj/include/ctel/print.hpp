#ifndef CTEL_PRINT_HPP
#define CTEL_PRINT_HPP

#include "ctel/telescope.hpp"

#include <string>

namespace ctel {

struct Names {
    std::vector<std::string> params;
    std::string var = "x";
    std::vector<std::string> ores;
};

// Deterministic canonical text; parse_* of the result reproduces the value.
std::string print_canonical(const KElem& c, const Names& names);
std::string print_canonical(const XPoly& p, const Names& names);
std::string print_canonical(const XRat& r, const Names& names);
std::string print_canonical(const DiffOp& d, const Names& names);
std::string print_canonical(const Telescoper& t, const Names& names);

// indicial polynomials, in a formal variable s
std::string print_indicial(const SPolyX& q, const Names& names);
std::string print_indicial(const SPolyK& q, const Names& names);

} // namespace ctel

#endif
