#ifndef CTEL_PROBLEM_HPP
#define CTEL_PROBLEM_HPP

#include "ctel/telescope.hpp"

namespace ctel {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// One problem file: declarations plus either a reduce request or a
// telescoping system in scalar form.
struct Problem {
    enum class Kind { Reduce, Telescope };

    std::vector<std::string> params;
    std::string var;
    std::vector<std::string> ore_names;
    OreSpec specs;

    Kind kind = Kind::Telescope;
    DiffOp M;  // reduce target operator
    XRat R;    // reduce operand
    ScalarSystem system;
    std::optional<DiffOp> L_declared;

    int nvars() const { return (int)params.size(); }
    // the single operator the file names (reduce: M, telescope: L)
    const DiffOp& named_operator() const;
};

Problem parse_problem(const std::string& text);

// expression helpers sharing the problem grammar
DiffOp parse_opexpr(const std::string& text, const std::vector<std::string>& params,
                    const std::string& var);
XRat parse_ratexpr(const std::string& text, const std::vector<std::string>& params,
                   const std::string& var);
XPoly parse_place(const std::string& text, const Problem& p);

// restricted parser for printed telescoper elements (coefficient prefix
// followed by a monomial in the declared Ore operators)
Telescoper parse_telescoper(const std::string& text, const std::vector<std::string>& params,
                            const std::vector<std::string>& ores, TermOrder order);

} // namespace ctel

#endif
