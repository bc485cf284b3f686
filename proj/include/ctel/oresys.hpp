#ifndef CTEL_ORESYS_HPP
#define CTEL_ORESYS_HPP

#include "ctel/reduction.hpp"

#include <string>

namespace ctel {

enum class OreKind { Derivation, Shift };

// one auxiliary Ore operator acting on parameter t_param:
//   derivation: sigma = id,            delta = d/dt
//   shift:      sigma = (t -> t + 1),  delta = 0
struct OreAction {
    OreKind kind;
    int param;
};

using OreSpec = std::vector<OreAction>;

// (sigma_i(R), delta_i(R)) acting coefficient-wise; x untouched
std::pair<XRat, XRat> sigma_delta(int i, const XRat& R, const OreSpec& specs);

// D-finite input in scalar form: L(f) = 0 with L a minimal annihilator,
// and one relation d_i(f) = C_i(f) per Ore operator.
struct ScalarSystem {
    DiffOp L;
    std::vector<DiffOp> rels;
    OreSpec specs;
};

using KxMatrix = std::vector<std::vector<XRat>>;

// D-finite input as matrices acting on a fixed basis of A/I; column j of a
// matrix holds the coordinates of the image of the j-th basis element.
struct MatrixSystem {
    int nvars = 0;
    int dim = 0;
    KxMatrix dx;
    std::vector<KxMatrix> act;
    std::vector<XRat> f;
    OreSpec specs;
};

struct CyclicData {
    std::vector<XRat> gamma;    // coordinates of the cyclic vector
    DiffOp L;                   // minimal annihilator of gamma, polynomial coefficients
    std::vector<DiffOp> B;      // d_i(gamma) = B_i(gamma), order < r
    DiffOp A_f;                 // f = A_f(gamma), order < r
    OreSpec specs;
    std::vector<std::string> warnings;
};

// gamma = f fast path; also runs the integrability spot-check on the rels.
CyclicData from_scalar(const ScalarSystem& sys);

// companion-basis matrix form of a scalar system (basis f, f', ..., f^(r-1))
MatrixSystem companion_system(const ScalarSystem& sys);

// Search basis vectors, then small random integer combinations.
// Throws std::runtime_error when no cyclic vector is found within max_trials.
CyclicData cyclic_vector(const MatrixSystem& sys, uint64_t seed = 0x9e3779b9u,
                         int max_trials = 50);

// lambda_i(R) = B_i^*(sigma_i(R)) + delta_i(R)
XRat lambda_map(int i, const XRat& R, const CyclicData& cd);

// F_1 = [A_f^*(1)] for a reducer built on adjoint(L)
XRat initial_F(const CyclicData& cd, const Reducer& reducer);

} // namespace ctel

#endif
