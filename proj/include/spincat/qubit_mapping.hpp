#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spincat/spin_states.hpp"

namespace spincat {

// Orthonormal logical basis weights of a part of spin l:
//   |0>_l ~ |l,eta> + |l,-eta>,  |1>_l ~ |l,eta> - |l,-eta>,
// so the coherent branch decomposes as a_l|0> + b_l|1>.
struct LogicalAmplitudes {
    double a;
    double b;
};

LogicalAmplitudes logical_amplitudes(HalfInt l, double p);

// State over n logical qubits (n = parts.size()); basis index bit i is part i,
// most significant bit first.
struct StateVector {
    Eigen::VectorXcd amps;
    std::vector<HalfInt> parts;
};

struct DensityMatrix {
    Eigen::MatrixXcd mat;
    std::vector<HalfInt> parts;
};

// Hermiticity/trace/PSD guard used by every operation consuming an externally
// supplied matrix. Throws std::invalid_argument on violation.
void validate_density(const DensityMatrix& rho);

DensityMatrix density_of(const StateVector& state);

// Cat state split in two: amplitudes C_00 = N(1+e^{im pi}) a_{l1} a_{l2},
// C_01 = N(1-e^{im pi}) a_{l1} b_{l2}, C_10 = N(1-e^{im pi}) a_{l2} b_{l1},
// C_11 = N(1+e^{im pi}) b_{l1} b_{l2}.
StateVector pure_bipartite_state(const CatState& state, const SplitScheme& scheme);

// Cat state split in three:
//   N ( (a1|0>+b1|1>)(a2|0>+b2|1>)(a3|0>+b3|1>)
//       + e^{im pi} (a1|0>-b1|1>)(a2|0>-b2|1>)(a3|0>-b3|1>) ).
StateVector tripartite_state(const CatState& state, const SplitScheme& scheme);

// Reduced density matrix over the kept parts, returned in the order listed in
// `keep` (0-based part indices). Listing {1,0} transposes the two marginals.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep);

// The closed-form two-qubit X matrix of the pair (l1, l2) after tracing the
// rest of the scheme out: diagonal 2N^2 { a1^2 a2^2 (1+qc), a1^2 b2^2 (1-qc),
// a2^2 b1^2 (1-qc), b1^2 b2^2 (1+qc) }, anti-diagonal corners
// 2N^2 a1 b1 a2 b2 (1+qc), inner block 2N^2 a1 b1 a2 b2 (1-qc),
// where q = p^{2(j-l1-l2)} and c = cos(m pi). Rank at most 2.
DensityMatrix mixed_two_qubit_closed(const CatState& state, HalfInt l1, HalfInt l2);

// Nonzero eigenvalue lambda_+ of the mixed pair matrix and the corresponding
// one-qubit marginal value; both enter the closed-form discord.
double pair_lambda_plus(const CatState& state, HalfInt l1, HalfInt l2);
double marginal_lambda_plus(const CatState& state, HalfInt l1);

struct EigenSystem {
    Eigen::VectorXd values;    // descending
    Eigen::MatrixXcd vectors;  // columns match values
};

EigenSystem eigensystem(const DensityMatrix& rho);

}  // namespace spincat
