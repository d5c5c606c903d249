#pragma once

#include "spincat/qubit_mapping.hpp"

namespace spincat {

// H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0. Inputs within 1e-12
// outside [0,1] are clamped; anything further throws.
double binary_entropy(double x);

// -sum lambda log2 lambda over the (clamped) spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

// Two-qubit concurrence. The lambdas are obtained as the singular values of
// the symmetric matrix tau_ij = x_i^T (sigma_y x sigma_y) x_j built from the
// subnormalized eigenvectors x_i = sqrt(w_i) v_i of rho. This is Wootters'
// original construction; unlike taking square roots of the eigenvalues of
// sqrt(rho) rho~ sqrt(rho) it does not amplify the solver noise of spurious
// zero eigenvalues (1e-16 noise would surface as 1e-8 there).
double wootters_concurrence(const DensityMatrix& rho);

// The sqrt(rho) rho~ sqrt(rho) eigenvalue route, kept as an independent
// cross-check of the default; accurate to about 1e-7 on rank-deficient input.
double wootters_concurrence_hermitian(const DensityMatrix& rho);

// E = H((1 + sqrt(1-c^2))/2), monotone in c.
double eof_from_concurrence(double c);

// Pure bipartite split (j1, j2) of the cat state:
//   C = sqrt(1-p^{4 j1}) sqrt(1-p^{4 j2}) / (1 + p^{2j} cos m pi).
double concurrence_pure_bipartite(const CatState& state, const SplitScheme& scheme);

// E = H(1/2 + (p^{2 j1} + p^{2 j2} cos m pi) / (2 (1 + p^{2j} cos m pi))).
double eof_pure_bipartite(const CatState& state, const SplitScheme& scheme);

// One part against the rest of a 3-part scheme; head is the 0-based index of k1.
double eof_tripartite_pure(const CatState& state, const SplitScheme& scheme, int head);

// Mixed pair (l1, l2) left after tracing out the rest (l1 + l2 < j):
//   C = p^{2(j-l1-l2)} sqrt((1-p^{4 l1})(1-p^{4 l2})) / (1 + p^{2j} cos m pi).
double concurrence_mixed_pair(const CatState& state, HalfInt l1, HalfInt l2);
double eof_mixed_pair(const CatState& state, HalfInt l1, HalfInt l2);

// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho);

enum class Direction { right, left };

// Closed-form discord of the mixed pair (l1, l2). `right` measures the first
// part, `left` the second; D_left(l1, l2) = D_right(l2, l1) by construction.
double discord_closed(const CatState& state, HalfInt l1, HalfInt l2,
                      Direction direction = Direction::right);

// Minimal conditional entropy of a rank-2 two-qubit state via purification:
// attach a qubit ancilla weighted by the two eigenvalue roots, trace out the
// first qubit and return the EoF of the complement pair.
double koashi_winter_smin(const DensityMatrix& rho);

enum class Measured { first, second };

struct DiscordResult {
    double value = 0.0;
    // False when the refinement never reached the step floor (best value is
    // still returned).
    bool converged = false;
};

// Numerical discord oracle: scans projective measurements M_k(theta, phi) of
// the chosen qubit on a grid, then refines by coordinate descent with step
// halving, and assembles D = S(rho_measured) - S(rho_AB) + min conditional
// entropy. Independent of every closed form above.
DiscordResult discord_bruteforce(const DensityMatrix& rho, Measured measured,
                                 int grid_n = 64, int refine_iters = 40);

}  // namespace spincat
