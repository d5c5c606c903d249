#include "spincat/qubit_mapping.hpp"

#include <cmath>

namespace spincat {

namespace {

// p^{2l} as an exact-integer-exponent power.
double pow2l(double p, HalfInt l) { return std::pow(p, l.twice()); }

void require_not_degenerate(const CatState& state, const char* where) {
    if (state.degenerate())
        throw DegenerateCatError(std::string(where) + ": odd cat at p = 1 is degenerate");
}

}  // namespace

LogicalAmplitudes logical_amplitudes(HalfInt l, double p) {
    const double q = pow2l(p, l);
    return {std::sqrt(0.5 * (1.0 + q)), std::sqrt(0.5 * (1.0 - q))};
}

void validate_density(const DensityMatrix& rho) {
    const auto& m = rho.mat;
    if (m.rows() != m.cols() || m.rows() != (1LL << rho.parts.size()))
        throw std::invalid_argument("density matrix: dimension does not match part labels");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density matrix: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-12 || std::abs(m.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix: negative eigenvalue");
}

DensityMatrix density_of(const StateVector& state) {
    return {state.amps * state.amps.adjoint(), state.parts};
}

StateVector pure_bipartite_state(const CatState& state, const SplitScheme& scheme) {
    require_not_degenerate(state, "pure_bipartite_state");
    validate_scheme(scheme, state.j, 2);
    const double n = cat_normalization(state);
    const double c = cos_m_pi(state.m);
    const auto [a1, b1] = logical_amplitudes(scheme.parts[0], state.p);
    const auto [a2, b2] = logical_amplitudes(scheme.parts[1], state.p);

    StateVector out;
    out.parts = scheme.parts;
    out.amps.resize(4);
    out.amps << n * (1.0 + c) * a1 * a2, n * (1.0 - c) * a1 * b2,
        n * (1.0 - c) * a2 * b1, n * (1.0 + c) * b1 * b2;
    return out;
}

StateVector tripartite_state(const CatState& state, const SplitScheme& scheme) {
    require_not_degenerate(state, "tripartite_state");
    validate_scheme(scheme, state.j, 3);
    const double n = cat_normalization(state);
    const double c = cos_m_pi(state.m);
    LogicalAmplitudes w[3] = {logical_amplitudes(scheme.parts[0], state.p),
                              logical_amplitudes(scheme.parts[1], state.p),
                              logical_amplitudes(scheme.parts[2], state.p)};

    StateVector out;
    out.parts = scheme.parts;
    out.amps.resize(8);
    for (int idx = 0; idx < 8; ++idx) {
        double plus = n, minus = n * c;
        for (int q = 0; q < 3; ++q) {
            const int bit = (idx >> (2 - q)) & 1;  // MSB first
            plus *= bit ? w[q].b : w[q].a;
            minus *= bit ? -w[q].b : w[q].a;
        }
        out.amps(idx) = plus + minus;
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = static_cast<int>(rho.parts.size());
    if (keep.empty() || keep.size() >= rho.parts.size())
        throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
    std::vector<bool> kept(n, false);
    for (int q : keep) {
        if (q < 0 || q >= n || kept[q])
            throw std::invalid_argument("partial_trace: bad part index");
        kept[q] = true;
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (!kept[q]) traced.push_back(q);

    const int kd = static_cast<int>(keep.size());
    const int td = n - kd;
    const int rdim = 1 << kd;

    // Composes a full basis index from the kept-part bits (in `keep` order,
    // MSB first) and the traced-part bits.
    auto full_index = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        for (int q = 0; q < n; ++q) {
            int bit = 0;
            for (int a = 0; a < kd; ++a)
                if (keep[a] == q) bit = (kept_bits >> (kd - 1 - a)) & 1;
            for (int a = 0; a < td; ++a)
                if (traced[a] == q) bit = (traced_bits >> (td - 1 - a)) & 1;
            idx = (idx << 1) | bit;
        }
        return idx;
    };

    DensityMatrix out;
    for (int q : keep) out.parts.push_back(rho.parts[q]);
    out.mat = Eigen::MatrixXcd::Zero(rdim, rdim);
    for (int r = 0; r < rdim; ++r)
        for (int c = 0; c < rdim; ++c)
            for (int t = 0; t < (1 << td); ++t)
                out.mat(r, c) += rho.mat(full_index(r, t), full_index(c, t));
    return out;
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
    return partial_trace(density_of(state), keep);
}

DensityMatrix mixed_two_qubit_closed(const CatState& state, HalfInt l1, HalfInt l2) {
    require_not_degenerate(state, "mixed_two_qubit_closed");
    if (l1.twice() + l2.twice() >= state.j.twice())
        throw std::invalid_argument("mixed_two_qubit_closed: l1 + l2 must be below j");
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const double n2 = 1.0 / (2.0 + 2.0 * pow2l(p, state.j) * c);
    const double q = std::pow(p, state.j.twice() - l1.twice() - l2.twice());
    const auto [a1, b1] = logical_amplitudes(l1, p);
    const auto [a2, b2] = logical_amplitudes(l2, p);
    const double outer = 2.0 * n2 * (1.0 + q * c);
    const double inner = 2.0 * n2 * (1.0 - q * c);
    const double cross = a1 * b1 * a2 * b2;

    DensityMatrix rho;
    rho.parts = {l1, l2};
    rho.mat = Eigen::MatrixXcd::Zero(4, 4);
    rho.mat(0, 0) = outer * a1 * a1 * a2 * a2;
    rho.mat(1, 1) = inner * a1 * a1 * b2 * b2;
    rho.mat(2, 2) = inner * a2 * a2 * b1 * b1;
    rho.mat(3, 3) = outer * b1 * b1 * b2 * b2;
    rho.mat(0, 3) = rho.mat(3, 0) = outer * cross;
    rho.mat(1, 2) = rho.mat(2, 1) = inner * cross;
    return rho;
}

double pair_lambda_plus(const CatState& state, HalfInt l1, HalfInt l2) {
    require_not_degenerate(state, "pair_lambda_plus");
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const HalfInt l3 = state.j - l1 - l2;
    return 0.5 * (1.0 + pow2l(p, l3)) * (1.0 + pow2l(p, l1 + l2) * c) /
           (1.0 + pow2l(p, state.j) * c);
}

double marginal_lambda_plus(const CatState& state, HalfInt l1) {
    require_not_degenerate(state, "marginal_lambda_plus");
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    return 0.5 * (1.0 + pow2l(p, state.j - l1)) * (1.0 + pow2l(p, l1) * c) /
           (1.0 + pow2l(p, state.j) * c);
}

EigenSystem eigensystem(const DensityMatrix& rho) {
    if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("eigensystem: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensystem: eigensolver failed");

    EigenSystem out;  // Eigen sorts ascending; flip to descending
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

}  // namespace spincat
