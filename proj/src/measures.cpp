#include "spincat/measures.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace spincat {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = std::numbers::pi;

double pow2l(double p, HalfInt l) { return std::pow(p, l.twice()); }

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// sigma_y tensor sigma_y; real anti-diagonal (-1, 1, 1, -1).
Eigen::Matrix4cd spin_flip_kernel() {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
}

void require_two_qubits(const DensityMatrix& rho, const char* where) {
    if (rho.mat.rows() != 4)
        throw std::invalid_argument(std::string(where) + ": expected a 4x4 two-qubit matrix");
}

void require_not_degenerate(const CatState& state, const char* where) {
    if (state.degenerate())
        throw DegenerateCatError(std::string(where) + ": odd cat at p = 1 is degenerate");
}

void require_proper_pair(const CatState& state, HalfInt l1, HalfInt l2, const char* where) {
    if (l1.twice() + l2.twice() >= state.j.twice())
        throw std::invalid_argument(std::string(where) + ": l1 + l2 must be below j");
}

}  // namespace

double binary_entropy(double x) {
    constexpr double slack = 1e-12;
    if (x < -slack || x > 1.0 + slack)
        throw std::domain_error("binary_entropy: argument outside [0, 1]");
    x = clamp01(x);
    return -xlog2x(x) - xlog2x(1.0 - x) + 0.0;  // +0.0 folds -0.0 into 0.0
}

double von_neumann_entropy(const DensityMatrix& rho) {
    validate_density(rho);
    const EigenSystem es = eigensystem(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) s -= xlog2x(clamp01(es.values(i)));
    return s;
}

double wootters_concurrence(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_concurrence");
    validate_density(rho);
    const EigenSystem es = eigensystem(rho);

    Eigen::Matrix4cd x;
    for (int i = 0; i < 4; ++i)
        x.col(i) = std::sqrt(std::max(es.values(i), 0.0)) * es.vectors.col(i);

    const Eigen::Matrix4cd tau = x.transpose() * spin_flip_kernel() * x;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
    const auto& sv = svd.singularValues();  // descending
    return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

double wootters_concurrence_hermitian(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_concurrence_hermitian");
    validate_density(rho);
    const Eigen::Matrix4cd s = spin_flip_kernel();
    const Eigen::Matrix4cd tilde = s * rho.mat.conjugate() * s;

    const EigenSystem es = eigensystem(rho);
    Eigen::Matrix4cd root = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i)
        root += std::sqrt(std::max(es.values(i), 0.0)) * es.vectors.col(i) *
                es.vectors.col(i).adjoint();

    DensityMatrix sandwich{root * tilde * root, rho.parts};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sandwich.mat);
    Eigen::Vector4d lam = solver.eigenvalues().reverse();
    for (int i = 0; i < 4; ++i) lam(i) = std::sqrt(std::max(lam(i), 0.0));
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double eof_from_concurrence(double c) {
    constexpr double slack = 1e-12;
    if (c < -slack || c > 1.0 + slack)
        throw std::invalid_argument("eof_from_concurrence: concurrence outside [0, 1]");
    c = clamp01(c);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double concurrence_pure_bipartite(const CatState& state, const SplitScheme& scheme) {
    require_not_degenerate(state, "concurrence_pure_bipartite");
    validate_scheme(scheme, state.j, 2);
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const double q1 = pow2l(p, scheme.parts[0]);
    const double q2 = pow2l(p, scheme.parts[1]);
    return std::sqrt(1.0 - q1 * q1) * std::sqrt(1.0 - q2 * q2) /
           (1.0 + pow2l(p, state.j) * c);
}

double eof_pure_bipartite(const CatState& state, const SplitScheme& scheme) {
    require_not_degenerate(state, "eof_pure_bipartite");
    validate_scheme(scheme, state.j, 2);
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const double arg = 0.5 + 0.5 * (pow2l(p, scheme.parts[0]) + pow2l(p, scheme.parts[1]) * c) /
                                 (1.0 + pow2l(p, state.j) * c);
    return binary_entropy(arg);
}

double eof_tripartite_pure(const CatState& state, const SplitScheme& scheme, int head) {
    require_not_degenerate(state, "eof_tripartite_pure");
    validate_scheme(scheme, state.j, 3);
    if (head < 0 || head > 2)
        throw std::invalid_argument("eof_tripartite_pure: head must be 0, 1 or 2");
    const HalfInt k1 = scheme.parts[head];
    return eof_pure_bipartite(state, {{k1, state.j - k1}});
}

double concurrence_mixed_pair(const CatState& state, HalfInt l1, HalfInt l2) {
    require_not_degenerate(state, "concurrence_mixed_pair");
    require_proper_pair(state, l1, l2, "concurrence_mixed_pair");
    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const HalfInt l3 = state.j - l1 - l2;
    const double q1 = pow2l(p, l1);
    const double q2 = pow2l(p, l2);
    return pow2l(p, l3) * std::sqrt((1.0 - q1 * q1) * (1.0 - q2 * q2)) /
           (1.0 + pow2l(p, state.j) * c);
}

double eof_mixed_pair(const CatState& state, HalfInt l1, HalfInt l2) {
    return eof_from_concurrence(concurrence_mixed_pair(state, l1, l2));
}

double mutual_information(const DensityMatrix& rho) {
    require_two_qubits(rho, "mutual_information");
    const double s_ab = von_neumann_entropy(rho);
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
    return s_a + s_b - s_ab;
}

double discord_closed(const CatState& state, HalfInt l1, HalfInt l2, Direction direction) {
    if (direction == Direction::left) std::swap(l1, l2);
    require_not_degenerate(state, "discord_closed");
    require_proper_pair(state, l1, l2, "discord_closed");

    const double p = state.p;
    const double c = cos_m_pi(state.m);
    const HalfInt l3 = state.j - l1 - l2;
    const double q1 = pow2l(p, l1);
    const double q2 = pow2l(p, l2);
    const double q3 = pow2l(p, l3);
    const double denom = 1.0 + pow2l(p, state.j) * c;

    // Koashi-Winter term: EoF of the unmeasured part with the purifier, whose
    // concurrence squared is p^{4 l1}(1-p^{4 l2})(1-p^{4 l3}) / denom^2.
    const double csq = q1 * q1 * (1.0 - q2 * q2) * (1.0 - q3 * q3) / (denom * denom);
    const double smin = eof_from_concurrence(std::sqrt(clamp01(csq)));

    const double d = binary_entropy(marginal_lambda_plus(state, l1)) -
                     binary_entropy(pair_lambda_plus(state, l1, l2)) + smin;
    return std::max(0.0, d);
}

double koashi_winter_smin(const DensityMatrix& rho) {
    require_two_qubits(rho, "koashi_winter_smin");
    validate_density(rho);
    const EigenSystem es = eigensystem(rho);
    if (es.values(2) > 1e-10)
        throw std::domain_error("koashi_winter_smin: state rank exceeds 2");

    // Purification with a single ancilla qubit as the least significant part.
    StateVector purified;
    purified.parts = {rho.parts[0], rho.parts[1], HalfInt::from_twice(1)};
    purified.amps = Eigen::VectorXcd::Zero(8);
    for (int i = 0; i < 2; ++i) {
        const double w = std::sqrt(std::max(es.values(i), 0.0));
        for (int k = 0; k < 4; ++k) purified.amps((k << 1) | i) += w * es.vectors(k, i);
    }
    const DensityMatrix complement = partial_trace(purified, {1, 2});
    return eof_from_concurrence(wootters_concurrence(complement));
}

DiscordResult discord_bruteforce(const DensityMatrix& rho, Measured measured, int grid_n,
                                 int refine_iters) {
    require_two_qubits(rho, "discord_bruteforce");
    validate_density(rho);
    if (grid_n < 32) throw std::invalid_argument("discord_bruteforce: grid_n must be >= 32");

    const int mq = measured == Measured::first ? 0 : 1;
    const double s_meas = von_neumann_entropy(partial_trace(rho, {mq}));
    const double s_ab = von_neumann_entropy(rho);

    // Basis index with the measured bit alpha and the spectator bit i.
    auto index = [mq](int alpha, int i) { return mq == 0 ? (alpha << 1) | i : (i << 1) | alpha; };

    // Average conditional entropy of the spectator after measuring along the
    // Bloch direction (theta, phi). The 2x2 conditional states are handled by
    // the trace/determinant eigenvalue formula, no solver in the loop.
    auto conditional = [&](double theta, double phi) {
        const complexd phase = std::polar(1.0, phi);
        const double ct = std::cos(0.5 * theta), st = std::sin(0.5 * theta);
        const complexd basis[2][2] = {{ct, phase * st}, {st, -phase * ct}};

        double total = 0.0;
        for (const auto& u : basis) {
            complexd b[2][2] = {};
            for (int i = 0; i < 2; ++i)
                for (int jj = 0; jj < 2; ++jj)
                    for (int alpha = 0; alpha < 2; ++alpha)
                        for (int beta = 0; beta < 2; ++beta)
                            b[i][jj] += std::conj(u[alpha]) * u[beta] *
                                        rho.mat(index(alpha, i), index(beta, jj));
            const double pk = (b[0][0] + b[1][1]).real();
            if (pk < 1e-15) continue;
            const double det = (b[0][0] * b[1][1] - b[0][1] * b[1][0]).real();
            const double disc = std::sqrt(std::max(pk * pk - 4.0 * det, 0.0));
            total += pk * binary_entropy(0.5 * (1.0 + disc / pk));
        }
        return total;
    };

    double best_theta = 0.0, best_phi = 0.0;
    double best = conditional(0.0, 0.0);
    for (int i = 0; i < grid_n; ++i) {
        const double theta = kPi * i / (grid_n - 1);
        for (int jj = 0; jj < 2 * grid_n; ++jj) {
            const double phi = kPi * jj / grid_n;
            const double v = conditional(theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    double step = kPi / 64.0;
    for (int iter = 0; iter < refine_iters; ++iter) {
        const double cand[4][2] = {{best_theta + step, best_phi},
                                   {best_theta - step, best_phi},
                                   {best_theta, best_phi + step},
                                   {best_theta, best_phi - step}};
        bool moved = false;
        for (const auto& c : cand) {
            double theta = std::min(std::max(c[0], 0.0), kPi);
            double phi = std::fmod(c[1] + 2.0 * kPi, 2.0 * kPi);
            const double v = conditional(theta, phi);
            if (v < best - 1e-15) {
                best = v;
                best_theta = theta;
                best_phi = phi;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }

    DiscordResult out;
    out.converged = step <= 1e-9;
    out.value = std::max(0.0, s_meas - s_ab + best);
    return out;
}

}  // namespace spincat
