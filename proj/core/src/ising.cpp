#include "stabatlas/ising.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stabatlas/magic.hpp"

namespace stabatlas {

double theta_from_deviation(double g) { return std::numbers::pi / 4.0 + g; }

namespace {

double diagonal_term(const IsingConfig& cfg, std::uint32_t b) {
    /* Z|0> = +|0>, Z|1> = -|1> */
    double zz = 0.0, z = 0.0;
    for (int i = 0; i < cfg.n; ++i) {
        const int zi = ((b >> i) & 1u) ? -1 : 1;
        const int zj = ((b >> ((i + 1) % cfg.n)) & 1u) ? -1 : 1;
        zz += zi * zj;
        z += zi;
    }
    return -std::cos(cfg.theta) * zz + cfg.bias * z;
}

void apply_hamiltonian(const IsingConfig& cfg, const Eigen::VectorXd& in, Eigen::VectorXd& out) {
    const std::uint32_t dim = 1u << cfg.n;
    const double sx = std::sin(cfg.theta);
    for (std::uint32_t b = 0; b < dim; ++b) out[b] = diagonal_term(cfg, b) * in[b];
    for (int i = 0; i < cfg.n; ++i) {
        const std::uint32_t bit = 1u << i;
        for (std::uint32_t b = 0; b < dim; ++b) out[b] -= sx * in[b ^ bit];
    }
}

[[noreturn]] void degenerate() {
    throw std::runtime_error(
        "ground space is degenerate within 1e-10; add a bias field b > 0 to split it");
}

Eigen::VectorXd dense_ground_state(const IsingConfig& cfg) {
    const std::uint32_t dim = 1u << cfg.n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double sx = std::sin(cfg.theta);
    for (std::uint32_t b = 0; b < dim; ++b) {
        h(b, b) = diagonal_term(cfg, b);
        for (int i = 0; i < cfg.n; ++i) h(b ^ (1u << i), b) -= sx;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    if (es.eigenvalues()[1] - es.eigenvalues()[0] < 1e-10) degenerate();
    return es.eigenvectors().col(0);
}

Eigen::VectorXd lanczos_ground_state(const IsingConfig& cfg) {
    const std::uint32_t dim = 1u << cfg.n;
    const int max_basis = 300;
    const int max_restarts = 20;

    /* -H has non-negative off-diagonal entries and is irreducible, so the
       ground state is entrywise positive and the uniform start vector is
       never orthogonal to it. The small asymmetric kick keeps a spin-flip
       antisymmetric partner reachable, so a near-degenerate pair is seen
       as one instead of hiding in an unexplored symmetry sector. */
    Eigen::VectorXd start = Eigen::VectorXd::Constant(dim, 1.0);
    start[1] += 1e-6;
    start.normalize();

    for (int restart = 0; restart < max_restarts; ++restart) {
        std::vector<Eigen::VectorXd> basis;
        std::vector<double> alpha, beta;  // tridiagonal coefficients
        basis.push_back(start);
        Eigen::VectorXd w(dim);
        for (int j = 0; j < max_basis; ++j) {
            apply_hamiltonian(cfg, basis[j], w);
            if (j > 0) w -= beta[j - 1] * basis[j - 1];
            alpha.push_back(basis[j].dot(w));
            w -= alpha[j] * basis[j];
            /* full reorthogonalization, twice */
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& v : basis) w -= v.dot(w) * v;
            const double nb = w.norm();
            const int m = j + 1;

            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
            const double theta0 = es.eigenvalues()[0];
            const double scale = std::max(1.0, std::abs(theta0));
            const double res0 = nb * std::abs(es.eigenvectors()(m - 1, 0));
            const double res1 = m > 1 ? nb * std::abs(es.eigenvectors()(m - 1, 1)) : 1.0;

            const bool exhausted = nb < 1e-13;  // exact invariant subspace
            if ((res0 <= 1e-10 * scale && (m > 1 && res1 <= 1e-8 * scale)) || exhausted) {
                if (m > 1 && es.eigenvalues()[1] - theta0 < 1e-10) degenerate();
                Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
                for (int i = 0; i < m; ++i) x += es.eigenvectors()(i, 0) * basis[i];
                x.normalize();
                return x;
            }
            beta.push_back(nb);
            basis.push_back(w / nb);
            /* keep the current Ritz vector as the restart seed */
            if (j == max_basis - 1) {
                Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
                for (int i = 0; i < m; ++i) x += es.eigenvectors()(i, 0) * basis[i];
                x.normalize();
                start = x;
            }
        }
    }
    throw std::runtime_error("Lanczos failed to converge the ground pair");
}

}  // namespace

Eigen::VectorXcd ising_ground_state(const IsingConfig& cfg, EigenMethod method) {
    if (cfg.n < 2 || cfg.n > 14) throw std::invalid_argument("chain length must be in [2, 14]");
    if (cfg.bias < 0.0) throw std::invalid_argument("bias field must be non-negative");
    if (method == EigenMethod::by_size)
        method = cfg.n <= 12 ? EigenMethod::dense : EigenMethod::iterative;
    Eigen::VectorXd x =
        method == EigenMethod::dense ? dense_ground_state(cfg) : lanczos_ground_state(cfg);
    /* fix the overall sign so reruns are bit-stable */
    std::uint32_t imax = 0;
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(x.size()); ++i)
        if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
    if (x[imax] < 0.0) x = -x;
    return x.cast<std::complex<double>>();
}

IsingPoint ising_magic_point(const IsingConfig& cfg, int cut) {
    if (cut <= 0 || cut >= cfg.n) throw std::invalid_argument("cut must split the chain");
    const Eigen::VectorXcd psi = ising_ground_state(cfg);
    const std::uint32_t mask = (1u << cut) - 1;
    const Spectrum spec = schmidt_spectrum(psi, cfg.n, mask);
    IsingPoint pt;
    pt.g = cfg.theta - std::numbers::pi / 4.0;
    pt.cut = cut;
    pt.entropy = renyi(spec, 1.0);
    pt.anti_flatness = anti_flatness(spec);
    pt.capacity_n1 = capacity(spec, 1.0);
    pt.m2_estimate = m2_spectrum_estimate(spec);
    return pt;
}

std::vector<IsingPoint> ising_magic_scan(int n, double g_min, double g_max, int steps, int cut,
                                         double bias) {
    if (steps < 1) throw std::invalid_argument("scan needs at least one step");
    std::vector<IsingPoint> out;
    out.reserve(steps);
    for (int j = 0; j < steps; ++j) {
        const double g =
            steps == 1 ? g_min : g_min + (g_max - g_min) * static_cast<double>(j) / (steps - 1);
        IsingConfig cfg{n, theta_from_deviation(g), bias};
        out.push_back(ising_magic_point(cfg, cut));
    }
    return out;
}

}  // namespace stabatlas
