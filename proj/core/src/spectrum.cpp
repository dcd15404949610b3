#include "stabatlas/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stabatlas {

Spectrum Spectrum::from_values(std::vector<double> vals) {
    double sum = 0.0;
    for (double& v : vals) {
        if (v < 0.0) {
            if (v < -1e-12) throw std::invalid_argument("negative eigenvalue in spectrum");
            v = 0.0;
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("spectrum does not sum to 1");
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return Spectrum{std::move(vals)};
}

int Spectrum::rank() const {
    int r = 0;
    for (double v : values)
        if (v > 0.0) ++r;
    return r;
}

std::vector<double> Spectrum::padded() const {
    const int r = rank();
    std::size_t size = 1;
    while (size < static_cast<std::size_t>(r)) size <<= 1;
    std::vector<double> out(values.begin(), values.begin() + r);
    out.resize(size, 0.0);
    return out;
}

double renyi(const Spectrum& spec, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("renyi index must be non-negative");
    if (alpha == 0.0) return std::log(static_cast<double>(spec.rank()));
    if (alpha == std::numeric_limits<double>::infinity()) {
        double mx = 0.0;
        for (double v : spec.values) mx = std::max(mx, v);
        return -std::log(mx);
    }
    if (alpha == 1.0) {
        double h = 0.0;
        for (double v : spec.values)
            if (v > 0.0) h -= v * std::log(v);
        return h;
    }
    double s = 0.0;
    for (double v : spec.values)
        if (v > 0.0) s += std::pow(v, alpha);
    return std::log(s) / (1.0 - alpha);
}

double stilde(const Spectrum& spec, double n) {
    double z = 0.0, zl = 0.0;
    for (double v : spec.values) {
        if (v <= 0.0) continue;
        const double p = std::pow(v, n);
        z += p;
        zl += p * std::log(v);
    }
    return std::log(z) - n * zl / z;
}

Spectrum schmidt_spectrum(const Eigen::VectorXcd& psi, int n, std::uint32_t mask) {
    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    if ((mask & ~full) != 0) throw std::invalid_argument("region mask outside the register");
    if (mask == 0 || mask == full) return Spectrum{{1.0}};
    /* diagonalize on the smaller side */
    std::uint32_t side = mask;
    if (std::popcount(full ^ side) < std::popcount(side)) side = full ^ side;
    std::vector<int> abits, bbits;
    for (int q = 0; q < n; ++q) (((side >> q) & 1u) ? abits : bbits).push_back(q);
    const std::size_t da = std::size_t{1} << abits.size();
    const std::size_t db = std::size_t{1} << bbits.size();
    Eigen::MatrixXcd m(da, db);
    for (std::uint32_t idx = 0; idx <= full; ++idx) {
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < abits.size(); ++i) a |= ((idx >> abits[i]) & 1u) << i;
        for (std::size_t i = 0; i < bbits.size(); ++i) b |= ((idx >> bbits[i]) & 1u) << i;
        m(a, b) = psi[idx];
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + da);
    double sum = 0.0;
    for (double& v : vals) {
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-8) throw std::invalid_argument("state is not normalized");
    for (double& v : vals) v /= sum;
    return Spectrum::from_values(std::move(vals));
}

}  // namespace stabatlas
