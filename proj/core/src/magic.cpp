#include "stabatlas/magic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace stabatlas {

double anti_flatness(const Spectrum& spec) {
    double t3 = 0.0, t2 = 0.0;
    for (double v : spec.values) {
        t3 += v * v * v;
        t2 += v * v;
    }
    return t3 - t2 * t2;
}

double purity(const Spectrum& spec) {
    double t2 = 0.0;
    for (double v : spec.values) t2 += v * v;
    return t2;
}

double capacity(const Spectrum& spec, double n) {
    if (n <= 0.0) throw std::invalid_argument("capacity index must be positive");
    std::vector<double> lam;
    for (double v : spec.values)
        if (v > 0.0) lam.push_back(v);
    double z = 0.0;
    for (double v : lam) z += std::pow(v, n);
    /* pair form over distinct eigenvalue pairs */
    double pair = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k)
        for (std::size_t l = k + 1; l < lam.size(); ++l) {
            const double d = std::log(lam[k] / lam[l]);
            pair += std::pow(lam[k], n) * std::pow(lam[l], n) * d * d;
        }
    pair *= -n / (z * z);
    /* variance of ln lambda under p_k = lambda_k^n / z. Note: the n-fold
       replica temperature leaves a single factor of n in front, not n^3;
       the pair sum, the two-outcome closed form and finite differences of
       stilde all agree on that. */
    double m1 = 0.0, m2 = 0.0;
    for (double v : lam) {
        const double p = std::pow(v, n) / z;
        m1 += p * std::log(v);
        m2 += p * std::log(v) * std::log(v);
    }
    const double var = -n * (m2 - m1 * m1);
    if (std::abs(pair - var) > 1e-8 * std::max(1.0, std::abs(pair)))
        throw std::runtime_error("capacity cross-check failed: pair and variance forms disagree");
    return pair;
}

double m2_bruteforce(const Eigen::VectorXcd& psi, int n) {
    if (n > 8) throw std::invalid_argument("brute-force Pauli sum needs n <= 8");
    const std::uint32_t dim = 1u << n;
    const double d = static_cast<double>(dim);
    double acc = 0.0;
    for (std::uint32_t x = 0; x < dim; ++x)
        for (std::uint32_t z = 0; z < dim; ++z) {
            /* <psi| X^x Z^z |psi>; the i^{x.z} phase making the string
               Hermitian drops out of the modulus */
            std::complex<double> e = 0.0;
            for (std::uint32_t c = 0; c < dim; ++c) {
                const double sign = (std::popcount(z & (c ^ x)) & 1) ? -1.0 : 1.0;
                e += std::conj(psi[c]) * sign * psi[c ^ x];
            }
            const double p = std::norm(e) / d;
            acc += p * p;
        }
    return -std::log(acc) - std::log(d);
}

double m2_spectrum_estimate(const Spectrum& spec) {
    const std::vector<double> lam = spec.padded();
    if (lam.size() > 256) throw std::invalid_argument("spectrum estimate budget is padded rank 256");
    return -std::log(m2_xor_argument(lam));
}

double m2_xor_argument(const std::vector<double>& lam) {
    const std::size_t r = lam.size();
    if (r == 0 || (r & (r - 1)) != 0)
        throw std::invalid_argument("xor sum needs a power-of-two length");
    std::vector<double> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = std::sqrt(lam[i]);
    double acc = 0.0;
    for (std::size_t i1 = 0; i1 < r; ++i1) {
        if (s[i1] == 0.0) continue;
        for (std::size_t i2 = 0; i2 < r; ++i2) {
            const double p12 = s[i1] * s[i2];
            if (p12 == 0.0) continue;
            const std::size_t a = i1 ^ i2;
            for (std::size_t i3 = 0; i3 < r; ++i3) {
                const double p123 = p12 * s[i3] * s[i3 ^ a];
                if (p123 == 0.0) continue;
                const std::size_t b = i1 ^ i3;
                for (std::size_t i4 = 0; i4 < r; ++i4)
                    acc += p123 * s[i4] * s[i4 ^ a] * s[i4 ^ b] * s[i4 ^ b ^ a];
            }
        }
    }
    return acc;
}

double m2_two_outcome(double lambda) {
    const double l = lambda;
    return -std::log(1.0 - 4.0 * l + 20.0 * l * l - 32.0 * l * l * l + 16.0 * l * l * l * l);
}

namespace {

/* sum over ordered tuples of pairwise-distinct indices of the product of
   f(lambda) factors; tuple length 4, by direct nesting (r <= 8) */
double distinct_quadruple_sum(const std::vector<double>& v) {
    const std::size_t r = v.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < r; ++k) {
                if (k == i || k == j) continue;
                for (std::size_t l = 0; l < r; ++l) {
                    if (l == i || l == j || l == k) continue;
                    acc += v[i] * v[j] * v[k] * v[l];
                }
            }
        }
    return acc;
}

}  // namespace

M2Bounds m2_bounds(const Spectrum& spec) {
    if (spec.rank() > 8) throw std::invalid_argument("averaged bound needs rank <= 8");
    const std::vector<double> lam = spec.padded();
    const double r = static_cast<double>(lam.size());
    const std::size_t n = lam.size();

    double t1 = 0.0, sum2 = 0.0;
    for (double v : lam) {
        t1 += v * v * v * v;
        sum2 += v * v;
    }
    /* ordered distinct pairs of lambda^2 */
    double pair2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) pair2 += lam[i] * lam[i] * lam[j] * lam[j];
    double arg = t1 + 7.0 * pair2;
    if (n >= 4) arg += 7.0 / (r - 3.0) * distinct_quadruple_sum(lam);
    if (n >= 8) {
        /* eight pairwise-distinct indices out of eight: every permutation,
           so the sum is 8! times the product of all sqrt(lambda) */
        double prod = 1.0;
        for (double v : lam) prod *= std::sqrt(v);
        arg += 40320.0 * prod / ((r - 3.0) * (r - 5.0) * (r - 6.0) * (r - 7.0));
    }

    M2Bounds b;
    b.averaged = -std::log(arg);
    const double smax = std::log(r);
    b.upper_2s2 = 2.0 * renyi(spec, 2.0);
    b.upper_antiflat = 4.0 * (smax - renyi(spec, 0.5));
    b.flatness_relative_entropy = smax - renyi(spec, 1.0);

    const double est = m2_spectrum_estimate(spec);
    const double slack = 1e-8;
    if (est > b.averaged + slack)
        throw std::runtime_error("estimate exceeds the permutation average");
    if (b.averaged > std::min(b.upper_2s2, b.upper_antiflat) + slack)
        throw std::runtime_error("permutation average exceeds its entropy bound");
    return b;
}

double smoothed_smax(const Spectrum& spec, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon must be in (0,1)");
    /* values are descending; keep the largest r with tail <= epsilon */
    const int rk = spec.rank();
    double tail = 0.0;
    for (double v : spec.values) tail += v;
    int r = 0;
    for (int i = 0; i < rk; ++i) {
        tail -= spec.values[i];
        r = i + 1;
        if (tail <= epsilon) break;
    }
    return std::log(static_cast<double>(r));
}

}  // namespace stabatlas
