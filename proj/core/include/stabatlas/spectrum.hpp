#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace stabatlas {

/* Eigenvalue spectrum of a density matrix: non-negative, descending, unit
   trace. The padded view zero-fills to the next power of two, which is the
   shape the XOR magic estimate is defined on. */
struct Spectrum {
    std::vector<double> values;

    /* sorts descending, clamps -1e-12..0 noise to zero, validates the trace */
    static Spectrum from_values(std::vector<double> vals);

    int rank() const;  // strictly positive entries
    std::vector<double> padded() const;
};

/* Renyi entropy in nats. alpha = 1 is the von Neumann limit, alpha = 0 gives
   ln(rank), alpha = infinity gives -ln(max eigenvalue). */
double renyi(const Spectrum& spec, double alpha);

/* ln tr(rho^n) - n tr(rho^n ln rho)/tr(rho^n); its n-derivative is the
   capacity of entanglement */
double stilde(const Spectrum& spec, double n);

/* Schmidt spectrum across the cut given by a qubit mask (qubit q <-> bit
   q-1 of basis indices); eigenvalues are renormalized to unit sum to strip
   eigensolver noise */
Spectrum schmidt_spectrum(const Eigen::VectorXcd& psi, int n, std::uint32_t mask);

}  // namespace stabatlas
