#pragma once

#include <vector>

#include <Eigen/Dense>

#include "stabatlas/spectrum.hpp"

namespace stabatlas {

/* Transverse-field Ising chain, periodic boundary:
     H = -cos(theta) sum_i Z_i Z_{i+1} - sin(theta) sum_i X_i + bias sum_i Z_i
   theta = pi/4 + g, where g measures the deviation from criticality. */
struct IsingConfig {
    int n = 4;
    double theta = 0.0;
    double bias = 0.0;
};

double theta_from_deviation(double g);

enum class EigenMethod { by_size, dense, iterative };

/* Lowest eigenvector. Dense symmetric solve up to n = 12; restarted Lanczos
   with full reorthogonalization (lowest pair to 1e-10 residual) for 13-14.
   The method can be forced, mainly so the two solvers can be checked against
   each other. A ground-space degeneracy within 1e-10 raises an error
   suggesting a bias field; the bias term breaks the spin-flip symmetry. */
Eigen::VectorXcd ising_ground_state(const IsingConfig& cfg,
                                    EigenMethod method = EigenMethod::by_size);

struct IsingPoint {
    double g = 0.0;
    int cut = 0;
    double entropy = 0.0;        // von Neumann across the cut, nats
    double anti_flatness = 0.0;
    double capacity_n1 = 0.0;
    double m2_estimate = 0.0;
};

/* ground state, Schmidt cut over the first `cut` sites, then the spectrum
   quantities; the chain is translation invariant so any contiguous window
   of that length gives the same numbers */
IsingPoint ising_magic_point(const IsingConfig& cfg, int cut);

std::vector<IsingPoint> ising_magic_scan(int n, double g_min, double g_max, int steps, int cut,
                                         double bias = 0.0);

}  // namespace stabatlas
