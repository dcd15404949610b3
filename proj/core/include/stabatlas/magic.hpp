#pragma once

#include <Eigen/Dense>

#include "stabatlas/spectrum.hpp"

namespace stabatlas {

/* tr(rho^3) - tr(rho^2)^2, the variance of the spectrum under itself;
   zero exactly on flat spectra */
double anti_flatness(const Spectrum& spec);

double purity(const Spectrum& spec);

/* Capacity of entanglement d/dn stilde, as the pair sum
     -n sum_{k<l} p_k p_l ln^2(lambda_k/lambda_l),  p_k = lambda_k^n / tr(rho^n).
   Cross-checked internally against the modular-Hamiltonian variance
   -n Var_p(ln lambda); the two must agree to 1e-8 or this throws. Zero
   eigenvalues are excluded. At n = 1 this is -Var_rho(ln rho). */
double capacity(const Spectrum& spec, double n);

/* Second stabilizer Renyi entropy -ln sum_a p_a^2 - ln d with
   p_a = |<psi|P_a|psi>|^2 / d over all 4^n Pauli strings */
double m2_bruteforce(const Eigen::VectorXcd& psi, int n);

/* Entanglement-spectrum estimate of non-local magic: the quadruple XOR sum
   over the spectrum padded to a power of two, descending. Equals
   m2_bruteforce of sum_i sqrt(lambda_i)|i>|i>. Padded size capped at 256. */
double m2_spectrum_estimate(const Spectrum& spec);

/* The quadruple XOR sum for one explicit ordering (length must be a power
   of two). The estimate is -ln of this at the descending ordering, which
   maximizes the sum over orderings. */
double m2_xor_argument(const std::vector<double>& padded_lambdas);

/* closed form for a two-outcome spectrum {lambda, 1-lambda} */
double m2_two_outcome(double lambda);

struct M2Bounds {
    double upper_2s2;        // 2 S_2
    double upper_antiflat;   // 4 (S_max - S_{1/2}), S_max = ln(padded size)
    double averaged;         // permutation-averaged estimate
    double flatness_relative_entropy;  // S_max - S_1
};

/* The averaged closed form needs rank <= 8 (distinct-index sums by direct
   enumeration). Asserts estimate <= averaged <= min of the two upper bounds. */
M2Bounds m2_bounds(const Spectrum& spec);

/* ln of the minimal kept rank r with tail mass sum_{i>r} lambda_i <= epsilon */
double smoothed_smax(const Spectrum& spec, double epsilon);

}  // namespace stabatlas
