#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace stabatlas {

/* Subsystem entropies of a pure n-qubit state are determined by the regions
   of size at most n/2 (purity gives S_A = S_complement). The canonical
   representative list holds, in order of (size, then lexicographic element
   list), every subset that is smaller than its complement plus, at even n,
   the half-size subsets containing qubit 1. That is 2^(n-1) - 1 regions. */
std::vector<std::uint32_t> region_reps(int n);

/* representative of an arbitrary nonempty proper subset mask */
std::uint32_t region_rep(std::uint32_t mask, int n);

std::string region_name(std::uint32_t mask);  // e.g. "{1,3}"

struct EntropyVector {
    int n = 0;
    std::vector<double> s;  // one entry per region_reps(n) entry

    bool operator==(const EntropyVector&) const = default;
};

/* entropy of every subset mask, 0..2^n-1, expanded from representatives
   (S of the empty set and of the full set are 0 for pure states) */
std::vector<double> expand_to_all_subsets(const EntropyVector& ev);

struct InequalityReport {
    bool subadditivity = true;
    bool araki_lieb = true;
    bool strong_subadditivity = true;
    bool monogamy = true;  // negated tripartite information, the holographic test
    bool holographic() const { return subadditivity && araki_lieb && monogamy; }
};

/* saturation within tol counts as satisfied; only excesses beyond tol are
   violations */
InequalityReport check_inequalities(const EntropyVector& ev, double tol = 1e-9);

/* Von Neumann entropy vector of a dense pure state via singular values of
   the region reshaping. log_base 2.0 gives bits, e gives nats. */
EntropyVector entropy_vector_of(const Eigen::VectorXcd& psi, int n, double log_base = 2.0);

/* entanglement entropy of one region of a dense pure state */
double region_entropy(const Eigen::VectorXcd& psi, int n, std::uint32_t mask,
                      double log_base = 2.0);

}  // namespace stabatlas
