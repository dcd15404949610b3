#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "stabatlas/group.hpp"

namespace stabatlas {

/* Basis index convention throughout: qubit q corresponds to bit q-1 of the
   basis index, so qubit 1 is the least significant bit. */

Eigen::VectorXcd basis_vector(int num_qubits, std::uint32_t index);

/* applies a 4x4 operator on qubits {1,2}; with the index convention those
   occupy the two low bits, so the state is transformed in blocks of four */
void apply_pair_gate(Eigen::VectorXcd& psi, const Eigen::Matrix4cd& u);

bool same_ray(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, double tol = 1e-9);

/* Elements u of g with |<psi| u psi>| = 1, i.e. fixing the ray of psi.
   Overlap moduli in [1 - 10 tol, 1 - tol) are treated as numerically
   ambiguous and raise an error rather than silently classifying. The result
   is verified to be closed under products. */
std::vector<std::uint32_t> ray_stabilizer(GroupTable& g, const Eigen::VectorXcd& psi,
                                          double tol = 1e-9);

}  // namespace stabatlas
