#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <vector>

#include "stabatlas/exact_matrix.hpp"
#include "stabatlas/gates.hpp"
#include "stabatlas/gaussian_int.hpp"

namespace stabatlas {

/* State vector with exact amplitudes z * 2^(-root2_exponent/2), z a Gaussian
   integer, up to one fixed positive real scale shared by the whole orbit
   (the seed's normalization). Closed under H, P and CNOT, so orbit BFS can
   compare states exactly. Physical identity ignores global phase; use
   phase_canonical() before hashing. */
struct ExactState {
    int num_qubits = 0;
    int root2_exponent = 0;
    std::vector<GaussianInt> amp;  // 2^num_qubits entries, basis bit q-1 <-> qubit q

    ExactState() = default;
    ExactState(int n, int k) : num_qubits(n), root2_exponent(k), amp(std::size_t(1) << n) {}

    /* seed with integer amplitudes; the common normalization is implicit */
    static ExactState from_integers(int n, const std::vector<long>& values);
    static ExactState basis_state(int n, unsigned long index);

    void canonicalize();

    void apply_h(int qubit);
    void apply_p(int qubit);
    void apply_cnot(int control, int target);
    /* Pauli actions, for Pauli-group orbits */
    void apply_x(int qubit);
    void apply_z(int qubit);

    /* one of the six standard generators, acting on qubits 1 and 2 */
    void apply_gen(Gen g);

    /* arbitrary exact 4x4 operator on qubits 1 and 2 */
    void apply_pair(const ExactMatrix& m);

    bool operator==(const ExactState& o) const {
        return num_qubits == o.num_qubits && root2_exponent == o.root2_exponent &&
               amp == o.amp;
    }

    int compare(const ExactState& o) const;

    /* lexicographic minimum over the eight central-phase multiples */
    ExactState phase_canonical() const;

    std::string encode() const;

    /* normalized floating-point amplitudes */
    Eigen::VectorXcd to_complex() const;
};

}  // namespace stabatlas
