#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "stabatlas/gaussian_int.hpp"

namespace stabatlas {

/* Square matrix over the ring Z[i, 1/sqrt(2)]: Gaussian-integer entries with
   a global prefactor 2^(-root2_exponent/2). Kept canonical at all times:
   while root2_exponent >= 2 and every entry is divisible by 2, entries are
   halved and the exponent drops by 2. The representation of a value is then
   unique, because sqrt(2) times a nonzero Gaussian integer is never a
   Gaussian integer (the exponent's parity is value-determined). */
struct ExactMatrix {
    int dim = 0;
    int root2_exponent = 0;
    std::vector<GaussianInt> a;  // row-major, dim*dim entries

    ExactMatrix() = default;
    ExactMatrix(int d, int k) : dim(d), root2_exponent(k), a(d * d) {}

    static ExactMatrix identity(int dim);

    GaussianInt& at(int r, int c) { return a[r * dim + c]; }
    const GaussianInt& at(int r, int c) const { return a[r * dim + c]; }

    void canonicalize();

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix dagger() const;

    bool operator==(const ExactMatrix& o) const {
        return dim == o.dim && root2_exponent == o.root2_exponent && a == o.a;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    /* Total order used for canonical phase representatives and deterministic
       sorting: entries row-major (real before imaginary), exponent last. */
    int compare(const ExactMatrix& o) const;

    /* multiplication by the scalar (1+i)/sqrt(2), an eighth root of unity */
    ExactMatrix times_phase_unit() const;
    ExactMatrix times_phase(int power) const;

    /* lexicographic minimum over the eight phase multiples */
    ExactMatrix phase_canonical() const;
    /* true if some phase multiple equals the identity */
    bool is_phase_of_identity() const;

    bool is_identity() const;
    bool is_unitary() const;

    /* exact test for M = (op on qubit 2) tensor (op on qubit 1); dim 4 only */
    bool is_local_tensor() const;

    static ExactMatrix kron(const ExactMatrix& high, const ExactMatrix& low);

    std::string encode() const;
    void encode_into(std::string& out) const;
    static ExactMatrix decode(const std::string& in, std::size_t& pos);

    Eigen::MatrixXcd to_complex() const;
};

}  // namespace stabatlas
