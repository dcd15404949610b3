#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "stabatlas/entropy.hpp"
#include "stabatlas/exact_state.hpp"
#include "stabatlas/group.hpp"

namespace stabatlas {

/* |D^N_k>: equal superposition of all N-qubit basis states of Hamming
   weight k. The exact form is unnormalized (all amplitudes 1); the dense
   form carries the 1/sqrt(binom(N,k)) normalization. */
ExactState dicke_state_exact(int n, int k);
Eigen::VectorXcd dicke_state_dense(int n, int k);

std::uint64_t binomial(int n, int k);

/* Entanglement entropy of any ell-qubit subsystem, in nats (bits if
   requested). Closed form from the nonzero diagonal of the reduced density
   matrix: S_ell = -binom(N,k)^-1 sum_i c_i ln(c_i / binom(N,k)) with
   c_i = binom(ell,i) binom(N-ell,k-i). */
double dicke_entropy(int n, int k, int ell, bool bits = false);

/* decoupled rewrites; the first is valid for ell >= k, the second is the
   printed ell < k form whose leading coefficient is only correct when
   binom(N,ell) = binom(N,k), i.e. at ell = N - k */
double dicke_entropy_ell_ge_k(int n, int k, int ell);
double dicke_entropy_ell_lt_k(int n, int k, int ell);

/* entropy vector in the region-representative layout; every region of equal
   size carries the same value */
EntropyVector dicke_entropy_vector(int n, int k, double log_base = 2.718281828459045);

struct DickeConeReport {
    EntropyVector ev;  // nats
    bool mmi = true;   // monogamy of mutual information
    bool sqec = true;  // -S_{l-1} + 2 S_l - S_{l+1} >= 0 over 1 <= l <= ceil(N/2)
    bool shec = true;  // -l(l+1)S_{l-1} + 2(l-1)(l+1)S_l - l(l-1)S_{l+1} >= 0, 2 <= l <= N/2
};
DickeConeReport dicke_cone_report(int n, int k);

/* One weighted star graph: N unit legs plus one leg of weight w to the
   purifier. The min-cut for a size-c region follows min{c, N-1-c+w}; the
   realized entropy is the coefficient-weighted sum of min-cuts. */
struct StarGraph {
    int n = 0;           // parties (legs are n unit edges + the weighted one)
    double weight = 0;   // the purifier leg, typically negative
    int cut_size = 0;    // region size the cut is evaluated at
    double coefficient = 0;

    double min_cut() const;
};

struct StarRealization {
    std::vector<StarGraph> graphs;  // one per nonzero term of the entropy sum
    double value = 0;               // sum of coefficient * min_cut
};

/* star-graph decomposition of the symmetrized entropy; 1 <= ell <= ceil(N/2).
   For k = 1 the two graphs carry the weights w1 = ell + ln(N/(N-ell)) - (N-1)
   and w2 = ln(N/ell) - ell + 1; higher k solves one weight per term. */
StarRealization star_realization(int n, int k, int ell);

struct DickeStabilizerReport {
    std::size_t pauli_stab_order = 0;  // ray stabilizer inside the mod-phase Pauli group
    std::size_t pauli_orbit = 0;
    std::size_t c2_stab_order = 0;     // ray stabilizer inside mod-phase C2 (qubits 1, 2)
    std::size_t c2_orbit = 0;
    std::size_t hc_stab_order = 0;     // same for <H1, H2, C12, C21>
    std::size_t hc_orbit = 0;
};

/* Verifies the closed-form stabilizer subgroups on the exact state and
   returns the orbit sizes. The claimed Pauli stabilizers ((-1)^k Z on every
   qubit for all (N,k); the 2^N diagonal set at k = N; X- and Y-words at
   N = 2k) are applied exactly and must fix the state, else this throws.
   c2 and hc must be the mod-phase closures of the full two-qubit group and
   of <H1,H2,C12,C21>. */
DickeStabilizerReport dicke_stabilizers(int n, int k, GroupTable& c2, GroupTable& hc);

/* Number of distinct entanglement entropies (in bits, deduplicated to tol)
   across all entropy vectors in the <H1,H2,C12,C21> orbit. The k = 1 count
   is conjectured to be floor((5N-7)/2). */
std::size_t entanglement_cardinality(int n, int k, double tol = 1e-9);

}  // namespace stabatlas
