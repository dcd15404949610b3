#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stabatlas/serialize.hpp"

namespace stabatlas {

/* Check matrix of a rank-n stabilizer group, signs omitted. Row i encodes a
   Pauli word with X on the qubits of xrows[i] and Z on zrows[i] (bit q-1 for
   qubit q); rows commute pairwise and are independent. */
struct CheckMatrix {
    int n = 0;
    std::vector<std::uint32_t> xrows, zrows;
};

/* rank over F2 of arbitrary 64-bit row masks, destructive on a copy */
int f2_rank(std::vector<std::uint64_t> rows);

/* Entanglement entropies in bits, one per region_reps(n) entry. For a region
   A the entropy is |A| - n + rank of the check matrix restricted to the
   columns (both X and Z) of the complement of A. */
std::vector<int> stabilizer_entropies(const CheckMatrix& cm);

/* Visits every stabilizer group modulo signs exactly once, in a canonical
   order, and returns how many were visited. Groups are parameterized by the
   reduced echelon form of the X block: pivot columns S, free X entries to
   the right of each pivot, and a symmetric matrix coupling Z onto the pivot
   columns; the pure-Z rows are then forced as the kernel of the X block. */
std::uint64_t for_each_stabilizer_group(int n, const std::function<void(const CheckMatrix&)>& fn);

/* closed forms: the group count is prod_{k=1..n} (2^k + 1); states carry an
   extra 2^n sign choices */
BigInt stabilizer_group_count(int n);
BigInt stabilizer_state_count(int n);

}  // namespace stabatlas
