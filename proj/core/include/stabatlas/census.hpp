#pragma once

#include <vector>

#include "stabatlas/entropy.hpp"
#include "stabatlas/tableau.hpp"

namespace stabatlas {

struct CensusRow {
    std::vector<int> s;  // entropy vector in bits, per region_reps(n)
    BigInt states;       // number of stabilizer states realizing it
    InequalityReport inequalities;
};

struct Census {
    int n = 0;
    BigInt total_states;
    std::vector<CensusRow> rows;  // sorted lexicographically by entropy vector

    std::size_t num_vectors() const { return rows.size(); }
    std::size_t num_non_holographic() const;
    BigInt states_non_holographic() const;
    const CensusRow* find(const std::vector<int>& s) const;
};

/* Tallies the entropy vector of every n-qubit stabilizer state. Entropies
   are blind to the 2^n sign choices of a stabilizer group, so each group is
   processed once and weighted by 2^n; the group enumeration count is checked
   against the closed-form product on the fly. */
Census stabilizer_census(int n);

}  // namespace stabatlas
