#pragma once

#include <string>
#include <vector>

#include "stabatlas/exact_matrix.hpp"

namespace stabatlas {

/* The six standard generators of the two-qubit Clifford group. Single-qubit
   gates act on qubit 1 or 2; the CNOTs are labeled control,target. The enum
   order is the canonical generator order used everywhere (BFS, edge labels,
   serialization). */
enum class Gen : int { H1 = 0, H2 = 1, P1 = 2, P2 = 3, C12 = 4, C21 = 5 };

inline constexpr int kNumGens = 6;
extern const Gen kAllGens[kNumGens];

const char* gen_name(Gen g);
Gen gen_from_name(const std::string& name);

/* 2x2 matrices for the local gates */
ExactMatrix hadamard_2x2();
ExactMatrix phase_2x2();

/* generators embedded on the two-qubit support; basis index is b1 + 2*b2
   with b1 the bit of qubit 1 (little-endian) */
const ExactMatrix& gen_matrix(Gen g);

using Word = std::vector<Gen>;

/* product of the word's gates in written order: word[0] * word[1] * ... */
ExactMatrix eval_word(const Word& w);
std::string word_to_string(const Word& w);

/* omega = (H P)^3 = exp(i pi/4) * identity, the central phase of order 8 */
ExactMatrix omega_4x4();

/* One operator identity of the catalog: eval(lhs) == omega^power * eval(rhs).
   An empty word denotes the identity operator. */
struct RelationEquality {
    Word lhs;
    Word rhs;
    int omega_power = 0;
};

struct Relation {
    std::string name;
    std::vector<RelationEquality> equalities;
};

/* the sixteen identities of the operator catalog, each instantiated for
   every qubit ordering it involves */
const std::vector<Relation>& relation_catalog();

/* exact check of one identity; returns false on any failing equality */
bool verify_relation(const Relation& r);

}  // namespace stabatlas
