#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabatlas/exact_matrix.hpp"
#include "stabatlas/gates.hpp"

namespace stabatlas {

struct NamedGenerator {
    std::string name;
    ExactMatrix matrix;  // 4x4, acting on the two-qubit support
};

std::vector<NamedGenerator> generators_from(const std::vector<Gen>& gens);

/* Closure of a generating set under multiplication, via breadth-first search
   from the identity. Elements are stored in discovery order (identity first);
   words are shortest products of generators reaching each element, so the
   maximum word length is the Cayley graph diameter (the word metric is
   left-invariant, hence vertex-transitive). With mod_phase set, elements are
   equivalence classes under the order-8 central phase, represented by their
   lexicographically minimal phase multiple. */
struct GroupTable {
    bool mod_phase = false;
    std::vector<NamedGenerator> generators;
    std::vector<ExactMatrix> elements;
    /* right product table: succ[e*num_gens + g] = index of elements[e] * gen g */
    std::vector<std::uint32_t> succ;
    /* BFS tree: parent element and generator used to reach each element */
    std::vector<std::int32_t> parent;
    std::vector<std::int8_t> parent_gen;
    int diameter = 0;

    std::size_t order() const { return elements.size(); }
    int num_gens() const { return static_cast<int>(generators.size()); }

    int find(const ExactMatrix& m) const;  // -1 if not an element
    bool contains(const ExactMatrix& m) const { return find(m) >= 0; }

    std::uint32_t right_step(std::uint32_t e, int g) const { return succ[e * generators.size() + g]; }

    /* shortest generator word of an element, reconstructed from the BFS tree */
    std::vector<int> word_of(std::uint32_t e) const;

    /* index of elements[a] * elements[b], via the right product table */
    std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const;

    /* permutation x -> index(elements[h] * elements[x]); built from the word
       of h and the cached per-generator left tables */
    std::vector<std::uint32_t> left_perm(std::uint32_t h);
    /* permutation x -> index(elements[x] * elements[k]) */
    std::vector<std::uint32_t> right_perm(std::uint32_t k) const;

    std::string encode() const;
    static GroupTable decode(const std::string& in);

  private:
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> left_gen_table_;  // built on first use
    void build_left_gen_table();
    friend GroupTable close_subgroup(const std::vector<NamedGenerator>&, bool, std::size_t);
};

/* cap guards runaway closures; the full two-qubit Clifford group has 92160
   elements with phase, so the default leaves ample room */
GroupTable close_subgroup(const std::vector<NamedGenerator>& gens, bool mod_phase,
                          std::size_t cap = 200000);

/* |G intersect <omega>|: how much the order shrinks when phase is dropped */
int phase_reduction_factor(const GroupTable& with_phase);

struct CosetPartition {
    std::uint32_t num_classes = 0;
    std::vector<std::uint32_t> class_of;          // element index -> class id
    std::vector<std::uint32_t> representatives;   // smallest element index per class
    std::vector<std::uint32_t> class_sizes;
};

/* left cosets g*K; K is a list of element indices forming a subgroup */
CosetPartition left_cosets(GroupTable& g, const std::vector<std::uint32_t>& subgroup_k);

/* double cosets H\G/K. The class count is recomputed independently through
   the fixed-pair orbit-counting sum (1/|H||K|) sum_(h,k) |{g : h g k = g}|
   and must agree, else this throws. */
CosetPartition double_cosets(GroupTable& g, const std::vector<std::uint32_t>& subgroup_h,
                             const std::vector<std::uint32_t>& subgroup_k);

/* all elements that factor over the two qubits; checked to form a subgroup */
std::vector<std::uint32_t> local_subgroup(GroupTable& g);

/* verifies every pairwise product stays inside; throws otherwise */
void assert_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& subset,
                     const std::string& what);

/* exact order formulas */
BigInt clifford_group_order(int n, bool mod_phase);
BigInt local_clifford_order(int n, bool mod_phase);
/* upper bound on entropy-vector diversity: index of the local subgroup */
BigInt entropic_diversity_bound(int n);

}  // namespace stabatlas
