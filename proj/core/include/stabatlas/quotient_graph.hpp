#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "stabatlas/exact_state.hpp"
#include "stabatlas/group.hpp"

namespace stabatlas {

/* deterministic generator-labeled digraph: one out-arc per generator from
   every vertex */
struct GenGraph {
    int num_gens = 0;
    std::vector<std::uint32_t> succ;  // v * num_gens + g -> target

    std::size_t num_vertices() const {
        return num_gens ? succ.size() / static_cast<std::size_t>(num_gens) : 0;
    }
    std::uint32_t step(std::uint32_t v, int g) const { return succ[v * num_gens + g]; }
};

GenGraph cayley_graph(const GroupTable& g);

/* orbit of a state under repeated generator application, modulo global
   phase; vertices in breadth-first discovery order with the seed first */
struct StateOrbit {
    GenGraph graph;
    std::vector<ExactState> states;
};
StateOrbit orbit_of(const std::vector<NamedGenerator>& gens, const ExactState& seed);

/* orbit size under the full Pauli group (X and Z on every qubit), mod phase */
std::size_t pauli_orbit_size(const ExactState& seed);

/* quotient of the Cayley graph by a subgroup K: vertices are the left
   cosets gK, arcs are left multiplication by each generator. This is the
   graph a state orbit must match when K stabilizes the seed ray. */
GenGraph coset_graph(GroupTable& g, const CosetPartition& left_coset_partition);

/* isomorphism of rooted deterministic labeled digraphs; with fixed roots the
   label-respecting bijection is unique if it exists, so this is a single
   breadth-first pairing */
bool rooted_isomorphic(const GenGraph& a, std::uint32_t root_a, const GenGraph& b,
                       std::uint32_t root_b);

/* longest directed generator word needed from a start vertex */
int eccentricity_from(const GenGraph& g, std::uint32_t start);
/* diameter of the underlying undirected simple graph */
int undirected_diameter(const GenGraph& g);

/* Vertex contraction of the coset graph onto double cosets local\G/K: two
   orbit states merge when they differ by an element of the local subgroup.
   Arcs keep their generator labels but collapse to class level (the result
   is generally a multigraph; arcs are deduplicated as triples). */
struct ContractedOrbit {
    std::uint32_t num_classes = 0;
    std::vector<std::uint32_t> class_of_coset;  // left-coset id -> class id
    std::vector<std::uint32_t> representatives;  // one group element per class
    std::vector<std::tuple<std::uint32_t, int, std::uint32_t>> arcs;
};
ContractedOrbit contract_by_local(GroupTable& g, const std::vector<std::uint32_t>& local,
                                  const std::vector<std::uint32_t>& stabilizer);

/* dense state reached from a seed by a group element, via its stored word */
Eigen::VectorXcd evolve_by_element(const GroupTable& g, std::uint32_t e,
                                   const Eigen::VectorXcd& seed);

}  // namespace stabatlas
