#include "stabatlas/quotient_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "stabatlas/dense_state.hpp"

namespace stabatlas {

GenGraph cayley_graph(const GroupTable& g) {
    GenGraph out;
    out.num_gens = g.num_gens();
    out.succ = g.succ;
    return out;
}

StateOrbit orbit_of(const std::vector<NamedGenerator>& gens, const ExactState& seed) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    StateOrbit orbit;
    orbit.graph.num_gens = static_cast<int>(gens.size());

    ExactState start = seed;
    start.canonicalize();
    start = start.phase_canonical();
    std::unordered_map<std::string, std::uint32_t> index;
    index.emplace(start.encode(), 0);
    orbit.states.push_back(std::move(start));

    for (std::uint32_t v = 0; v < orbit.states.size(); ++v) {
        for (const auto& gen : gens) {
            ExactState next = orbit.states[v];
            next.apply_pair(gen.matrix);
            next = next.phase_canonical();
            std::string key = next.encode();
            auto [it, inserted] = index.emplace(std::move(key), orbit.states.size());
            if (inserted) orbit.states.push_back(std::move(next));
            orbit.graph.succ.push_back(it->second);
        }
    }
    return orbit;
}

std::size_t pauli_orbit_size(const ExactState& seed) {
    ExactState start = seed;
    start.canonicalize();
    start = start.phase_canonical();
    std::unordered_map<std::string, std::uint32_t> index;
    index.emplace(start.encode(), 0);
    std::vector<ExactState> states{std::move(start)};
    const int n = states.front().num_qubits;
    for (std::uint32_t v = 0; v < states.size(); ++v) {
        for (int q = 1; q <= n; ++q) {
            for (int which = 0; which < 2; ++which) {
                ExactState next = states[v];
                if (which == 0)
                    next.apply_x(q);
                else
                    next.apply_z(q);
                next = next.phase_canonical();
                std::string key = next.encode();
                if (index.emplace(std::move(key), states.size()).second)
                    states.push_back(std::move(next));
            }
        }
    }
    return states.size();
}

GenGraph coset_graph(GroupTable& g, const CosetPartition& part) {
    GenGraph out;
    out.num_gens = g.num_gens();
    /* left multiplication by generator gi maps the coset of x to the coset
       of gi * x; evaluate on one representative per class */
    std::vector<std::vector<std::uint32_t>> lperm;
    for (int gi = 0; gi < g.num_gens(); ++gi)
        lperm.push_back(g.left_perm(g.right_step(0, gi)));
    out.succ.resize(static_cast<std::size_t>(part.num_classes) * g.num_gens());
    for (std::uint32_t c = 0; c < part.num_classes; ++c) {
        std::uint32_t rep = part.representatives[c];
        for (int gi = 0; gi < g.num_gens(); ++gi)
            out.succ[c * g.num_gens() + gi] = part.class_of[lperm[gi][rep]];
    }
    return out;
}

bool rooted_isomorphic(const GenGraph& a, std::uint32_t root_a, const GenGraph& b,
                       std::uint32_t root_b) {
    if (a.num_gens != b.num_gens || a.num_vertices() != b.num_vertices()) return false;
    const std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> fwd(a.num_vertices(), unset), rev(b.num_vertices(), unset);
    std::deque<std::uint32_t> queue;
    fwd[root_a] = root_b;
    rev[root_b] = root_a;
    queue.push_back(root_a);
    std::size_t paired = 1;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        std::uint32_t v = fwd[u];
        for (int gi = 0; gi < a.num_gens; ++gi) {
            std::uint32_t un = a.step(u, gi), vn = b.step(v, gi);
            if (fwd[un] == unset && rev[vn] == unset) {
                fwd[un] = vn;
                rev[vn] = un;
                queue.push_back(un);
                ++paired;
            } else if (fwd[un] != vn) {
                return false;
            }
        }
    }
    return paired == a.num_vertices();  // both graphs reachable from the roots
}

int eccentricity_from(const GenGraph& g, std::uint32_t start) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<std::uint32_t> queue{start};
    dist[start] = 0;
    int ecc = 0;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (int gi = 0; gi < g.num_gens; ++gi) {
            std::uint32_t v = g.step(u, gi);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                ecc = std::max(ecc, dist[v]);
                queue.push_back(v);
            }
        }
    }
    for (int d : dist)
        if (d < 0) throw std::runtime_error("graph is not reachable from the start vertex");
    return ecc;
}

int undirected_diameter(const GenGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::set<std::uint32_t>> adj(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (int gi = 0; gi < g.num_gens; ++gi) {
            std::uint32_t w = g.step(v, gi);
            if (w != v) {
                adj[v].insert(w);
                adj[w].insert(v);
            }
        }
    int diam = 0;
    std::vector<int> dist(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<std::uint32_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    diam = std::max(diam, dist[v]);
                    queue.push_back(v);
                }
        }
        for (int d : dist)
            if (d < 0) throw std::runtime_error("graph is disconnected");
    }
    return diam;
}

ContractedOrbit contract_by_local(GroupTable& g, const std::vector<std::uint32_t>& local,
                                  const std::vector<std::uint32_t>& stabilizer) {
    CosetPartition lc = left_cosets(g, stabilizer);
    CosetPartition dc = double_cosets(g, local, stabilizer);

    ContractedOrbit out;
    out.num_classes = dc.num_classes;
    out.representatives = dc.representatives;
    out.class_of_coset.resize(lc.num_classes);
    for (std::uint32_t c = 0; c < lc.num_classes; ++c)
        out.class_of_coset[c] = dc.class_of[lc.representatives[c]];

    GenGraph cg = coset_graph(g, lc);
    std::set<std::tuple<std::uint32_t, int, std::uint32_t>> arcs;
    for (std::uint32_t v = 0; v < lc.num_classes; ++v)
        for (int gi = 0; gi < cg.num_gens; ++gi)
            arcs.emplace(out.class_of_coset[v], gi, out.class_of_coset[cg.step(v, gi)]);
    out.arcs.assign(arcs.begin(), arcs.end());
    return out;
}

Eigen::VectorXcd evolve_by_element(const GroupTable& g, std::uint32_t e,
                                   const Eigen::VectorXcd& seed) {
    /* the word spells the element as a left-to-right product of generators,
       so the rightmost factor hits the ket first */
    Eigen::VectorXcd psi = seed;
    std::vector<int> w = g.word_of(e);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Eigen::Matrix4cd u = g.generators[*it].matrix.to_complex();
        apply_pair_gate(psi, u);
    }
    return psi;
}

}  // namespace stabatlas
