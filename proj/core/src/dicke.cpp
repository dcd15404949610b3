#include "stabatlas/dicke.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabatlas/dense_state.hpp"
#include "stabatlas/quotient_graph.hpp"

namespace stabatlas {

namespace {

void check_spec(int n, int k) {
    if (n < 1 || n > 20 || k < 1 || k > n)
        throw std::invalid_argument("need 0 < k <= N with N in [1, 20]");
}

/* c_i in the entropy sum: ways to split weight k as i inside the region and
   k - i outside */
std::uint64_t split_count(int n, int k, int ell, int i) {
    return binomial(ell, i) * binomial(n - ell, k - i);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

ExactState dicke_state_exact(int n, int k) {
    check_spec(n, k);
    ExactState s(n, 0);
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        if (std::popcount(x) == k) s.amp[x] = GaussianInt(1);
    return s;
}

Eigen::VectorXcd dicke_state_dense(int n, int k) {
    check_spec(n, k);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        if (std::popcount(x) == k) v[x] = a;
    return v;
}

double dicke_entropy(int n, int k, int ell, bool bits) {
    check_spec(n, k);
    if (ell < 0 || ell > n) throw std::invalid_argument("subsystem size out of range");
    const double total = static_cast<double>(binomial(n, k));
    double s = 0.0;
    for (int i = 0; i <= std::min(ell, k); ++i) {
        const std::uint64_t c = split_count(n, k, ell, i);
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        s -= p * std::log(p);
    }
    return bits ? s / std::log(2.0) : s;
}

double dicke_entropy_ell_ge_k(int n, int k, int ell) {
    check_spec(n, k);
    if (ell < k || ell > n) throw std::invalid_argument("rewrite requires k <= ell <= N");
    const double total = static_cast<double>(binomial(n, k));
    double s = std::log(total);
    for (int i = 0; i <= k; ++i) {
        const std::uint64_t c = split_count(n, k, ell, i);
        if (c) s -= static_cast<double>(c) / total * std::log(static_cast<double>(c));
    }
    return s;
}

double dicke_entropy_ell_lt_k(int n, int k, int ell) {
    check_spec(n, k);
    if (ell >= k || ell < 0) throw std::invalid_argument("rewrite requires ell < k");
    const double total = static_cast<double>(binomial(n, k));
    /* leading factor as printed: k!(N-k)!/(ell!(N-ell)!) = binom(N,ell)/binom(N,k) */
    double s = static_cast<double>(binomial(n, ell)) / total * std::log(total);
    for (int i = 0; i <= ell; ++i) {
        const std::uint64_t c = split_count(n, k, ell, i);
        if (c) s -= static_cast<double>(c) / total * std::log(static_cast<double>(c));
    }
    return s;
}

EntropyVector dicke_entropy_vector(int n, int k, double log_base) {
    check_spec(n, k);
    const double scale = std::log(log_base);
    std::vector<double> by_size(n + 1, 0.0);
    for (int ell = 1; ell < n; ++ell) by_size[ell] = dicke_entropy(n, k, ell) / scale;
    EntropyVector ev;
    ev.n = n;
    for (std::uint32_t m : region_reps(n)) ev.s.push_back(by_size[std::popcount(m)]);
    return ev;
}

DickeConeReport dicke_cone_report(int n, int k) {
    check_spec(n, k);
    DickeConeReport rep;
    rep.ev = dicke_entropy_vector(n, k);
    rep.mmi = check_inequalities(rep.ev).monogamy;
    const double tol = 1e-9;
    std::vector<double> s(n + 2, 0.0);
    for (int ell = 1; ell < n; ++ell) s[ell] = dicke_entropy(n, k, ell, false);
    for (int ell = 1; ell <= (n + 1) / 2; ++ell)
        if (-s[ell - 1] + 2.0 * s[ell] - s[ell + 1] < -tol) rep.sqec = false;
    for (int ell = 2; ell <= n / 2; ++ell)
        if (-static_cast<double>(ell) * (ell + 1) * s[ell - 1] +
                2.0 * (ell - 1) * (ell + 1) * s[ell] -
                static_cast<double>(ell) * (ell - 1) * s[ell + 1] <
            -tol)
            rep.shec = false;
    return rep;
}

double StarGraph::min_cut() const {
    return std::min(static_cast<double>(cut_size), n - 1 - cut_size + weight);
}

StarRealization star_realization(int n, int k, int ell) {
    check_spec(n, k);
    if (ell < 1 || ell > (n + 1) / 2)
        throw std::invalid_argument("star realization needs 1 <= ell <= ceil(N/2)");
    const double total = static_cast<double>(binomial(n, k));
    StarRealization out;
    for (int i = 0; i <= std::min(ell, k); ++i) {
        const std::uint64_t c = split_count(n, k, ell, i);
        if (c == 0) continue;  // empty cut terms carry no graph
        const double value = std::log(total / static_cast<double>(c));
        StarGraph g;
        g.n = n;
        g.coefficient = static_cast<double>(c) / total;
        /* choose the cut side and solve min{c, N-1-c+w} = value for w. For
           k = 1 the sides are fixed as in the two-graph construction; higher
           k keeps the region side whenever the value fits on it. */
        bool region_side = (k == 1) ? (i == 0) : (value <= static_cast<double>(ell) + 1e-12);
        if (region_side && value > static_cast<double>(ell) + 1e-12) region_side = false;
        if (!region_side && value > static_cast<double>(n - ell) + 1e-12)
            throw std::logic_error("cut value fits neither side of the star");
        g.cut_size = region_side ? ell : n - ell;
        g.weight = value + g.cut_size + 1 - n;
        out.graphs.push_back(g);
        out.value += g.coefficient * g.min_cut();
    }
    return out;
}

namespace {

/* applies (-1)^k Z^N and checks the state is fixed exactly */
void check_global_z(const ExactState& dicke, int n, int k) {
    ExactState t = dicke;
    for (int q = 1; q <= n; ++q) t.apply_z(q);
    if (k % 2 == 1)
        for (auto& a : t.amp) a = -a;
    if (!(t == dicke)) throw std::logic_error("global Z word fails to fix the state");
}

void check_weight_n_words(const ExactState& dicke, int n) {
    /* every (-1)^|T| Z_T for the all-ones state */
    for (std::uint32_t t = 0; t < (1u << n); ++t) {
        ExactState w = dicke;
        for (int q = 1; q <= n; ++q)
            if ((t >> (q - 1)) & 1u) w.apply_z(q);
        if (std::popcount(t) % 2 == 1)
            for (auto& a : w.amp) a = -a;
        if (!(w == dicke)) throw std::logic_error("diagonal word fails to fix |1...1>");
    }
}

void check_half_weight_words(const ExactState& dicke, int n) {
    ExactState x = dicke;
    for (int q = 1; q <= n; ++q) x.apply_x(q);
    if (!(x == dicke)) throw std::logic_error("global X word fails to fix the state");
    /* Y^N = i^N X^N Z^N acting qubit-wise; for N = 2k the phases cancel */
    ExactState y = dicke;
    for (int q = 1; q <= n; ++q) {
        y.apply_z(q);
        y.apply_x(q);
        for (auto& a : y.amp) a = a.times_i();
    }
    if (!(y == dicke)) throw std::logic_error("global Y word fails to fix the state");
}

}  // namespace

DickeStabilizerReport dicke_stabilizers(int n, int k, GroupTable& c2, GroupTable& hc) {
    check_spec(n, k);
    if (n < 2) throw std::invalid_argument("two-qubit group action needs N >= 2");
    if (!c2.mod_phase || !hc.mod_phase)
        throw std::invalid_argument("orbit counting expects the mod-phase closures");
    ExactState dicke = dicke_state_exact(n, k);

    DickeStabilizerReport rep;
    check_global_z(dicke, n, k);
    std::size_t claimed_pauli = 2;
    if (k == n) {
        check_weight_n_words(dicke, n);
        claimed_pauli = std::size_t{1} << n;
    } else if (n == 2 * k) {
        check_half_weight_words(dicke, n);
        claimed_pauli = 4;
    }
    rep.pauli_orbit = pauli_orbit_size(dicke);
    const std::size_t pauli_order = std::size_t{1} << (2 * n);  // mod phase
    if (pauli_order % rep.pauli_orbit != 0)
        throw std::logic_error("Pauli orbit does not divide the group order");
    rep.pauli_stab_order = pauli_order / rep.pauli_orbit;
    if (rep.pauli_stab_order != claimed_pauli)
        throw std::logic_error("Pauli stabilizer order disagrees with the closed form");

    if (k == 1 && n >= 3) {
        /* the listed two-qubit words: the controlled phase on the pair and
           the pair swap, which fix any state with no doubly-excited pair
           component and any exchange-symmetric state respectively */
        ExactMatrix cz = gen_matrix(Gen::H2) * gen_matrix(Gen::C12) * gen_matrix(Gen::H2);
        ExactMatrix swap =
            gen_matrix(Gen::C12) * gen_matrix(Gen::C21) * gen_matrix(Gen::C12);
        for (const ExactMatrix& m : {cz, swap, cz * swap}) {
            ExactState t = dicke;
            t.apply_pair(m);
            if (!(t == dicke))
                throw std::logic_error("listed two-qubit stabilizer fails to fix the state");
        }
    }

    Eigen::VectorXcd psi = dicke.to_complex();
    rep.c2_stab_order = ray_stabilizer(c2, psi).size();
    rep.hc_stab_order = ray_stabilizer(hc, psi).size();
    rep.c2_orbit = c2.order() / rep.c2_stab_order;
    rep.hc_orbit = hc.order() / rep.hc_stab_order;
    return rep;
}

std::size_t entanglement_cardinality(int n, int k, double tol) {
    check_spec(n, k);
    if (n < 2) return 0;  // a single qubit carries no entanglement
    auto gens = generators_from({Gen::H1, Gen::H2, Gen::C12, Gen::C21});
    StateOrbit orbit = orbit_of(gens, dicke_state_exact(n, k));
    std::vector<double> values;
    for (const ExactState& s : orbit.states) {
        EntropyVector ev = entropy_vector_of(s.to_complex(), n, 2.0);
        for (double v : ev.s)
            if (v > tol) values.push_back(v);  // zeros are absence of entanglement
    }
    std::sort(values.begin(), values.end());
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (i == 0 || values[i] - values[i - 1] > tol) ++distinct;
    return distinct;
}

}  // namespace stabatlas
