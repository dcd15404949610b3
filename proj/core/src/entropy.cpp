#include "stabatlas/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace stabatlas {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

/* lexicographic order on the sorted element lists of two equal-size masks */
bool element_list_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        std::uint32_t la = a & -a, lb = b & -b;
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return false;
}

}  // namespace

std::uint32_t region_rep(std::uint32_t mask, int n) {
    const std::uint32_t full = (1u << n) - 1;
    if (mask == 0 || mask == full) return mask;
    std::uint32_t comp = full ^ mask;
    int pm = popcount(mask), pc = popcount(comp);
    if (pm != pc) return pm < pc ? mask : comp;
    return (mask & 1u) ? mask : comp;
}

std::vector<std::uint32_t> region_reps(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("unsupported qubit count");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t m = 1; m < full; ++m)
        if (region_rep(m, n) == m) reps.push_back(m);
    std::sort(reps.begin(), reps.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return element_list_less(a, b);
    });
    return reps;
}

std::string region_name(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int q = 0; mask; ++q, mask >>= 1)
        if (mask & 1u) {
            if (!first) out += ",";
            out += std::to_string(q + 1);
            first = false;
        }
    return out + "}";
}

std::vector<double> expand_to_all_subsets(const EntropyVector& ev) {
    const int n = ev.n;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> reps = region_reps(n);
    if (ev.s.size() != reps.size())
        throw std::invalid_argument("entropy vector length does not match region list");
    std::unordered_map<std::uint32_t, double> by_rep;
    for (std::size_t i = 0; i < reps.size(); ++i) by_rep[reps[i]] = ev.s[i];
    std::vector<double> all(full + 1, 0.0);
    for (std::uint32_t m = 1; m < full; ++m) all[m] = by_rep.at(region_rep(m, n));
    return all;
}

InequalityReport check_inequalities(const EntropyVector& ev, double tol) {
    const std::uint32_t full = (1u << ev.n) - 1;
    std::vector<double> s = expand_to_all_subsets(ev);
    InequalityReport rep;
    for (std::uint32_t a = 1; a <= full; ++a) {
        std::uint32_t rest = full ^ a;
        for (std::uint32_t b = rest; b; b = (b - 1) & rest) {
            if (s[a | b] > s[a] + s[b] + tol) rep.subadditivity = false;
            if (s[a | b] < std::abs(s[a] - s[b]) - tol) rep.araki_lieb = false;
            std::uint32_t rest2 = rest ^ b;
            for (std::uint32_t c = rest2; c; c = (c - 1) & rest2) {
                if (s[a | b] + s[b | c] + tol < s[a | b | c] + s[b])
                    rep.strong_subadditivity = false;
                if (a < b && b < c &&
                    s[a | b] + s[b | c] + s[a | c] + tol <
                        s[a] + s[b] + s[c] + s[a | b | c])
                    rep.monogamy = false;
            }
        }
    }
    return rep;
}

double region_entropy(const Eigen::VectorXcd& psi, int n, std::uint32_t mask,
                      double log_base) {
    const std::uint32_t full = (1u << n) - 1;
    if (mask == 0 || mask == full) return 0.0;
    /* diagonalize the reduced density matrix on the smaller side */
    if (popcount(full ^ mask) < popcount(mask)) mask = full ^ mask;
    std::vector<int> abits, bbits;
    for (int q = 0; q < n; ++q) ((mask >> q) & 1u ? abits : bbits).push_back(q);
    const std::size_t da = std::size_t{1} << abits.size();
    const std::size_t db = std::size_t{1} << bbits.size();
    Eigen::MatrixXcd m(da, db);
    for (std::uint32_t idx = 0; idx <= full; ++idx) {
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < abits.size(); ++i) a |= ((idx >> abits[i]) & 1u) << i;
        for (std::size_t i = 0; i < bbits.size(); ++i) b |= ((idx >> bbits[i]) & 1u) << i;
        m(a, b) = psi[idx];
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (double p : es.eigenvalues())
        if (p > 1e-15) h -= p * std::log(p);
    return h / std::log(log_base);
}

EntropyVector entropy_vector_of(const Eigen::VectorXcd& psi, int n, double log_base) {
    EntropyVector ev;
    ev.n = n;
    for (std::uint32_t m : region_reps(n)) ev.s.push_back(region_entropy(psi, n, m, log_base));
    return ev;
}

}  // namespace stabatlas
