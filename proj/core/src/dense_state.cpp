#include "stabatlas/dense_state.hpp"

#include <stdexcept>
#include <string>

namespace stabatlas {

Eigen::VectorXcd basis_vector(int num_qubits, std::uint32_t index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::int64_t{1} << num_qubits);
    v[index] = 1.0;
    return v;
}

void apply_pair_gate(Eigen::VectorXcd& psi, const Eigen::Matrix4cd& u) {
    if (psi.size() % 4 != 0) throw std::invalid_argument("state needs at least two qubits");
    for (std::int64_t base = 0; base < psi.size(); base += 4)
        psi.segment<4>(base) = u * psi.segment<4>(base);
}

bool same_ray(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, double tol) {
    if (a.size() != b.size()) return false;
    double an = a.norm(), bn = b.norm();
    if (an < tol || bn < tol) return false;
    return std::abs(std::abs(a.dot(b)) / (an * bn) - 1.0) < tol;
}

std::vector<std::uint32_t> ray_stabilizer(GroupTable& g, const Eigen::VectorXcd& psi,
                                          double tol) {
    const double norm2 = psi.squaredNorm();
    std::vector<std::uint32_t> stab;
    for (std::uint32_t e = 0; e < g.order(); ++e) {
        Eigen::Matrix4cd u = g.elements[e].to_complex();
        Eigen::VectorXcd w = psi;
        apply_pair_gate(w, u);
        double overlap = std::abs(psi.dot(w)) / norm2;
        if (overlap >= 1.0 - tol) {
            stab.push_back(e);
        } else if (overlap >= 1.0 - 10.0 * tol) {
            throw std::runtime_error(
                "stabilizer membership is numerically ambiguous for element " +
                std::to_string(e) + " (overlap " + std::to_string(overlap) + ")");
        }
    }
    assert_subgroup(g, stab, "ray stabilizer");
    return stab;
}

}  // namespace stabatlas
