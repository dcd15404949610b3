#include "stabatlas/exact_state.hpp"

#include <cmath>
#include <stdexcept>

namespace stabatlas {

ExactState ExactState::from_integers(int n, const std::vector<long>& values) {
    if (values.size() != (std::size_t(1) << n))
        throw std::invalid_argument("from_integers: wrong amplitude count");
    ExactState s(n, 0);
    for (std::size_t i = 0; i < values.size(); ++i) s.amp[i] = GaussianInt(values[i]);
    s.canonicalize();
    return s;
}

ExactState ExactState::basis_state(int n, unsigned long index) {
    ExactState s(n, 0);
    s.amp.at(index) = GaussianInt(1);
    return s;
}

void ExactState::canonicalize() {
    while (root2_exponent >= 2) {
        bool all_even = true;
        for (const auto& a : amp)
            if (!a.is_even()) {
                all_even = false;
                break;
            }
        if (!all_even) return;
        for (auto& a : amp) a = a.halved();
        root2_exponent -= 2;
    }
}

void ExactState::apply_h(int qubit) {
    const std::size_t bit = std::size_t(1) << (qubit - 1);
    for (std::size_t x = 0; x < amp.size(); ++x) {
        if (x & bit) continue;
        GaussianInt lo = amp[x];
        GaussianInt hi = amp[x | bit];
        amp[x] = lo + hi;
        amp[x | bit] = lo - hi;
    }
    ++root2_exponent;
    canonicalize();
}

void ExactState::apply_p(int qubit) {
    const std::size_t bit = std::size_t(1) << (qubit - 1);
    for (std::size_t x = 0; x < amp.size(); ++x)
        if (x & bit) amp[x] = amp[x].times_i();
}

void ExactState::apply_cnot(int control, int target) {
    const std::size_t cbit = std::size_t(1) << (control - 1);
    const std::size_t tbit = std::size_t(1) << (target - 1);
    for (std::size_t x = 0; x < amp.size(); ++x)
        if ((x & cbit) && !(x & tbit)) std::swap(amp[x], amp[x | tbit]);
}

void ExactState::apply_x(int qubit) {
    const std::size_t bit = std::size_t(1) << (qubit - 1);
    for (std::size_t x = 0; x < amp.size(); ++x)
        if (!(x & bit)) std::swap(amp[x], amp[x | bit]);
}

void ExactState::apply_z(int qubit) {
    const std::size_t bit = std::size_t(1) << (qubit - 1);
    for (std::size_t x = 0; x < amp.size(); ++x)
        if (x & bit) amp[x] = -amp[x];
}

void ExactState::apply_gen(Gen g) {
    switch (g) {
        case Gen::H1: apply_h(1); return;
        case Gen::H2: apply_h(2); return;
        case Gen::P1: apply_p(1); return;
        case Gen::P2: apply_p(2); return;
        case Gen::C12: apply_cnot(1, 2); return;
        case Gen::C21: apply_cnot(2, 1); return;
    }
}

void ExactState::apply_pair(const ExactMatrix& m) {
    if (m.dim != 4) throw std::invalid_argument("apply_pair: operator must be 4x4");
    if (num_qubits < 2) throw std::invalid_argument("apply_pair: need at least two qubits");
    for (std::size_t base = 0; base < amp.size(); base += 4) {
        GaussianInt block[4];
        for (int r = 0; r < 4; ++r) {
            GaussianInt acc;
            for (int c = 0; c < 4; ++c) {
                const GaussianInt& e = m.at(r, c);
                if (!e.is_zero()) acc += e * amp[base + c];
            }
            block[r] = std::move(acc);
        }
        for (int r = 0; r < 4; ++r) amp[base + r] = std::move(block[r]);
    }
    root2_exponent += m.root2_exponent;
    canonicalize();
}

int ExactState::compare(const ExactState& o) const {
    if (num_qubits != o.num_qubits) return num_qubits < o.num_qubits ? -1 : 1;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        int c = amp[i].compare(o.amp[i]);
        if (c != 0) return c;
    }
    if (root2_exponent != o.root2_exponent)
        return root2_exponent < o.root2_exponent ? -1 : 1;
    return 0;
}

ExactState ExactState::phase_canonical() const {
    ExactState best = *this;
    ExactState cur = *this;
    const GaussianInt unit(1, 1);
    for (int j = 1; j < 8; ++j) {
        for (auto& a : cur.amp) a = a * unit;
        ++cur.root2_exponent;
        cur.canonicalize();
        if (cur.compare(best) < 0) best = cur;
    }
    return best;
}

std::string ExactState::encode() const {
    std::string out;
    put_varint(out, static_cast<std::uint64_t>(num_qubits));
    put_varint(out, static_cast<std::uint64_t>(root2_exponent));
    for (const auto& a : amp) {
        put_bigint(out, a.re);
        put_bigint(out, a.im);
    }
    return out;
}

Eigen::VectorXcd ExactState::to_complex() const {
    Eigen::VectorXcd v(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i)
        v[i] = std::complex<double>(static_cast<double>(amp[i].re),
                                    static_cast<double>(amp[i].im));
    double n = v.norm();
    if (n == 0.0) throw std::runtime_error("to_complex: zero state");
    return v / n;
}

}  // namespace stabatlas
