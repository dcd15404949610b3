#include "stabatlas/exact_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace stabatlas {

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim, 0);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianInt(1);
    return m;
}

void ExactMatrix::canonicalize() {
    while (root2_exponent >= 2) {
        bool all_even = true;
        for (const auto& e : a)
            if (!e.is_even()) {
                all_even = false;
                break;
            }
        if (!all_even) return;
        for (auto& e : a) e = e.halved();
        root2_exponent -= 2;
    }
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (dim != o.dim) throw std::invalid_argument("matrix product: dimension mismatch");
    ExactMatrix r(dim, root2_exponent + o.root2_exponent);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            const GaussianInt& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                const GaussianInt& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    r.canonicalize();
    return r;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix r(dim, root2_exponent);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

int ExactMatrix::compare(const ExactMatrix& o) const {
    if (dim != o.dim) return dim < o.dim ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = a[i].compare(o.a[i]);
        if (c != 0) return c;
    }
    if (root2_exponent != o.root2_exponent)
        return root2_exponent < o.root2_exponent ? -1 : 1;
    return 0;
}

ExactMatrix ExactMatrix::times_phase_unit() const {
    ExactMatrix r(dim, root2_exponent + 1);
    const GaussianInt unit(1, 1);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * unit;
    r.canonicalize();
    return r;
}

ExactMatrix ExactMatrix::times_phase(int power) const {
    int p = ((power % 8) + 8) % 8;
    ExactMatrix r = *this;
    /* the squared phase unit is i, so apply i for each pair of steps */
    for (int s = 0; s < p / 2; ++s)
        for (auto& e : r.a) e = e.times_i();
    if (p % 2) r = r.times_phase_unit();
    r.canonicalize();
    return r;
}

ExactMatrix ExactMatrix::phase_canonical() const {
    ExactMatrix best = *this;
    ExactMatrix cur = *this;
    for (int j = 1; j < 8; ++j) {
        cur = cur.times_phase_unit();
        if (cur.compare(best) < 0) best = cur;
    }
    return best;
}

bool ExactMatrix::is_phase_of_identity() const {
    ExactMatrix cur = *this;
    for (int j = 0; j < 8; ++j) {
        if (cur.is_identity()) return true;
        cur = cur.times_phase_unit();
    }
    return false;
}

bool ExactMatrix::is_identity() const {
    if (root2_exponent != 0) return false;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const GaussianInt& e = at(i, j);
            if (i == j ? (e.re != 1 || e.im != 0) : !e.is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_unitary() const { return ((*this) * dagger()).is_identity(); }

bool ExactMatrix::is_local_tensor() const {
    if (dim != 4) throw std::invalid_argument("is_local_tensor: dim 4 required");
    /* Realign M[(a1,b1),(a2,b2)] -> R[(a1,a2),(b1,b2)]; M factors over the
       two qubits exactly when R has rank 1. Rank <= 1 over an integral
       domain is equivalent to all 2x2 minors vanishing. */
    auto r_entry = [&](int p, int q) -> const GaussianInt& {
        return at((p >> 1) * 2 + (q >> 1), (p & 1) * 2 + (q & 1));
    };
    for (int p = 0; p < 4; ++p)
        for (int r = p + 1; r < 4; ++r)
            for (int q = 0; q < 4; ++q)
                for (int s = q + 1; s < 4; ++s)
                    if (r_entry(p, q) * r_entry(r, s) != r_entry(p, s) * r_entry(r, q))
                        return false;
    return true;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& high, const ExactMatrix& low) {
    ExactMatrix r(high.dim * low.dim, high.root2_exponent + low.root2_exponent);
    for (int i = 0; i < high.dim; ++i)
        for (int j = 0; j < high.dim; ++j) {
            if (high.at(i, j).is_zero()) continue;
            for (int p = 0; p < low.dim; ++p)
                for (int q = 0; q < low.dim; ++q)
                    r.at(i * low.dim + p, j * low.dim + q) = high.at(i, j) * low.at(p, q);
        }
    r.canonicalize();
    return r;
}

void ExactMatrix::encode_into(std::string& out) const {
    put_varint(out, static_cast<std::uint64_t>(dim));
    put_varint(out, static_cast<std::uint64_t>(root2_exponent));
    for (const auto& e : a) {
        put_bigint(out, e.re);
        put_bigint(out, e.im);
    }
}

std::string ExactMatrix::encode() const {
    std::string out;
    encode_into(out);
    return out;
}

ExactMatrix ExactMatrix::decode(const std::string& in, std::size_t& pos) {
    int dim = static_cast<int>(get_varint(in, pos));
    int k = static_cast<int>(get_varint(in, pos));
    if (dim <= 0 || dim > 1 << 15) throw std::runtime_error("matrix decode: bad dimension");
    ExactMatrix m(dim, k);
    for (auto& e : m.a) {
        e.re = get_bigint(in, pos);
        e.im = get_bigint(in, pos);
    }
    return m;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
    Eigen::MatrixXcd m(dim, dim);
    double scale = std::pow(2.0, -0.5 * root2_exponent);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const GaussianInt& e = at(i, j);
            m(i, j) = std::complex<double>(static_cast<double>(e.re),
                                           static_cast<double>(e.im)) *
                      scale;
        }
    return m;
}

}  // namespace stabatlas
