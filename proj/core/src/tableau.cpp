#include "stabatlas/tableau.hpp"

#include <bit>
#include <stdexcept>

#include "stabatlas/entropy.hpp"

namespace stabatlas {

int f2_rank(std::vector<std::uint64_t> rows) {
    std::uint64_t basis[64] = {};
    int rank = 0;
    for (std::uint64_t x : rows) {
        while (x) {
            int h = std::bit_width(x) - 1;
            if (!basis[h]) {
                basis[h] = x;
                ++rank;
                break;
            }
            x ^= basis[h];
        }
    }
    return rank;
}

std::vector<int> stabilizer_entropies(const CheckMatrix& cm) {
    const int n = cm.n;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> out;
    std::vector<std::uint64_t> restricted(n);
    for (std::uint32_t rep : region_reps(n)) {
        std::uint32_t comp = full ^ rep;
        for (int i = 0; i < n; ++i)
            restricted[i] = (cm.xrows[i] & comp) |
                            (static_cast<std::uint64_t>(cm.zrows[i] & comp) << n);
        out.push_back(std::popcount(rep) - n + f2_rank(restricted));
    }
    return out;
}

std::uint64_t for_each_stabilizer_group(int n,
                                        const std::function<void(const CheckMatrix&)>& fn) {
    if (n < 1 || n > 16) throw std::invalid_argument("unsupported qubit count");
    std::uint64_t count = 0;
    CheckMatrix cm;
    cm.n = n;
    cm.xrows.assign(n, 0);
    cm.zrows.assign(n, 0);

    for (int r = 0; r <= n; ++r) {
        std::vector<int> pivots(r);
        for (int i = 0; i < r; ++i) pivots[i] = i;
        while (true) {
            std::vector<int> free_cols;
            {
                std::uint32_t pm = 0;
                for (int s : pivots) pm |= 1u << s;
                for (int c = 0; c < n; ++c)
                    if (!((pm >> c) & 1u)) free_cols.push_back(c);
            }
            /* free X slots: row i may have entries at free columns right of
               its pivot (echelon form forces zeros to the left) */
            std::vector<std::pair<int, int>> slots;  // (row, column)
            for (int i = 0; i < r; ++i)
                for (int f : free_cols)
                    if (f > pivots[i]) slots.emplace_back(i, f);

            const std::uint64_t na = std::uint64_t{1} << slots.size();
            const std::uint64_t nb = std::uint64_t{1} << (r * (r + 1) / 2);
            for (std::uint64_t a = 0; a < na; ++a) {
                for (int i = 0; i < r; ++i) cm.xrows[i] = 1u << pivots[i];
                for (std::size_t t = 0; t < slots.size(); ++t)
                    if ((a >> t) & 1u) cm.xrows[slots[t].first] |= 1u << slots[t].second;

                /* pure-Z rows span the kernel of the X block, one per free
                   column; they do not depend on the symmetric coupling */
                for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
                    int f = free_cols[idx];
                    std::uint32_t z = 1u << f;
                    for (int i = 0; i < r; ++i)
                        if ((cm.xrows[i] >> f) & 1u) z |= 1u << pivots[i];
                    cm.xrows[r + idx] = 0;
                    cm.zrows[r + idx] = z;
                }

                for (std::uint64_t b = 0; b < nb; ++b) {
                    int bit = 0;
                    for (int i = 0; i < r; ++i) cm.zrows[i] = 0;
                    for (int i = 0; i < r; ++i)
                        for (int j = i; j < r; ++j, ++bit)
                            if ((b >> bit) & 1u) {
                                cm.zrows[i] |= 1u << pivots[j];
                                cm.zrows[j] |= 1u << pivots[i];
                            }
                    fn(cm);
                    ++count;
                }
            }

            /* next r-combination of columns in lexicographic order */
            int i = r - 1;
            while (i >= 0 && pivots[i] == n - r + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    return count;
}

BigInt stabilizer_group_count(int n) {
    BigInt out = 1;
    BigInt p = 1;
    for (int k = 1; k <= n; ++k) {
        p *= 2;
        out *= p + 1;
    }
    return out;
}

BigInt stabilizer_state_count(int n) {
    return stabilizer_group_count(n) * (BigInt(1) << n);
}

}  // namespace stabatlas
