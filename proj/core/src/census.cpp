#include "stabatlas/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stabatlas {

std::size_t Census::num_non_holographic() const {
    std::size_t k = 0;
    for (const auto& r : rows)
        if (!r.inequalities.holographic()) ++k;
    return k;
}

BigInt Census::states_non_holographic() const {
    BigInt k = 0;
    for (const auto& r : rows)
        if (!r.inequalities.holographic()) k += r.states;
    return k;
}

const CensusRow* Census::find(const std::vector<int>& s) const {
    for (const auto& r : rows)
        if (r.s == s) return &r;
    return nullptr;
}

Census stabilizer_census(int n) {
    std::map<std::vector<int>, std::uint64_t> tally;
    std::uint64_t groups = for_each_stabilizer_group(
        n, [&](const CheckMatrix& cm) { ++tally[stabilizer_entropies(cm)]; });
    if (BigInt(groups) != stabilizer_group_count(n))
        throw std::logic_error("stabilizer group enumeration disagrees with closed form");

    Census census;
    census.n = n;
    census.total_states = stabilizer_state_count(n);
    const BigInt signs = BigInt(1) << n;
    BigInt check = 0;
    for (const auto& [vec, count] : tally) {
        CensusRow row;
        row.s = vec;
        row.states = BigInt(count) * signs;
        EntropyVector ev;
        ev.n = n;
        ev.s.assign(vec.begin(), vec.end());
        row.inequalities = check_inequalities(ev);
        check += row.states;
        census.rows.push_back(std::move(row));
    }
    if (check != census.total_states)
        throw std::logic_error("census multiplicities do not sum to the state count");
    /* std::map iterates keys in lexicographic order already */
    return census;
}

}  // namespace stabatlas
