#include "stabatlas/group.hpp"

#include <deque>
#include <stdexcept>

namespace stabatlas {

std::vector<NamedGenerator> generators_from(const std::vector<Gen>& gens) {
    std::vector<NamedGenerator> out;
    out.reserve(gens.size());
    for (Gen g : gens) out.push_back({gen_name(g), gen_matrix(g)});
    return out;
}

int GroupTable::find(const ExactMatrix& m) const {
    ExactMatrix probe = mod_phase ? m.phase_canonical() : m;
    auto it = index_.find(probe.encode());
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

std::vector<int> GroupTable::word_of(std::uint32_t e) const {
    std::vector<int> w;
    while (parent[e] >= 0) {
        w.push_back(parent_gen[e]);
        e = static_cast<std::uint32_t>(parent[e]);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::uint32_t GroupTable::product(std::uint32_t a, std::uint32_t b) const {
    /* walk the word of b rightward from a; succ encodes right multiplication
       by generators, and b is a product of generators */
    std::uint32_t cur = a;
    for (int g : word_of(b)) cur = right_step(cur, g);
    return cur;
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
    std::vector<int> w = word_of(a);
    for (std::uint32_t x = 0; x < order(); ++x) {
        std::uint32_t cur = x;
        for (int g : w) cur = right_step(cur, g);
        if (cur == 0) return x;
    }
    throw std::logic_error("group inverse missing; table is not closed");
}

std::vector<std::uint32_t> GroupTable::left_perm(std::uint32_t h) {
    /* L_h[x] = index(h * x). Elements are in BFS order, so x = parent * gen
       with parent already processed: L_h[x] = succ(L_h[parent], gen). */
    std::vector<std::uint32_t> perm(order());
    perm[0] = h;
    for (std::uint32_t e = 1; e < order(); ++e)
        perm[e] = right_step(perm[parent[e]], parent_gen[e]);
    return perm;
}

std::vector<std::uint32_t> GroupTable::right_perm(std::uint32_t k) const {
    std::vector<int> w = word_of(k);
    std::vector<std::uint32_t> perm(order());
    for (std::uint32_t x = 0; x < order(); ++x) {
        std::uint32_t cur = x;
        for (int g : w) cur = right_step(cur, g);
        perm[x] = cur;
    }
    return perm;
}

GroupTable close_subgroup(const std::vector<NamedGenerator>& gens, bool mod_phase,
                          std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    const int dim = gens.front().matrix.dim;
    for (const auto& g : gens)
        if (g.matrix.dim != dim) throw std::invalid_argument("generator dimension mismatch");

    GroupTable t;
    t.mod_phase = mod_phase;
    t.generators = gens;
    const int ng = t.num_gens();

    ExactMatrix id = ExactMatrix::identity(dim);
    if (mod_phase) id = id.phase_canonical();
    t.elements.push_back(id);
    t.parent.push_back(-1);
    t.parent_gen.push_back(-1);
    t.index_.emplace(id.encode(), 0);

    std::vector<int> depth{0};
    for (std::uint32_t e = 0; e < t.elements.size(); ++e) {
        for (int g = 0; g < ng; ++g) {
            ExactMatrix m = t.elements[e] * gens[g].matrix;
            if (mod_phase) m = m.phase_canonical();
            std::string key = m.encode();
            auto [it, inserted] = t.index_.emplace(std::move(key), t.elements.size());
            if (inserted) {
                if (t.elements.size() >= cap)
                    throw std::runtime_error("closure exceeded element cap");
                t.elements.push_back(std::move(m));
                t.parent.push_back(static_cast<std::int32_t>(e));
                t.parent_gen.push_back(static_cast<std::int8_t>(g));
                depth.push_back(depth[e] + 1);
            }
            t.succ.push_back(it->second);
        }
    }
    t.diameter = depth.back();  // BFS yields nondecreasing depths
    return t;
}

int phase_reduction_factor(const GroupTable& with_phase) {
    if (with_phase.mod_phase)
        throw std::invalid_argument("phase reduction is measured on the unquotiented group");
    int count = 0;
    for (const auto& m : with_phase.elements)
        if (m.is_phase_of_identity()) ++count;
    if (with_phase.order() % count != 0)
        throw std::logic_error("central phase subgroup order does not divide group order");
    return count;
}

CosetPartition left_cosets(GroupTable& g, const std::vector<std::uint32_t>& subgroup_k) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    std::vector<std::vector<int>> kwords;
    kwords.reserve(subgroup_k.size());
    for (std::uint32_t k : subgroup_k) kwords.push_back(g.word_of(k));

    CosetPartition part;
    part.class_of.assign(n, UINT32_MAX);
    for (std::uint32_t e = 0; e < n; ++e) {
        if (part.class_of[e] != UINT32_MAX) continue;
        std::uint32_t cls = part.num_classes++;
        part.representatives.push_back(e);
        std::uint32_t size = 0;
        for (const auto& w : kwords) {
            std::uint32_t cur = e;
            for (int gi : w) cur = g.right_step(cur, gi);
            if (part.class_of[cur] == UINT32_MAX) {
                part.class_of[cur] = cls;
                ++size;
            } else if (part.class_of[cur] != cls) {
                throw std::logic_error("left coset classes overlap; input is not a subgroup");
            }
        }
        if (size != subgroup_k.size())
            throw std::logic_error("left coset size mismatch; input is not a subgroup");
        part.class_sizes.push_back(size);
    }
    return part;
}

CosetPartition double_cosets(GroupTable& g, const std::vector<std::uint32_t>& subgroup_h,
                             const std::vector<std::uint32_t>& subgroup_k) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    const std::size_t nh = subgroup_h.size(), nk = subgroup_k.size();
    if (nh * n > 400000000ull || nk * n > 400000000ull)
        throw std::runtime_error("double coset permutation tables would be too large");

    std::vector<std::vector<std::uint32_t>> lperm, rperm;
    lperm.reserve(nh);
    rperm.reserve(nk);
    for (std::uint32_t h : subgroup_h) lperm.push_back(g.left_perm(h));
    for (std::uint32_t k : subgroup_k) rperm.push_back(g.right_perm(k));

    CosetPartition part;
    part.class_of.assign(n, UINT32_MAX);
    for (std::uint32_t e = 0; e < n; ++e) {
        if (part.class_of[e] != UINT32_MAX) continue;
        std::uint32_t cls = part.num_classes++;
        part.representatives.push_back(e);
        std::uint32_t size = 0;
        for (const auto& rp : rperm) {
            std::uint32_t ek = rp[e];
            for (const auto& lp : lperm) {
                std::uint32_t m = lp[ek];
                if (part.class_of[m] == UINT32_MAX) {
                    part.class_of[m] = cls;
                    ++size;
                }
            }
        }
        part.class_sizes.push_back(size);
    }

    /* independent count: orbits of G under (h,k).g = h g k^-1 equal double
       cosets, and the orbit count is the average number of fixed points.
       Fixing the pair (h, k') with k' = k^-1 ranges over the same set, so
       summing |{g : h g k = g}| over all ordered pairs gives the same total. */
    std::uint64_t fixed_sum = 0;
    for (const auto& lp : lperm)
        for (const auto& rp : rperm)
            for (std::uint32_t x = 0; x < n; ++x)
                if (lp[rp[x]] == x) ++fixed_sum;
    std::uint64_t denom = static_cast<std::uint64_t>(nh) * nk;
    if (fixed_sum % denom != 0 || fixed_sum / denom != part.num_classes)
        throw std::logic_error("double coset count disagrees with fixed-pair sum");
    return part;
}

std::vector<std::uint32_t> local_subgroup(GroupTable& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < g.order(); ++e)
        if (g.elements[e].is_local_tensor()) out.push_back(e);
    assert_subgroup(g, out, "local elements");
    return out;
}

void assert_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& subset,
                     const std::string& what) {
    if (subset.empty()) throw std::logic_error(what + ": empty subset cannot be a subgroup");
    std::vector<bool> in(g.order(), false);
    for (std::uint32_t e : subset) in[e] = true;
    if (!in[0]) throw std::logic_error(what + ": identity missing");
    std::vector<std::vector<int>> words;
    words.reserve(subset.size());
    for (std::uint32_t e : subset) words.push_back(g.word_of(e));
    for (std::uint32_t a : subset) {
        for (const auto& w : words) {
            std::uint32_t cur = a;
            for (int gi : w) cur = g.right_step(cur, gi);
            if (!in[cur]) throw std::logic_error(what + ": not closed under products");
        }
    }
}

BigInt clifford_group_order(int n, bool mod_phase) {
    if (n < 1) throw std::invalid_argument("need at least one qubit");
    BigInt order = BigInt(1) << (n * n + 2 * n);
    BigInt pow4 = 1;
    for (int j = 1; j <= n; ++j) {
        pow4 *= 4;
        order *= pow4 - 1;
    }
    if (!mod_phase) order *= 8;
    return order;
}

BigInt local_clifford_order(int n, bool mod_phase) {
    if (n < 1) throw std::invalid_argument("need at least one qubit");
    BigInt order = 1;
    for (int j = 0; j < n; ++j) order *= 24;
    if (!mod_phase) order *= 8;  // one global phase, not one per factor
    return order;
}

BigInt entropic_diversity_bound(int n) {
    return clifford_group_order(n, true) / local_clifford_order(n, true);
}

std::string GroupTable::encode() const {
    std::string out;
    out.push_back('\x01');  // format version
    out.push_back(mod_phase ? '\x01' : '\x00');
    put_varint(out, generators.size());
    for (const auto& g : generators) {
        put_varint(out, g.name.size());
        out += g.name;
        g.matrix.encode_into(out);
    }
    put_varint(out, elements.size());
    for (const auto& m : elements) m.encode_into(out);
    for (std::size_t e = 0; e < elements.size(); ++e) {
        put_varint(out, static_cast<std::uint64_t>(parent[e] + 1));
        put_varint(out, static_cast<std::uint64_t>(parent_gen[e] + 1));
    }
    for (std::uint32_t s : succ) put_varint(out, s);
    put_varint(out, static_cast<std::uint64_t>(diameter));
    return out;
}

GroupTable GroupTable::decode(const std::string& in) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > in.size()) throw std::runtime_error("truncated group table");
    };
    need(2);
    if (in[pos++] != '\x01') throw std::runtime_error("unknown group table format");
    GroupTable t;
    t.mod_phase = in[pos++] != '\x00';
    std::uint64_t ngen = get_varint(in, pos);
    for (std::uint64_t i = 0; i < ngen; ++i) {
        std::uint64_t len = get_varint(in, pos);
        need(len);
        std::string name = in.substr(pos, len);
        pos += len;
        t.generators.push_back({std::move(name), ExactMatrix::decode(in, pos)});
    }
    std::uint64_t nel = get_varint(in, pos);
    t.elements.reserve(nel);
    for (std::uint64_t i = 0; i < nel; ++i) t.elements.push_back(ExactMatrix::decode(in, pos));
    t.parent.reserve(nel);
    t.parent_gen.reserve(nel);
    for (std::uint64_t i = 0; i < nel; ++i) {
        t.parent.push_back(static_cast<std::int32_t>(get_varint(in, pos)) - 1);
        t.parent_gen.push_back(static_cast<std::int8_t>(get_varint(in, pos)) - 1);
    }
    t.succ.reserve(nel * ngen);
    for (std::uint64_t i = 0; i < nel * ngen; ++i)
        t.succ.push_back(static_cast<std::uint32_t>(get_varint(in, pos)));
    t.diameter = static_cast<int>(get_varint(in, pos));
    for (std::uint64_t i = 0; i < nel; ++i)
        t.index_.emplace(t.elements[i].encode(), static_cast<std::uint32_t>(i));
    return t;
}

}  // namespace stabatlas
