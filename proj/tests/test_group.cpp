#include <doctest.h>

#include "stabatlas/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace stabatlas;

TEST_CASE("closure of <H1,P1> in both phase conventions") {
  GroupTable with_phase = close_subgroup(generators_from({Gen::H1, Gen::P1}), false);
  CHECK(with_phase.order() == 192);
  CHECK(with_phase.diameter == 16);
  CHECK(phase_reduction_factor(with_phase) == 8);

  GroupTable mod_phase = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  CHECK(mod_phase.order() == 24);
  CHECK(mod_phase.diameter == 6);
  CHECK(with_phase.order() == mod_phase.order() * 8);
}

TEST_CASE("identity is element zero and generators are reachable in one step") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), false);
  CHECK(g.elements[0].is_identity());
  CHECK(g.parent[0] == -1);
  for (int j = 0; j < g.num_gens(); ++j) {
    std::uint32_t e = g.right_step(0, j);
    CHECK(g.elements[e] == g.generators[j].matrix);
    CHECK(g.word_of(e) == std::vector<int>{j});
  }
}

TEST_CASE("product, inverse and find are mutually consistent") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t a = rng() % g.order(), b = rng() % g.order();
    std::uint32_t ab = g.product(a, b);
    ExactMatrix m = g.elements[a] * g.elements[b];
    if (g.mod_phase) m = m.phase_canonical();
    CHECK(g.find(m) == static_cast<int>(ab));
    CHECK(g.product(a, g.inverse(a)) == 0);
    CHECK(g.product(g.inverse(a), a) == 0);
  }
  CHECK(g.find(gen_matrix(Gen::C12)) == -1);
  CHECK_FALSE(g.contains(gen_matrix(Gen::C12).phase_canonical()));
}

TEST_CASE("word_of reconstructs each element within the diameter") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    auto w = g.word_of(e);
    CHECK(static_cast<int>(w.size()) <= g.diameter);
    ExactMatrix m = ExactMatrix::identity(4);
    for (int j : w) m = m * g.generators[j].matrix;
    if (g.mod_phase) m = m.phase_canonical();
    CHECK(m == g.elements[e]);
  }
}

TEST_CASE("left and right permutations act as advertised") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    std::uint32_t h = rng() % g.order();
    auto lp = g.left_perm(h);
    auto rp = g.right_perm(h);
    CHECK(lp[0] == h);
    CHECK(rp[0] == h);
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      CHECK(lp[x] == g.product(h, x));
      CHECK(rp[x] == g.product(x, h));
    }
    // permutations are bijections
    std::set<std::uint32_t> seen(lp.begin(), lp.end());
    CHECK(seen.size() == g.order());
  }
}

TEST_CASE("left cosets of <P1> partition <H1,P1> evenly") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  GroupTable p = close_subgroup(generators_from({Gen::P1}), true);
  std::vector<std::uint32_t> k;
  for (const auto& m : p.elements) {
    int idx = g.find(m);
    REQUIRE(idx >= 0);
    k.push_back(static_cast<std::uint32_t>(idx));
  }
  CHECK(k.size() == 4);
  CosetPartition part = left_cosets(g, k);
  CHECK(part.num_classes == 6);
  for (auto sz : part.class_sizes) CHECK(sz == 4);
  // every element classified, representative is in its own class
  for (std::uint32_t e = 0; e < g.order(); ++e) CHECK(part.class_of[e] < 6);
  for (std::uint32_t c = 0; c < part.num_classes; ++c)
    CHECK(part.class_of[part.representatives[c]] == c);
  // cosets refine nothing: class of x equals class of x*k for k in K
  for (std::uint32_t e = 0; e < g.order(); ++e)
    for (auto kk : k) CHECK(part.class_of[g.product(e, kk)] == part.class_of[e]);
}

TEST_CASE("double cosets coarsen one-sided cosets and cover the group") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  GroupTable p = close_subgroup(generators_from({Gen::P1}), true);
  std::vector<std::uint32_t> k;
  for (const auto& m : p.elements) k.push_back(static_cast<std::uint32_t>(g.find(m)));
  CosetPartition dc = double_cosets(g, k, k);
  CosetPartition lc = left_cosets(g, k);
  CHECK(dc.num_classes <= lc.num_classes);
  CHECK(std::accumulate(dc.class_sizes.begin(), dc.class_sizes.end(), 0u) ==
        g.order());
  // class is invariant under h * x * k
  for (std::uint32_t e = 0; e < g.order(); ++e)
    for (auto h : k)
      for (auto kk : k)
        CHECK(dc.class_of[g.product(g.product(h, e), kk)] == dc.class_of[e]);
}

TEST_CASE("local subgroup of a single-qubit group is everything") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  auto loc = local_subgroup(g);
  CHECK(loc.size() == g.order());
}

TEST_CASE("local subgroup of the full group has the local-product order") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::H2, Gen::P1, Gen::P2}), true);
  // <H1,H2,P1,P2> is not all local: H and P on both qubits generate entangling
  // elements? no cnot present, the group is a tensor product, all local
  auto loc = local_subgroup(g);
  CHECK(loc.size() == g.order());
  CHECK(g.order() == 576);  // 24 * 24
  assert_subgroup(g, loc, "local");
}

TEST_CASE("closure cap throws on overflow") {
  CHECK_THROWS(close_subgroup(generators_from({Gen::H1, Gen::P1}), false, 100));
}

TEST_CASE("exact order formulas match the published values") {
  CHECK(clifford_group_order(1, true) == 24);
  CHECK(clifford_group_order(1, false) == 192);
  CHECK(clifford_group_order(2, true) == 11520);
  CHECK(clifford_group_order(2, false) == 92160);
  CHECK(local_clifford_order(2, true) == 576);
  CHECK(local_clifford_order(2, false) == 4608);
  CHECK(entropic_diversity_bound(1) == 1);
  CHECK(entropic_diversity_bound(2) == 20);
  CHECK(entropic_diversity_bound(3) == 6720);
  CHECK(entropic_diversity_bound(4) == BigInt("36556800"));
}

TEST_CASE("encode and decode round trip the full table") {
  GroupTable g = close_subgroup(generators_from({Gen::H1, Gen::P1}), true);
  GroupTable h = GroupTable::decode(g.encode());
  CHECK(h.mod_phase == g.mod_phase);
  CHECK(h.order() == g.order());
  CHECK(h.diameter == g.diameter);
  CHECK(h.succ == g.succ);
  CHECK(h.parent == g.parent);
  CHECK(h.parent_gen == g.parent_gen);
  REQUIRE(h.generators.size() == g.generators.size());
  for (std::size_t j = 0; j < g.generators.size(); ++j) {
    CHECK(h.generators[j].name == g.generators[j].name);
    CHECK(h.generators[j].matrix == g.generators[j].matrix);
  }
  for (std::size_t e = 0; e < g.order(); ++e) CHECK(h.elements[e] == g.elements[e]);
  // the rebuilt index works
  for (std::uint32_t e = 0; e < h.order(); ++e)
    CHECK(h.find(h.elements[e]) == static_cast<int>(e));
  CHECK(GroupTable::decode(g.encode()).encode() == g.encode());
  CHECK_THROWS(GroupTable::decode("garbage"));
}
