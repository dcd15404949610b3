#include <doctest.h>

#include "stabatlas/dense_state.hpp"
#include "stabatlas/exact_state.hpp"
#include "stabatlas/group.hpp"

#include <cmath>
#include <set>

using namespace stabatlas;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("basis seeding and little-endian qubit convention") {
  // index 1 = qubit 1 set, qubit 2 clear
  ExactState s = ExactState::basis_state(2, 1);
  CHECK(s.amp[1] == GaussianInt(1, 0));
  CHECK(s.amp[0].is_zero());
  s.apply_cnot(1, 2);  // control set, so target flips
  CHECK(s.amp[3] == GaussianInt(1, 0));
  s.apply_cnot(2, 1);  // control qubit 2 set too
  CHECK(s.amp[2] == GaussianInt(1, 0));

  ExactState t = ExactState::basis_state(3, 4);  // only qubit 3 set
  t.apply_x(3);
  CHECK(t.amp[0] == GaussianInt(1, 0));
  t.apply_x(1);
  CHECK(t.amp[1] == GaussianInt(1, 0));
  t.apply_z(1);
  CHECK(t.amp[1] == GaussianInt(-1, 0));
}

TEST_CASE("gate involutions and orders on states") {
  ExactState s = ExactState::from_integers(2, {1, 2, 4, 3});
  ExactState orig = s;
  s.apply_h(1);
  CHECK(s != orig);
  s.apply_h(1);
  CHECK(s == orig);
  for (int j = 0; j < 4; ++j) s.apply_p(2);
  CHECK(s == orig);
  s.apply_cnot(1, 2);
  s.apply_cnot(1, 2);
  CHECK(s == orig);
  // X = HP^2H, exactly
  ExactState a = orig, b = orig;
  a.apply_x(1);
  b.apply_h(1);
  b.apply_p(1);
  b.apply_p(1);
  b.apply_h(1);
  CHECK(a == b);
}

TEST_CASE("apply_gen matches apply_pair on the generator matrices") {
  ExactState s = ExactState::from_integers(3, {1, 0, 2, 0, 0, 3, 0, 1});
  for (Gen g : kAllGens) {
    ExactState via_gen = s;
    via_gen.apply_gen(g);
    ExactState via_pair = s;
    via_pair.apply_pair(gen_matrix(g));
    CHECK(via_gen == via_pair);
  }
}

TEST_CASE("phase_canonical identifies states differing by a global phase") {
  ExactState s = ExactState::from_integers(2, {1, 1, 0, 1});
  ExactState w = s;
  // (H1 P1)^3 multiplies by omega
  for (int rep = 0; rep < 3; ++rep) {
    w.apply_h(1);
    w.apply_p(1);
  }
  CHECK(w != s);
  CHECK(w.phase_canonical() == s.phase_canonical());
  std::set<std::string> keys;
  ExactState cur = s;
  for (int j = 0; j < 8; ++j) {
    keys.insert(cur.phase_canonical().encode());
    for (int rep = 0; rep < 3; ++rep) {
      cur.apply_h(1);
      cur.apply_p(1);
    }
  }
  CHECK(keys.size() == 1);
}

TEST_CASE("to_complex produces the normalized bell state") {
  ExactState s = ExactState::basis_state(2, 0);
  s.apply_h(1);
  s.apply_cnot(1, 2);
  Eigen::VectorXcd v = s.to_complex();
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  CHECK(std::abs(v(0) - std::complex<double>(inv_sqrt2, 0)) < 1e-12);
  CHECK(std::abs(v(1)) < 1e-12);
  CHECK(std::abs(v(2)) < 1e-12);
  CHECK(std::abs(v(3) - std::complex<double>(inv_sqrt2, 0)) < 1e-12);
}

TEST_CASE("exact and dense evolution agree along random words") {
  ExactState s = ExactState::from_integers(2, {2, -1, 3, 1});
  Eigen::VectorXcd v = s.to_complex();
  Word w = {Gen::H1, Gen::C12, Gen::P2, Gen::C21, Gen::H2, Gen::P1, Gen::C12};
  for (Gen g : w) {
    s.apply_gen(g);
    Eigen::Matrix4cd u = gen_matrix(g).to_complex();
    apply_pair_gate(v, u);
  }
  CHECK((s.to_complex() - v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("same_ray accepts phases and rejects different rays") {
  Eigen::VectorXcd a = basis_vector(2, 2);
  Eigen::VectorXcd b = std::polar(1.0, 1.234) * a;
  CHECK(same_ray(a, b));
  CHECK(same_ray(a, a));
  CHECK_FALSE(same_ray(a, basis_vector(2, 1)));
  Eigen::VectorXcd c(4);
  c << inv_sqrt2, inv_sqrt2, 0, 0;
  CHECK_FALSE(same_ray(a, c));
}

TEST_CASE("ray_stabilizer finds the fixing subgroup") {
  GroupTable g = close_subgroup(generators_from({Gen::P1}), true);
  CHECK(g.order() == 4);
  // |00> is fixed by every power of P1
  auto stab0 = ray_stabilizer(g, basis_vector(2, 0));
  CHECK(stab0.size() == 4);
  // |++> is fixed only by the identity
  Eigen::VectorXcd plus(4);
  plus << 0.5, 0.5, 0.5, 0.5;
  auto stab_plus = ray_stabilizer(g, plus);
  CHECK(stab_plus.size() == 1);
  CHECK(stab_plus[0] == 0);  // identity is element 0
}
