#include <doctest.h>

#include "stabatlas/exact_matrix.hpp"
#include "stabatlas/gates.hpp"

#include <random>

using namespace stabatlas;

TEST_CASE("gaussian integer arithmetic") {
  GaussianInt a(1, 1), b(1, -1);
  CHECK(a * b == GaussianInt(2, 0));
  CHECK(a + b == GaussianInt(2, 0));
  CHECK(a - b == GaussianInt(0, 2));
  CHECK(-a == GaussianInt(-1, -1));
  CHECK(a.conj() == b);
  CHECK(a.times_i() == GaussianInt(-1, 1));
  CHECK(a.times_i().times_i() == -a);
  CHECK(GaussianInt(2, -4).is_even());
  CHECK_FALSE(GaussianInt(2, 1).is_even());
  CHECK(GaussianInt(2, -4).halved() == GaussianInt(1, -2));
  CHECK(GaussianInt(0, 0).is_zero());
  CHECK(GaussianInt(3, 0).compare(GaussianInt(3, 1)) < 0);
  CHECK(GaussianInt(2, 9).compare(GaussianInt(3, 0)) < 0);
  CHECK(GaussianInt(3, 1).compare(GaussianInt(3, 1)) == 0);
}

TEST_CASE("canonicalization halves even entries and is value-unique") {
  // H*H builds the identity with exponent 2 before canonicalization
  ExactMatrix h = hadamard_2x2();
  ExactMatrix hh = h * h;
  CHECK(hh == ExactMatrix::identity(2));
  CHECK(hh.root2_exponent == 0);

  // a manually de-canonicalized identity collapses back
  ExactMatrix m(2, 4);
  m.at(0, 0) = GaussianInt(4, 0);
  m.at(1, 1) = GaussianInt(4, 0);
  m.canonicalize();
  CHECK(m == ExactMatrix::identity(2));

  // odd entry pins the exponent: no reduction possible
  ExactMatrix n(2, 1);
  n.at(0, 0) = GaussianInt(1, 0);
  n.at(1, 1) = GaussianInt(1, 0);
  ExactMatrix before = n;
  n.canonicalize();
  CHECK(n == before);
  CHECK(n.root2_exponent == 1);
}

TEST_CASE("phase unit has order eight and commutes with products") {
  ExactMatrix id = ExactMatrix::identity(4);
  ExactMatrix m = id;
  for (int j = 0; j < 8; ++j) {
    if (j > 0) CHECK(m != id);
    m = m.times_phase_unit();
  }
  CHECK(m == id);
  // omega^2 = i
  ExactMatrix i_times = id.times_phase(2);
  CHECK(i_times.at(0, 0) == GaussianInt(0, 1));
  // omega^4 = -1
  CHECK(id.times_phase(4).at(0, 0) == GaussianInt(-1, 0));

  ExactMatrix g = gen_matrix(Gen::C12) * gen_matrix(Gen::H1);
  CHECK(g.times_phase(3) * gen_matrix(Gen::P2) ==
        (g * gen_matrix(Gen::P2)).times_phase(3));
}

TEST_CASE("phase_canonical collapses the eight phase multiples") {
  ExactMatrix g = gen_matrix(Gen::H1) * gen_matrix(Gen::P1) * gen_matrix(Gen::C21);
  ExactMatrix canon = g.phase_canonical();
  for (int j = 0; j < 8; ++j) {
    CHECK(g.times_phase(j).phase_canonical() == canon);
  }
  // the canonical representative is one of the multiples
  bool found = false;
  for (int j = 0; j < 8; ++j) found = found || (g.times_phase(j) == canon);
  CHECK(found);
  CHECK(ExactMatrix::identity(4).times_phase(5).is_phase_of_identity());
  CHECK_FALSE(gen_matrix(Gen::H1).is_phase_of_identity());
}

TEST_CASE("compare is a strict total order consistent with equality") {
  std::vector<ExactMatrix> ms;
  ms.push_back(ExactMatrix::identity(4));
  for (Gen g : kAllGens) ms.push_back(gen_matrix(g));
  ms.push_back(gen_matrix(Gen::H1) * gen_matrix(Gen::C12));
  for (const auto& x : ms) {
    CHECK(x.compare(x) == 0);
    for (const auto& y : ms) {
      CHECK(x.compare(y) == -y.compare(x));
      if (x.compare(y) == 0) CHECK(x == y);
    }
  }
  // transitivity on the sample
  for (const auto& x : ms)
    for (const auto& y : ms)
      for (const auto& z : ms)
        if (x.compare(y) < 0 && y.compare(z) < 0) CHECK(x.compare(z) < 0);
}

TEST_CASE("dagger inverts unitaries exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix m = ExactMatrix::identity(4);
    for (int step = 0; step < 12; ++step) {
      m = m * gen_matrix(kAllGens[rng() % kNumGens]);
    }
    CHECK(m.is_unitary());
    CHECK((m * m.dagger()).is_identity());
    CHECK((m.dagger() * m).is_identity());
  }
}

TEST_CASE("kron and locality detection") {
  ExactMatrix h = hadamard_2x2(), p = phase_2x2(), id2 = ExactMatrix::identity(2);
  // qubit 1 is the low bit: H1 = I (x) H in high (x) low order
  CHECK(ExactMatrix::kron(id2, h) == gen_matrix(Gen::H1));
  CHECK(ExactMatrix::kron(h, id2) == gen_matrix(Gen::H2));
  CHECK(ExactMatrix::kron(p, h).is_local_tensor());
  CHECK(gen_matrix(Gen::H1).is_local_tensor());
  CHECK(gen_matrix(Gen::P2).is_local_tensor());
  CHECK_FALSE(gen_matrix(Gen::C12).is_local_tensor());
  CHECK_FALSE(gen_matrix(Gen::C21).is_local_tensor());
  // a phase multiple of a tensor product is still local
  CHECK(ExactMatrix::kron(p, h).times_phase(1).is_local_tensor());
  // kron is multiplicative
  CHECK(ExactMatrix::kron(h, p) * ExactMatrix::kron(p, h) ==
        ExactMatrix::kron(h * p, p * h));
}

TEST_CASE("encode and decode round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix m = ExactMatrix::identity(4);
    for (int step = 0; step < 10; ++step)
      m = m * gen_matrix(kAllGens[rng() % kNumGens]);
    std::string buf = m.encode();
    std::size_t pos = 0;
    CHECK(ExactMatrix::decode(buf, pos) == m);
    CHECK(pos == buf.size());
    // encoding is injective on canonical values: equal bytes iff equal matrix
    CHECK(m.times_phase_unit().encode() != buf);
  }
}

TEST_CASE("to_complex is numerically unitary and matches exact products") {
  ExactMatrix m = gen_matrix(Gen::C12) * gen_matrix(Gen::H2) * gen_matrix(Gen::P1);
  Eigen::MatrixXcd u = m.to_complex();
  Eigen::MatrixXcd err = u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4);
  CHECK(err.cwiseAbs().maxCoeff() < 1e-12);
  Eigen::MatrixXcd prod = gen_matrix(Gen::C12).to_complex() *
                          gen_matrix(Gen::H2).to_complex() *
                          gen_matrix(Gen::P1).to_complex();
  CHECK((u - prod).cwiseAbs().maxCoeff() < 1e-12);
}
