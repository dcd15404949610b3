#include <doctest.h>

#include "stabatlas/gates.hpp"

#include <cmath>
#include <complex>
#include <set>

using namespace stabatlas;

TEST_CASE("generator names round trip and follow the canonical order") {
  CHECK(gen_name(Gen::H1) == std::string("H1"));
  CHECK(gen_name(Gen::C21) == std::string("C21"));
  for (Gen g : kAllGens) CHECK(gen_from_name(gen_name(g)) == g);
  CHECK(kAllGens[0] == Gen::H1);
  CHECK(kAllGens[1] == Gen::H2);
  CHECK(kAllGens[2] == Gen::P1);
  CHECK(kAllGens[3] == Gen::P2);
  CHECK(kAllGens[4] == Gen::C12);
  CHECK(kAllGens[5] == Gen::C21);
  CHECK_THROWS(gen_from_name("Q7"));
}

TEST_CASE("generator matrices act on the advertised qubits") {
  // H1 mixes the low bit within each block of two
  ExactMatrix h1 = gen_matrix(Gen::H1);
  CHECK(h1.at(0, 0) == GaussianInt(1, 0));
  CHECK(h1.at(0, 1) == GaussianInt(1, 0));
  CHECK(h1.at(1, 1) == GaussianInt(-1, 0));
  CHECK(h1.at(0, 2).is_zero());
  CHECK(h1.root2_exponent == 1);
  // C12: control qubit 1 (low bit), target qubit 2 (high bit)
  ExactMatrix c = gen_matrix(Gen::C12);
  // |01> (index 1, qubit1=1) -> |11> (index 3); index 2 has the control clear
  CHECK(c.at(3, 1) == GaussianInt(1, 0));
  CHECK(c.at(1, 1).is_zero());
  CHECK(c.at(0, 0) == GaussianInt(1, 0));
  CHECK(c.at(2, 2) == GaussianInt(1, 0));
  CHECK(c.at(1, 3) == GaussianInt(1, 0));
  CHECK(c.at(3, 3).is_zero());
}

TEST_CASE("omega is the scalar eighth root of unity from (HP)^3") {
  Word w = {Gen::H1, Gen::P1, Gen::H1, Gen::P1, Gen::H1, Gen::P1};
  CHECK(eval_word(w) == omega_4x4());
  CHECK(omega_4x4() == ExactMatrix::identity(4).times_phase_unit());
  std::complex<double> top = omega_4x4().to_complex()(0, 0);
  CHECK(std::abs(top - std::polar(1.0, M_PI / 4)) < 1e-12);
}

TEST_CASE("eval_word multiplies left to right and handles the empty word") {
  CHECK(eval_word({}) == ExactMatrix::identity(4));
  CHECK(eval_word({Gen::H2, Gen::C21}) ==
        gen_matrix(Gen::H2) * gen_matrix(Gen::C21));
  CHECK(word_to_string({Gen::H1, Gen::C12}) == "H1 C12");
  CHECK(word_to_string({}) == "1");  // the identity word
}

TEST_CASE("the sixteen-identity catalog verifies exactly") {
  const auto& cat = relation_catalog();
  CHECK(cat.size() == 16);
  std::set<std::string> names;
  for (const auto& r : cat) {
    CAPTURE(r.name);
    CHECK(names.insert(r.name).second);  // names unique
    CHECK(!r.equalities.empty());
    CHECK(verify_relation(r));
  }
}

TEST_CASE("verify_relation rejects a broken identity") {
  Relation bogus;
  bogus.name = "bogus";
  bogus.equalities.push_back({{Gen::H1}, {Gen::P1}, 0});
  CHECK_FALSE(verify_relation(bogus));
  // right idea, wrong phase power
  Relation wrong_phase;
  wrong_phase.name = "wrong+phase";
  wrong_phase.equalities.push_back(
      {{Gen::H1, Gen::P1, Gen::H1, Gen::P1, Gen::H1, Gen::P1}, {}, 2});
  CHECK_FALSE(verify_relation(wrong_phase));
}
