#include <doctest.h>

#include "stabatlas/census.hpp"

#include <numeric>

using namespace stabatlas;

TEST_CASE("single-qubit census is trivial") {
  Census c = stabilizer_census(1);
  CHECK(c.total_states == 6);
  CHECK(c.num_vectors() == 1);
  CHECK(c.rows[0].s.empty());
  CHECK(c.rows[0].states == 6);
  CHECK(c.num_non_holographic() == 0);
}

TEST_CASE("two-qubit census splits product from bell") {
  Census c = stabilizer_census(2);
  CHECK(c.total_states == 60);
  CHECK(c.num_vectors() == 2);
  const CensusRow* prod = c.find({0});
  const CensusRow* bell = c.find({1});
  REQUIRE(prod != nullptr);
  REQUIRE(bell != nullptr);
  CHECK(prod->states == 36);
  CHECK(bell->states == 24);
  CHECK(c.num_non_holographic() == 0);
  CHECK(c.find({2}) == nullptr);
}

TEST_CASE("three-qubit census has five vectors, all holographic") {
  Census c = stabilizer_census(3);
  CHECK(c.total_states == 1080);
  CHECK(c.num_vectors() == 5);
  struct Expect {
    std::vector<int> s;
    long states;
  };
  std::vector<Expect> table = {
      {{0, 0, 0}, 216}, {{0, 1, 1}, 144}, {{1, 0, 1}, 144},
      {{1, 1, 0}, 144}, {{1, 1, 1}, 432}};
  for (const auto& e : table) {
    const CensusRow* row = c.find(e.s);
    REQUIRE(row != nullptr);
    CHECK(row->states == e.states);
    CHECK(row->inequalities.holographic());
  }
  CHECK(c.num_non_holographic() == 0);
  BigInt sum = 0;
  for (const auto& r : c.rows) sum += r.states;
  CHECK(sum == c.total_states);
}

TEST_CASE("four-qubit census: eighteen vectors, one all-ones violator") {
  Census c = stabilizer_census(4);
  CHECK(c.total_states == 36720);
  CHECK(c.num_vectors() == 18);
  CHECK(c.num_non_holographic() == 1);
  CHECK(c.states_non_holographic() == 2592);
  const CensusRow* v = c.find({1, 1, 1, 1, 1, 1, 1});
  REQUIRE(v != nullptr);
  CHECK(v->states == 2592);
  CHECK_FALSE(v->inequalities.monogamy);
  CHECK(v->inequalities.subadditivity);
  CHECK(v->inequalities.araki_lieb);
  CHECK(v->inequalities.strong_subadditivity);
  // rows are sorted lexicographically
  for (std::size_t j = 1; j < c.rows.size(); ++j) CHECK(c.rows[j - 1].s < c.rows[j].s);
  BigInt sum = 0;
  for (const auto& r : c.rows) sum += r.states;
  CHECK(sum == c.total_states);
}
