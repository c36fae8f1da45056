#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "pauliperiod/perm_poly.hpp"
#include "test_helpers.hpp"

using namespace pauliperiod;

namespace {

// Random CNOT/X circuit (a Clifford permutation).
Circuit random_affine_circuit(unsigned n, std::size_t len, std::mt19937_64& rng) {
  Circuit c(n);
  std::uniform_int_distribution<unsigned> qubit(0, n - 1);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() % 3 == 0) {
      c.add(Gate::x(qubit(rng)));
    } else {
      unsigned a = qubit(rng), b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(Gate::cnot(a, b));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("permutation_of basics") {
  Circuit cnot(2);
  cnot.add(Gate::cnot(0, 1));
  auto p = permutation_of(cnot);
  // (a0, a1) -> (a0, a0 ⊕ a1) with a0 the index MSB
  CHECK(p == std::vector<uint32_t>{0, 1, 3, 2});

  Circuit ccx(3);
  ccx.add(Gate::ccx(0, 1, 2));
  auto q = permutation_of(ccx);
  CHECK(q == std::vector<uint32_t>{0, 1, 2, 3, 4, 5, 7, 6});

  Circuit bad(1);
  bad.add(Gate::s(0));
  CHECK_THROWS_AS(permutation_of(bad), NonPermutationGateError);
}

TEST_CASE("permutation matches exact matrix columns") {
  Circuit cu = controlled(jordan_cnot_string(3));
  auto perm = permutation_of(cu);
  ExactUnitary u = to_exact(cu);
  for (std::size_t col = 0; col < u.dim(); ++col) {
    for (std::size_t row = 0; row < u.dim(); ++row) {
      bool expect = (perm[col] == row);
      CHECK(u.at(row, col).is_one() == expect);
    }
  }
}

TEST_CASE("anf basics") {
  // constant 0
  BoolPoly zero = anf(std::vector<uint8_t>(8, 0));
  CHECK(zero.monomials.empty());
  CHECK(zero.degree() == 0);

  // parity of two variables
  std::vector<uint8_t> parity(4);
  for (uint32_t x = 0; x < 4; ++x) parity[x] = (x ^ (x >> 1)) & 1;
  BoolPoly p = anf(parity);
  CHECK(p.monomials == std::vector<uint32_t>{1, 2});
  CHECK(p.degree() == 1);

  // majority of three: degree 2, monomials {ab, ac, bc}
  std::vector<uint8_t> maj(8);
  for (uint32_t x = 0; x < 8; ++x) maj[x] = std::popcount(x) >= 2;
  BoolPoly m = anf(maj);
  CHECK(m.degree() == 2);
  CHECK(m.monomials == std::vector<uint32_t>{3, 5, 6});

  CHECK_THROWS_AS(anf(std::vector<uint8_t>(5, 0)), DimensionError);
}

TEST_CASE("anf evaluation reproduces the source table") {
  std::mt19937_64 rng(70);
  for (unsigned n : {1u, 3u, 6u, 10u, 12u}) {
    std::vector<uint8_t> table(std::size_t(1) << n);
    for (auto& b : table) b = rng() & 1;
    BoolPoly p = anf(table);
    for (uint32_t x = 0; x < table.size(); ++x) CHECK(p.eval(x) == (table[x] & 1));
  }
}

TEST_CASE("affine circuits have degree <= 1 coordinates") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_affine_circuit(4, 12, rng);
    auto perm = permutation_of(c);
    for (const BoolPoly& p : coordinate_anfs(perm, 4)) CHECK(p.degree() <= 1);
  }
}

TEST_CASE("check_jumped_perm_quadratic") {
  // u = single CNOT, trivial dressing: Toffoli coordinates, degree exactly 2
  Circuit u(2);
  u.add(Gate::cnot(0, 1));
  QuadraticReport r = check_jumped_perm_quadratic(u, Circuit(3), Circuit(3));
  CHECK(r.pass);
  CHECK(r.max_forward_degree == 2);
  CHECK(r.max_inverse_degree == 2);

  // identity target: everything affine
  QuadraticReport rid = check_jumped_perm_quadratic(Circuit(2), Circuit(3), Circuit(3));
  CHECK(rid.max_forward_degree <= 1);
  CHECK(rid.max_inverse_degree <= 1);

  // 50 random dressings of jordan(3), widths <= 4+1
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned n = 3 + trial % 2;
    Circuit target = jordan_cnot_string(n);
    Circuit p = random_affine_circuit(n + 1, 10, rng);
    Circuit q = random_affine_circuit(n + 1, 10, rng);
    QuadraticReport rr = check_jumped_perm_quadratic(target, p, q);
    CHECK(rr.pass);
  }

  // phase-bearing target: controlled(H) = CH is not a permutation gate
  Circuit h(1);
  h.add(Gate::h(0));
  CHECK_THROWS_AS(check_jumped_perm_quadratic(h, Circuit(2), Circuit(2)),
                  NonPermutationGateError);
}
