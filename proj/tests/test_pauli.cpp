#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "pauliperiod/pauli.hpp"
#include "test_helpers.hpp"

using namespace pauliperiod;

namespace {

PauliString ps1(int x, int z, int phase) {
  PauliString p = PauliString::identity(1);
  p.x.set(0, x);
  p.z.set(0, z);
  p.phase = phase;
  return p;
}

}  // namespace

TEST_CASE("pauli_mul basics") {
  PauliString X = ps1(1, 0, 0), Z = ps1(0, 1, 0);
  PauliString XZ = pauli_mul(X, Z);
  CHECK(XZ == ps1(1, 1, 0));       // X·Z = XZ = -iY
  CHECK(XZ.to_string() == "-iY");  // letter form carries the -i

  CHECK(pauli_mul(X, X) == PauliString::identity(1));
  CHECK(pauli_mul(Z, X) == ps1(1, 1, 2));  // Z·X = -XZ = iY

  PauliString Y = PauliString::single_y(1, 0);
  CHECK(pauli_mul(Y, Y) == PauliString::identity(1));

  CHECK_THROWS_AS(pauli_mul(PauliString::identity(1), PauliString::identity(2)),
                  DimensionError);
}

TEST_CASE("pauli_mul agrees with exact matrices on 500 random pairs, n = 3") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    PauliString p = pptest::random_pauli(3, rng), q = pptest::random_pauli(3, rng);
    CHECK(pauli_to_exact(pauli_mul(p, q)) == pauli_to_exact(p) * pauli_to_exact(q));
  }
}

TEST_CASE("pauli inverse and hermiticity") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    PauliString p = pptest::random_pauli(4, rng);
    CHECK(pauli_mul(p, pauli_inverse(p)) == PauliString::identity(4));
  }
  CHECK(PauliString::single_y(2, 1).is_hermitian());
  CHECK_FALSE(ps1(1, 1, 0).is_hermitian());  // XZ = -iY is skew
}

TEST_CASE("conjugate basics") {
  CliffordTableau h = to_tableau(pptest::single_gate(1, Gate::h(0)));
  CHECK(h.conjugate(ps1(1, 0, 0)) == ps1(0, 1, 0));  // H X H = Z

  CliffordTableau s = to_tableau(pptest::single_gate(1, Gate::s(0)));
  CHECK(s.conjugate(ps1(1, 0, 0)) == PauliString::single_y(1, 0));  // S X S† = Y
}

TEST_CASE("conjugate agrees with exact U P U† on random 3-qubit circuits") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 15; ++t) {
    Circuit c = random_clifford_circuit(3, 12, rng);
    CliffordTableau tab = to_tableau(c);
    ExactUnitary u = to_exact(c);
    ExactUnitary ud = u.dagger();
    for (int j = 0; j < 6; ++j) {
      PauliString p = pptest::random_pauli(3, rng);
      CHECK(pauli_to_exact(tab.conjugate(p)) == (u * pauli_to_exact(p)) * ud);
    }
  }
}

TEST_CASE("compose") {
  CliffordTableau h = to_tableau(pptest::single_gate(1, Gate::h(0)));
  CHECK(compose(h, h).is_identity());

  CliffordTableau s = to_tableau(pptest::single_gate(1, Gate::s(0)));
  CliffordTableau z = to_tableau(pptest::single_gate(1, Gate::z(0)));
  CHECK(compose(s, s) == z);  // S² = Z, signs included

  // random pairs match the circuit concatenation
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    Circuit a = random_clifford_circuit(3, 8, rng), b = random_clifford_circuit(3, 8, rng);
    Circuit ab(3);
    for (const Gate& g : b.gates) ab.add(g);
    for (const Gate& g : a.gates) ab.add(g);
    CHECK(compose(to_tableau(a), to_tableau(b)) == to_tableau(ab));
  }
}

TEST_CASE("tableau_pow") {
  CliffordTableau s = to_tableau(pptest::single_gate(1, Gate::s(0)));
  CHECK(tableau_pow(s, 0).is_identity());
  CHECK(tableau_pow(s, 4).is_identity());  // S⁴ = I including signs

  CliffordTableau sch3 = to_tableau(sch(3));
  CHECK(tableau_pow(sch3, 8).is_pauli());       // f = I after 2^3 steps
  CHECK_FALSE(tableau_pow(sch3, 4).is_pauli());
}

TEST_CASE("malformed tableau rejected") {
  // image of X with label X but odd phase: not Hermitian
  std::vector<PauliString> imgs = {ps1(1, 0, 1), ps1(0, 1, 0)};
  CHECK_THROWS_AS(CliffordTableau::from_images(1, imgs), MalformedTableauError);

  // non-symplectic label map: X -> X, Z -> X
  std::vector<PauliString> bad = {ps1(1, 0, 0), ps1(1, 0, 0)};
  CHECK_THROWS_AS(CliffordTableau::from_images(1, bad), MalformedTableauError);
}

TEST_CASE("pauli_periodicity") {
  CHECK(pauli_periodicity(to_tableau(pptest::single_gate(1, Gate::x(0)))) == 0);
  CHECK(pauli_periodicity(to_tableau(pptest::single_gate(1, Gate::s(0)))) == 1);

  std::size_t expected[] = {3, 3, 4, 4, 4, 4};
  for (unsigned n = 3; n <= 8; ++n)
    CHECK(pauli_periodicity(to_tableau(sch(n))) == expected[n - 3]);

  // SWAP: label map is an involution, so periodicity 1
  Circuit swap(2);
  swap.add(Gate::cnot(0, 1));
  swap.add(Gate::cnot(1, 0));
  swap.add(Gate::cnot(0, 1));
  CHECK(pauli_periodicity(to_tableau(swap)) == 1);
}

TEST_CASE("predicted_cu_level") {
  auto lvl = predicted_cu_level(to_tableau(pptest::single_gate(1, Gate::s(0))));
  REQUIRE(lvl.has_value());
  CHECK(lvl->level == 3);
  CHECK(lvl->strict);

  lvl = predicted_cu_level(to_tableau(sch(3)));
  CHECK(lvl->level == 5);

  lvl = predicted_cu_level(to_tableau(pptest::single_gate(1, Gate::x(0))));
  CHECK(lvl->level == 2);
  CHECK_FALSE(lvl->strict);  // m = 0: controlled Pauli is Clifford, no strictness claim

  Circuit swap(2);
  swap.add(Gate::cnot(0, 1));
  swap.add(Gate::cnot(1, 0));
  swap.add(Gate::cnot(0, 1));
  CHECK(predicted_cu_level(to_tableau(swap))->level == 3);
}

TEST_CASE("conjugation preserves commutation relations") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    Circuit c = random_clifford_circuit(3, 15, rng);
    CliffordTableau tab = to_tableau(c);
    PauliString p = pptest::random_pauli(3, rng), q = pptest::random_pauli(3, rng);
    CHECK(symplectic_product(tab.conjugate(p), tab.conjugate(q)) == symplectic_product(p, q));
  }
}

TEST_CASE("squaring decrements periodicity") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 25; ++t) {
    std::size_t m = 0;
    Circuit c = pptest::random_periodic_circuit(3, rng, &m);
    CliffordTableau tab = to_tableau(c);
    auto mm = pauli_periodicity(tab);
    REQUIRE(mm.has_value());
    if (*mm >= 1) CHECK(pauli_periodicity(compose(tab, tab)) == *mm - 1);
  }
}

TEST_CASE("tensor periodicity is the max") {
  CliffordTableau s = to_tableau(pptest::single_gate(1, Gate::s(0)));
  CliffordTableau x = to_tableau(pptest::single_gate(1, Gate::x(0)));
  CHECK(pauli_periodicity(tableau_tensor(s, x)) == 1);

  CliffordTableau a = to_tableau(sch(3)), b = to_tableau(sch(4));
  CHECK(pauli_periodicity(tableau_tensor(a, b)) == 3);
}

TEST_CASE("periodicity ceiling and inverse invariance") {
  std::mt19937_64 rng(99);
  for (unsigned n = 2; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      Circuit c = random_clifford_circuit(n, 6 * n, rng);
      CliffordTableau tab = to_tableau(c);
      auto m = pauli_periodicity(tab);
      if (!m) continue;
      CHECK(*m <= ceil_log2(2 * n));
      CHECK(pauli_periodicity(tableau_inverse(tab)) == *m);
    }
  }
}

TEST_CASE("tableau inverse composes to identity") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 10; ++t) {
    Circuit c = random_clifford_circuit(3, 14, rng);
    CliffordTableau tab = to_tableau(c);
    CHECK(compose(tab, tableau_inverse(tab)).is_identity());
    CHECK(compose(tableau_inverse(tab), tab).is_identity());
  }
}

TEST_CASE("sign entries are 0 or 2") {
  std::mt19937_64 rng(6);
  Circuit c = random_clifford_circuit(4, 30, rng);
  for (int s : to_tableau(c).signs()) CHECK((s == 0 || s == 2));
}
