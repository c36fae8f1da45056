#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pauliperiod/catalyst.hpp"
#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "test_helpers.hpp"

using namespace pauliperiod;

namespace {

// Second, naive evaluator: full embedded gate matrices multiplied in order.
ExactUnitary naive_to_exact(const Circuit& c) {
  std::size_t dim = std::size_t(1) << c.width;
  ExactUnitary u = ExactUnitary::identity(dim);
  for (const Gate& g : c.gates) {
    ExactUnitary local = gate_exact_matrix(g);
    unsigned a = static_cast<unsigned>(g.qubits.size());
    ExactUnitary full(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t cc = 0; cc < dim; ++cc) {
        // r, cc agree away from the gate bits?
        std::size_t mask = 0;
        std::size_t lr = 0, lc = 0;
        for (unsigned j = 0; j < a; ++j) {
          std::size_t bit = std::size_t(1) << (c.width - 1 - g.qubits[j]);
          mask |= bit;
          if (r & bit) lr |= std::size_t(1) << (a - 1 - j);
          if (cc & bit) lc |= std::size_t(1) << (a - 1 - j);
        }
        if ((r & ~mask) == (cc & ~mask)) full.at(r, cc) = local.at(lr, lc);
      }
    u = full * u;
  }
  return u;
}

ExactUnitary exact_of(Gate g, unsigned width) {
  return to_exact(pptest::single_gate(width, std::move(g)));
}

}  // namespace

TEST_CASE("exact gate algebra") {
  ExactUnitary h = exact_of(Gate::h(0), 1);
  CHECK((h * h).is_identity());

  ExactUnitary t = exact_of(Gate::t(0), 1);
  CHECK(t.pow(8).is_identity());
  CHECK_FALSE(t.pow(4).is_identity());

  // controlled(X) is CNOT
  CHECK(controlled(exact_of(Gate::x(0), 1)) == gate_exact_matrix(Gate::cnot(0, 1)));

  // SX = H S H
  Circuit hsh(1);
  hsh.add(Gate::h(0));
  hsh.add(Gate::s(0));
  hsh.add(Gate::h(0));
  CHECK(exact_of(Gate::sx(0), 1) == to_exact(hsh));
}

TEST_CASE("dagger is the exact inverse for circuit unitaries") {
  std::mt19937_64 rng(300);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = random_clifford_circuit(2, 10, rng);
    ExactUnitary u = to_exact(c);
    CHECK((u.dagger() * u).is_identity());
  }
}

TEST_CASE("to_exact agrees with the naive evaluator") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 6; ++trial) {
    Circuit c = random_clifford_circuit(3, 8, rng);
    c.add(Gate::t(rng() % 3));
    c.add(Gate::ccx(0, 1, 2));
    CHECK(to_exact(c) == naive_to_exact(c));
  }
}

TEST_CASE("is_pauli_up_to_phase") {
  CHECK(is_pauli_up_to_phase(ExactUnitary::identity(4)).has_value());
  auto d = is_pauli_up_to_phase(ExactUnitary::identity(4));
  CHECK(d->pauli == PauliString::identity(2));
  CHECK(d->residual.is_one());

  // S² = Z exactly
  ExactUnitary s = exact_of(Gate::s(0), 1);
  auto dz = is_pauli_up_to_phase(s * s);
  REQUIRE(dz.has_value());
  CHECK(dz->pauli == PauliString::single_z(1, 0));
  CHECK(dz->residual.is_one());

  CHECK_FALSE(is_pauli_up_to_phase(exact_of(Gate::h(0), 1)).has_value());

  // ω·I is a Pauli only up to a non-{±1,±i} phase
  auto dw = is_pauli_up_to_phase(ExactUnitary::identity(2).scaled(RingElem::omega_pow(1)));
  REQUIRE(dw.has_value());
  CHECK(dw->residual == RingElem::omega_pow(1));
  CHECK_FALSE(is_exact_pauli(ExactUnitary::identity(2).scaled(RingElem::omega_pow(1))));

  // decomposition round-trips on random Paulis
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 40; ++trial) {
    PauliString p = pptest::random_pauli(3, rng);
    auto dd = is_pauli_up_to_phase(pauli_to_exact(p));
    REQUIRE(dd.has_value());
    CHECK(dd->pauli == p);
    CHECK(dd->residual.is_one());
  }
}

TEST_CASE("order_of_exact") {
  CHECK(order_of_exact(exact_of(Gate::z(0), 1), 8) == 2);
  CHECK(order_of_exact(exact_of(Gate::s(0), 1), 8) == 4);
  CHECK_FALSE(order_of_exact(exact_of(Gate::t(0), 1), 4).has_value());

  // SCH_3 has periodicity 3 and exact order 2^(3+q); the observed q is a
  // regression constant.
  ExactUnitary u = to_exact(sch(3));
  auto ord = order_of_exact(u, 64);
  REQUIRE(ord.has_value());
  auto p8 = is_pauli_up_to_phase(u.pow(8));
  REQUIRE(p8.has_value());  // periodicity 3 means U^8 is Pauli up to phase
  CHECK(*ord == 8);         // q = 0: the Pauli power is the identity
  CHECK(u.pow(8).is_identity());
}

TEST_CASE("eigenphase_spectrum") {
  auto spec_s = eigenphase_spectrum(exact_of(Gate::s(0), 1));
  CHECK(spec_s.size() == 2);
  CHECK(spectrum_contains(spec_s, 0, 1));  // phase 0
  CHECK(spectrum_contains(spec_s, 1, 2));  // phase π/2

  auto spec_z = eigenphase_spectrum(exact_of(Gate::z(0), 1));
  CHECK(spectrum_contains(spec_z, 0, 1));
  CHECK(spectrum_contains(spec_z, 1, 1));  // phase π

  // the searched 2-qubit instance really carries e^{iπ/4}
  Circuit inst = find_eigenphase_clifford(2, 2);
  auto spec = eigenphase_spectrum(to_exact(inst));
  CHECK(spectrum_contains(spec, 1, 4));

  // multiplicities add up to the dimension
  std::size_t total = 0;
  for (const auto& p : spec) total += p.mult;
  CHECK(total == 4);
}

TEST_CASE("controlled identities hold exactly") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 8; ++trial) {
    unsigned n = 1 + rng() % 3;
    Circuit cu_c = random_clifford_circuit(n, 6, rng);
    Circuit cv_c = random_clifford_circuit(n, 6, rng);
    ExactUnitary u = to_exact(cu_c), v = to_exact(cv_c);
    ExactUnitary cu = controlled(u), cv = controlled(v);
    std::size_t dim = u.dim();

    // C(UV) = CU·CV
    CHECK(controlled(u * v) == cu * cv);

    ExactUnitary xi = pauli_to_exact(PauliString::single_x(n + 1, 0));  // X ⊗ I
    ExactUnitary iu_dag = block_diag(u.dagger(), u.dagger());           // I ⊗ U†
    // CU·(X⊗I) = (I⊗U†)·C(U²)·(X⊗I)·CU
    CHECK(cu * xi == ((iu_dag * controlled(u * u)) * xi) * cu);

    // CU·(I⊗V) = C(U V U† V†)·(I⊗V)·CU
    ExactUnitary iv = block_diag(v, v);
    ExactUnitary comm = ((u * v) * u.dagger()) * v.dagger();
    CHECK(cu * iv == (controlled(comm) * iv) * cu);

    // W_m is diagonal in the control qubit with the ±2^(m-1) powers of U as
    // blocks; the inverse alternates sides with m.
    ExactUnitary w = ((xi * cu) * xi) * cu.dagger();
    std::size_t e = 1;
    for (int m = 1; m <= 3; ++m) {
      ExactUnitary upow = u.pow(e);
      ExactUnitary expected =
          (m % 2 == 1) ? block_diag(upow, upow.dagger()) : block_diag(upow.dagger(), upow);
      CHECK(w == expected);
      w = ((xi * w) * xi) * w.dagger();
      e *= 2;
    }
    (void)dim;
  }
}

TEST_CASE("tableau and exact periodicity cross-validate") {
  std::mt19937_64 rng(304);
  for (unsigned n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Circuit c = random_clifford_circuit(n, 5 * n + 3, rng);
      CliffordTableau tab = to_tableau(c);
      ExactUnitary u = to_exact(c);
      auto m = pauli_periodicity(tab);
      for (std::size_t t = 0; t <= ceil_log2(2 * n) + 1; ++t) {
        bool exact_pauli = is_pauli_up_to_phase(u.pow(std::size_t(1) << t)).has_value();
        bool tab_pauli = m.has_value() && *m <= t;
        CHECK(exact_pauli == tab_pauli);
      }
    }
  }
}
