#pragma once

#include <random>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "pauliperiod/pauli.hpp"

namespace pptest {

using namespace pauliperiod;

inline Circuit single_gate(unsigned width, Gate g) {
  Circuit c(width);
  c.add(std::move(g));
  return c;
}

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliString p = PauliString::identity(n);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> ph(0, 3);
  for (std::size_t q = 0; q < n; ++q) {
    p.x.set(q, bit(rng));
    p.z.set(q, bit(rng));
  }
  p.phase = ph(rng);
  return p;
}

// Random invertible matrix over GF(2) via random row operations on I.
inline F2Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  F2Matrix m = F2Matrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (std::size_t step = 0; step < 4 * n * n; ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    if (rng() & 1)
      m.xor_row(a, b);
    else
      m.swap_rows(a, b);
  }
  return m;
}

// Conjugate of a known periodic circuit by a random Clifford circuit; the
// result is a Clifford circuit with the same periodicity.
inline Circuit random_periodic_circuit(unsigned n, std::mt19937_64& rng, std::size_t* m_out) {
  std::vector<Circuit> seeds;
  if (n >= 2) {
    seeds.push_back(sch(n));
    seeds.push_back(jordan_cnot_string(n));
    seeds.push_back(brickwork_cnot(n));
  }
  {
    Circuit s(n);
    s.add(Gate::s(0));
    seeds.push_back(s);
    Circuit x(n);
    x.add(Gate::x(n - 1));
    seeds.push_back(x);
  }
  const Circuit& base = seeds[rng() % seeds.size()];
  Circuit conj = random_clifford_circuit(n, 3 * n + 2, rng);
  Circuit out(n);
  for (const Gate& g : conj.gates) out.add(g);
  for (const Gate& g : base.gates) out.add(g);
  for (const Gate& g : inverse_circuit(conj).gates) out.add(g);
  if (m_out) {
    auto m = pauli_periodicity(to_tableau(base));
    *m_out = m.value();
  }
  return out;
}

}  // namespace pptest
