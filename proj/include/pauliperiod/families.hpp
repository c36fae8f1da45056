#pragma once

#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/f2matrix.hpp"
#include "pauliperiod/pauli.hpp"

namespace pauliperiod {

// ---------------------------------------------------------------------------
// Explicit Pauli-periodic families. Qubit indexing is 0-based in code and in
// the file format.
// ---------------------------------------------------------------------------

// H on qubit 0, the ascending CNOT cascade, then SX on the last qubit. Uses
// exactly n+1 gates and has periodicity ceil(log2(2n)) for n >= 3.
inline Circuit sch(unsigned n) {
  if (n < 2) throw std::invalid_argument("sch: n must be >= 2");
  Circuit c(n);
  c.add(Gate::h(0));
  for (unsigned j = 0; j + 1 < n; ++j) c.add(Gate::cnot(j, j + 1));
  c.add(Gate::sx(n - 1));
  return c;
}

// The CNOT string whose linear part is a single Jordan block with ones on the
// diagonal and superdiagonal.
inline Circuit jordan_cnot_string(unsigned n) {
  if (n < 2) throw std::invalid_argument("jordan_cnot_string: n must be >= 2");
  Circuit c(n);
  for (unsigned j = 1; j < n; ++j) c.add(Gate::cnot(j, j - 1));
  return c;
}

// Two commuting CNOT layers; constant depth for every n.
inline Circuit brickwork_cnot(unsigned n) {
  if (n < 2) throw std::invalid_argument("brickwork_cnot: n must be >= 2");
  Circuit c(n);
  for (unsigned j = 1; 2 * j <= n; ++j) c.add(Gate::cnot(2 * j - 1, 2 * j - 2));
  for (unsigned j = 1; 2 * j + 1 <= n; ++j) c.add(Gate::cnot(2 * j, 2 * j - 1));
  return c;
}

// ---------------------------------------------------------------------------
// Block-matrix regression for the SCH family: builds A_n, B_n, C_n, D_n
// entrywise, compares the assembled symplectic matrix with the tableau of
// sch(n), and checks the nilpotency index and the Jordan-chain identities.
// ---------------------------------------------------------------------------

struct AppendixReport {
  unsigned n = 0;
  bool blocks_match = false;
  std::size_t nilindex = 0;
  std::size_t nilindex_expected = 0;
  bool chain_z_checked = false;  // chain identities need n >= 3
  bool chain_z_ok = false;
  bool chain_even_x_ok = false;
  double millis = 0;
  bool pass = false;
};

// Entrywise block formulas, 1-indexed in i, j.
inline F2Matrix sch_block_matrix(unsigned n) {
  F2Matrix m(2 * n, 2 * n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      bool a = (i >= j && j > 1);
      bool b = (j == 1) || (i == j && i == n);
      bool cc = (i == 1 && j == 1);
      bool d = (i == j && i > 1) || (j == i + 1);
      if (a) m.set(i - 1, j - 1, true);
      if (b) m.set(i - 1, n + j - 1, true);
      if (cc) m.set(n + i - 1, j - 1, true);
      if (d) m.set(n + i - 1, n + j - 1, true);
    }
  }
  return m;
}

inline AppendixReport appendix_check(unsigned n) {
  if (n < 2) throw std::invalid_argument("appendix_check: n must be >= 2");
  auto t0 = std::chrono::steady_clock::now();
  AppendixReport r;
  r.n = n;
  F2Matrix m = sch_block_matrix(n);
  r.blocks_match = (m == to_tableau(sch(n)).f());
  F2Matrix nil = m + F2Matrix::identity(2 * n);
  r.nilindex = nilpotency_index(nil);
  r.nilindex_expected = 2 * n;

  if (n >= 3) {
    r.chain_z_checked = true;
    BitVec enz(2 * n);
    enz.set(n + (n - 1), true);  // e_n^Z
    BitVec v = enz;
    for (unsigned s = 0; s + 1 < n; ++s) v = nil.apply(v);  // N^(n-1)
    BitVec e1z(2 * n);
    e1z.set(n, true);  // e_1^Z
    r.chain_z_ok = (v == e1z);
    v = nil.apply(nil.apply(v));  // N^(n+1)
    BitVec even(2 * n);
    for (unsigned i = 2; i <= n; i += 2) even.set(i - 1, true);  // Σ_{even i} e_i^X
    r.chain_even_x_ok = (v == even);
  }

  auto t1 = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.pass = r.blocks_match && r.nilindex == r.nilindex_expected &&
           (!r.chain_z_checked || (r.chain_z_ok && r.chain_even_x_ok));
  return r;
}

// ---------------------------------------------------------------------------
// Affine (permutation) Cliffords: U|a> = |Ma + phi>.
// ---------------------------------------------------------------------------

struct AffineClifford {
  F2Matrix m;   // n x n, invertible
  BitVec phi;   // n bits

  AffineClifford(F2Matrix m_, BitVec phi_) : m(std::move(m_)), phi(std::move(phi_)) {
    if (!m.is_square() || m.rows() != phi.size())
      throw DimensionError("AffineClifford: shape mismatch");
    if (!m.inverse()) throw SingularMatrixError("AffineClifford: M not invertible");
  }
};

// Gaussian elimination of M into CNOT row operations, then X gates for phi.
inline Circuit affine_to_circuit(const AffineClifford& a) {
  std::size_t n = a.m.rows();
  Circuit c(static_cast<unsigned>(n));
  // Reduce M to I by row ops row_t += row_c, recording them; each op is the
  // matrix of CNOT(control c, target t), and the ops multiply up to M in
  // reverse recording order.
  F2Matrix w = a.m;
  std::vector<std::pair<unsigned, unsigned>> ops;  // (control, target)
  for (std::size_t col = 0; col < n; ++col) {
    if (!w.get(col, col)) {
      std::size_t piv = col + 1;
      while (piv < n && !w.get(piv, col)) ++piv;
      if (piv == n) throw SingularMatrixError("affine_to_circuit: singular M");
      w.xor_row(col, piv);
      ops.emplace_back(static_cast<unsigned>(piv), static_cast<unsigned>(col));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && w.get(i, col)) {
        w.xor_row(i, col);
        ops.emplace_back(static_cast<unsigned>(col), static_cast<unsigned>(i));
      }
    }
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) c.add(Gate::cnot(it->first, it->second));
  for (std::size_t q = 0; q < n; ++q)
    if (a.phi.get(q)) c.add(Gate::x(static_cast<unsigned>(q)));
  return c;
}

inline AffineClifford circuit_to_affine(const Circuit& c) {
  std::size_t n = c.width;
  F2Matrix m = F2Matrix::identity(n);
  BitVec phi(n);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT: {
        unsigned ctl = g.qubits[0], tgt = g.qubits[1];
        // a_t += a_c applied after the map so far
        for (std::size_t j = 0; j < n; ++j)
          if (m.get(ctl, j)) m.flip(tgt, j);
        if (phi.get(ctl)) phi.flip(tgt);
        break;
      }
      case GateKind::X: phi.flip(g.qubits[0]); break;
      default:
        throw NonPermutationGateError(std::string("circuit_to_affine: gate ") +
                                      kind_name(g.kind) + " is not a permutation gate");
    }
  }
  return AffineClifford(std::move(m), std::move(phi));
}

// diag(M, (M^-1)^T): the symplectic matrix of the Clifford permutation.
inline F2Matrix perm_symplectic(const AffineClifford& a) {
  std::size_t n = a.m.rows();
  auto minv = a.m.inverse();
  if (!minv) throw SingularMatrixError("perm_symplectic: singular M");
  F2Matrix mt = minv->transpose();
  F2Matrix f(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.m.get(i, j)) f.set(i, j, true);
      if (mt.get(i, j)) f.set(n + i, n + j, true);
    }
  return f;
}

// ---------------------------------------------------------------------------
// Random symplectic sampling. Heuristic: a random {H, S, CNOT} circuit of
// length 10n² applied to the identity label map. Not exactly uniform over
// Sp(2n, F2); coverage is all the periodicity stress test needs.
// ---------------------------------------------------------------------------

inline Circuit random_clifford_circuit(unsigned n, std::size_t len, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_clifford_circuit: n must be >= 1");
  Circuit c(n);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<unsigned> qubit(0, n - 1);
  for (std::size_t i = 0; i < len; ++i) {
    int k = n == 1 ? (kind(rng) % 2) : kind(rng);
    if (k == 0) {
      c.add(Gate::h(qubit(rng)));
    } else if (k == 1) {
      c.add(Gate::s(qubit(rng)));
    } else {
      unsigned a = qubit(rng), b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(Gate::cnot(a, b));
    }
  }
  return c;
}

// Left-multiplies the label-map rows for one gate; phases are irrelevant for
// periodicity so only F is tracked.
inline void apply_gate_to_f(F2Matrix& f, const Gate& g, unsigned n) {
  switch (g.kind) {
    case GateKind::H: f.swap_rows(g.qubits[0], n + g.qubits[0]); break;
    case GateKind::S: f.xor_row(n + g.qubits[0], g.qubits[0]); break;
    case GateKind::CNOT: {
      unsigned c = g.qubits[0], t = g.qubits[1];
      f.xor_row(t, c);          // x_t += x_c
      f.xor_row(n + c, n + t);  // z_c += z_t
      break;
    }
    default: throw Error("apply_gate_to_f: unsupported gate");
  }
}

inline F2Matrix random_symplectic(unsigned n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit c = random_clifford_circuit(n, 10ull * n * n, rng);
  F2Matrix f = F2Matrix::identity(2 * n);
  for (const Gate& g : c.gates) apply_gate_to_f(f, g, n);
  return f;
}

struct SearchReport {
  unsigned n = 0;
  std::size_t trials = 0;
  uint64_t seed = 0;
  std::map<std::size_t, std::size_t> histogram;  // periodicity -> count
  std::size_t non_periodic = 0;
  std::size_t max_observed = 0;
  std::size_t bound = 0;  // ceil(log2(2n))
  bool pass = false;
};

inline SearchReport search_max_periodicity(unsigned n, std::size_t trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("search_max_periodicity: trials >= 1");
  SearchReport r;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.bound = ceil_log2(2 * n);
  for (std::size_t t = 0; t < trials; ++t) {
    // per-trial seeding keeps results independent of evaluation order
    uint64_t trial_seed = seed ^ (0x9e3779b97f4a7c15ull * (t + 1));
    F2Matrix f = random_symplectic(n, trial_seed);
    auto m = two_power_order(f);
    if (!m) {
      ++r.non_periodic;
      continue;
    }
    ++r.histogram[*m];
    r.max_observed = std::max(r.max_observed, *m);
  }
  r.pass = r.max_observed <= r.bound;
  return r;
}

// periodicity(c1 ⊗ c2) == max(m1, m2)
inline bool tensor_periodicity_check(const Circuit& c1, const Circuit& c2) {
  CliffordTableau t1 = to_tableau(c1), t2 = to_tableau(c2);
  auto m1 = pauli_periodicity(t1), m2 = pauli_periodicity(t2);
  if (!m1 || !m2)
    throw std::invalid_argument("tensor_periodicity_check: inputs must be Pauli-periodic");
  auto m = pauli_periodicity(tableau_tensor(t1, t2));
  return m && *m == std::max(*m1, *m2);
}

}  // namespace pauliperiod
