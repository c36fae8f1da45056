#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/errors.hpp"

namespace pauliperiod {

using cplx = std::complex<double>;

// Double-precision statevector; qubit 0 is the most significant bit of the
// amplitude index, matching the exact matrices.
struct StateVector {
  unsigned q = 0;
  std::vector<cplx> amps;

  StateVector() = default;
  explicit StateVector(unsigned q_) : q(q_), amps(std::size_t(1) << q_, 0.0) {}

  static StateVector basis(unsigned q, std::size_t index) {
    StateVector s(q);
    s.amps[index] = 1.0;
    return s;
  }

  static StateVector plus_all(unsigned q) {
    StateVector s(q);
    double a = std::pow(0.5, q * 0.5);
    for (auto& x : s.amps) x = a;
    return s;
  }

  double norm() const {
    double n2 = 0;
    for (const auto& a : amps) n2 += std::norm(a);
    return std::sqrt(n2);
  }

  void normalize() {
    double n = norm();
    for (auto& a : amps) a /= n;
  }
};

inline cplx inner(const StateVector& a, const StateVector& b) {
  cplx acc = 0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.q + b.q);
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    for (std::size_t j = 0; j < b.amps.size(); ++j)
      out.amps[(i << b.q) | j] = a.amps[i] * b.amps[j];
  return out;
}

inline std::vector<cplx> gate_sv_matrix(const Gate& g) {
  const double pi = 3.14159265358979323846;
  const double irt2 = std::sqrt(0.5);
  const cplx I(0, 1);
  switch (g.kind) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -I, I, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {irt2, irt2, irt2, -irt2};
    case GateKind::S: return {1, 0, 0, I};
    case GateKind::SDG: return {1, 0, 0, -I};
    case GateKind::SX: {
      cplx p = cplx(0.5, 0.5), m = cplx(0.5, -0.5);
      return {p, m, m, p};
    }
    case GateKind::T: return {1, 0, 0, std::polar(1.0, pi / 4)};
    case GateKind::TDG: return {1, 0, 0, std::polar(1.0, -pi / 4)};
    case GateKind::ZPOW: return {1, 0, 0, std::polar(1.0, pi / std::pow(2.0, double(g.zk)))};
    case GateKind::CNOT: return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    case GateKind::CZ: return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    case GateKind::CS: return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, I};
    case GateKind::CH: {
      std::vector<cplx> m(16, 0.0);
      m[0 * 4 + 0] = 1;
      m[1 * 4 + 1] = 1;
      m[2 * 4 + 2] = irt2;
      m[2 * 4 + 3] = irt2;
      m[3 * 4 + 2] = irt2;
      m[3 * 4 + 3] = -irt2;
      return m;
    }
    case GateKind::CCX: {
      std::vector<cplx> m(64, 0.0);
      for (int i = 0; i < 6; ++i) m[i * 8 + i] = 1;
      m[6 * 8 + 7] = 1;
      m[7 * 8 + 6] = 1;
      return m;
    }
  }
  throw Error("unreachable gate kind");
}

// Applies one gate, optionally with the gate's qubits remapped through
// `qubit_map` (local index -> global index). Checks norm preservation to
// 1e-10 after the update.
inline void apply_gate(StateVector& sv, const Gate& g,
                       const std::vector<unsigned>* qubit_map = nullptr) {
  unsigned a = static_cast<unsigned>(g.qubits.size());
  std::size_t d = std::size_t(1) << a;
  std::vector<cplx> m = gate_sv_matrix(g);
  std::vector<std::size_t> bit(a);
  for (unsigned j = 0; j < a; ++j) {
    unsigned q = qubit_map ? (*qubit_map)[g.qubits[j]] : g.qubits[j];
    if (q >= sv.q) throw DimensionError("apply_gate: qubit out of range");
    bit[j] = std::size_t(1) << (sv.q - 1 - q);
  }
  std::size_t mask = 0;
  for (auto b : bit) mask |= b;
  std::vector<std::size_t> offs(d, 0);
  for (std::size_t l = 0; l < d; ++l)
    for (unsigned j = 0; j < a; ++j)
      if (l & (std::size_t(1) << (a - 1 - j))) offs[l] |= bit[j];
  std::vector<cplx> v(d), w(d);
  std::size_t dim = sv.amps.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < d; ++l) v[l] = sv.amps[base | offs[l]];
    for (std::size_t lo = 0; lo < d; ++lo) {
      cplx acc = 0;
      for (std::size_t li = 0; li < d; ++li) acc += m[lo * d + li] * v[li];
      w[lo] = acc;
    }
    for (std::size_t l = 0; l < d; ++l) sv.amps[base | offs[l]] = w[l];
  }
  double n = sv.norm();
  if (std::abs(n - 1.0) > 1e-10)
    throw Error("apply_gate: norm drifted to " + std::to_string(n));
}

inline StateVector apply(StateVector sv, const Circuit& c) {
  if (c.width != sv.q) throw DimensionError("apply: circuit width mismatch");
  for (const Gate& g : c.gates) apply_gate(sv, g);
  return sv;
}

// Applies a circuit to a subset of qubits of a larger register.
inline void apply_on(StateVector& sv, const Circuit& c, const std::vector<unsigned>& qubit_map) {
  if (qubit_map.size() != c.width) throw DimensionError("apply_on: map width mismatch");
  for (const Gate& g : c.gates) apply_gate(sv, g, &qubit_map);
}

}  // namespace pauliperiod
