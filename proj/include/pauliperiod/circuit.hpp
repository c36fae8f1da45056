#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pauliperiod/errors.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/pauli.hpp"

namespace pauliperiod {

enum class GateKind { X, Y, Z, H, S, SDG, SX, T, TDG, ZPOW, CNOT, CZ, CS, CH, CCX };

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::SDG: return "SDG";
    case GateKind::SX: return "SX";
    case GateKind::T: return "T";
    case GateKind::TDG: return "TDG";
    case GateKind::ZPOW: return "ZPOW";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CS: return "CS";
    case GateKind::CH: return "CH";
    case GateKind::CCX: return "CCX";
  }
  return "?";
}

inline unsigned kind_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CH: return 2;
    case GateKind::CCX: return 3;
    default: return 1;
  }
}

// One gate application. Controls come first in `qubits`. For ZPOW, `zk` is
// the exponent parameter: ZPOW(k) = Z^(1/2^k) = diag(1, e^{iπ/2^k}).
struct Gate {
  GateKind kind;
  unsigned zk = 0;
  std::vector<unsigned> qubits;

  Gate(GateKind k, std::vector<unsigned> qs) : kind(k), qubits(std::move(qs)) {}
  Gate(GateKind k, unsigned z, std::vector<unsigned> qs)
      : kind(k), zk(z), qubits(std::move(qs)) {}

  static Gate x(unsigned q) { return Gate(GateKind::X, {q}); }
  static Gate y(unsigned q) { return Gate(GateKind::Y, {q}); }
  static Gate z(unsigned q) { return Gate(GateKind::Z, {q}); }
  static Gate h(unsigned q) { return Gate(GateKind::H, {q}); }
  static Gate s(unsigned q) { return Gate(GateKind::S, {q}); }
  static Gate sdg(unsigned q) { return Gate(GateKind::SDG, {q}); }
  static Gate sx(unsigned q) { return Gate(GateKind::SX, {q}); }
  static Gate t(unsigned q) { return Gate(GateKind::T, {q}); }
  static Gate tdg(unsigned q) { return Gate(GateKind::TDG, {q}); }
  static Gate zpow(unsigned k, unsigned q) { return Gate(GateKind::ZPOW, k, {q}); }
  static Gate cnot(unsigned c, unsigned t) { return Gate(GateKind::CNOT, {c, t}); }
  static Gate cz(unsigned c, unsigned t) { return Gate(GateKind::CZ, {c, t}); }
  static Gate cs(unsigned c, unsigned t) { return Gate(GateKind::CS, {c, t}); }
  static Gate ch(unsigned c, unsigned t) { return Gate(GateKind::CH, {c, t}); }
  static Gate ccx(unsigned a, unsigned b, unsigned t) { return Gate(GateKind::CCX, {a, b, t}); }

  bool operator==(const Gate& o) const {
    return kind == o.kind && zk == o.zk && qubits == o.qubits;
  }
};

// Ordered gate list; list order is temporal order (applied left to right), so
// the matrix of the circuit multiplies the gate matrices right to left.
struct Circuit {
  unsigned width = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(unsigned w) : width(w) {}
  Circuit(unsigned w, std::vector<Gate> gs) : width(w), gates(std::move(gs)) { validate(); }

  void add(Gate g) {
    gates.push_back(std::move(g));
    validate_gate(gates.back(), gates.size());
  }

  void validate() const {
    for (std::size_t i = 0; i < gates.size(); ++i) validate_gate(gates[i], i + 1);
  }

  bool operator==(const Circuit& o) const { return width == o.width && gates == o.gates; }

 private:
  void validate_gate(const Gate& g, std::size_t pos) const {
    if (g.qubits.size() != kind_arity(g.kind))
      throw ParseError("gate " + std::to_string(pos) + ": wrong qubit count for " +
                       kind_name(g.kind));
    for (unsigned q : g.qubits)
      if (q >= width)
        throw ParseError("gate " + std::to_string(pos) + ": qubit index " + std::to_string(q) +
                         " out of range (width " + std::to_string(width) + ")");
    for (std::size_t a = 0; a < g.qubits.size(); ++a)
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b)
        if (g.qubits[a] == g.qubits[b])
          throw ParseError("gate " + std::to_string(pos) + ": repeated qubit index");
  }
};

// ---------------------------------------------------------------------------
// Text format: first line `qubits N`; one gate per line `KIND idx [idx2
// [idx3]]`; ZPOW takes its exponent before the qubit index; `#` starts a
// comment; blank lines ignored.
// ---------------------------------------------------------------------------

inline std::optional<GateKind> kind_from_name(const std::string& s) {
  static const std::array<GateKind, 15> kinds = {
      GateKind::X,   GateKind::Y,  GateKind::Z,  GateKind::H,    GateKind::S,
      GateKind::SDG, GateKind::SX, GateKind::T,  GateKind::TDG,  GateKind::ZPOW,
      GateKind::CNOT, GateKind::CZ, GateKind::CS, GateKind::CH,  GateKind::CCX};
  for (GateKind k : kinds)
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

inline Circuit parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  Circuit c;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "qubits") fail("expected `qubits N` header");
      long n = -1;
      if (!(ls >> n) || n < 1) fail("bad qubit count");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      c.width = static_cast<unsigned>(n);
      have_header = true;
      continue;
    }
    auto kind = kind_from_name(tok);
    if (!kind) fail("unknown gate kind `" + tok + "`");
    Gate g(*kind, {});
    if (*kind == GateKind::ZPOW) {
      long k = -1;
      if (!(ls >> k) || k < 0) fail("ZPOW needs a nonnegative exponent parameter");
      g.zk = static_cast<unsigned>(k);
    }
    unsigned arity = kind_arity(*kind);
    for (unsigned i = 0; i < arity; ++i) {
      long q = -1;
      if (!(ls >> q) || q < 0) fail("expected qubit index");
      if (q >= static_cast<long>(c.width)) fail("qubit index out of range");
      g.qubits.push_back(static_cast<unsigned>(q));
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    for (std::size_t a = 0; a < g.qubits.size(); ++a)
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b)
        if (g.qubits[a] == g.qubits[b]) fail("repeated qubit index");
    c.gates.push_back(std::move(g));
  }
  if (!have_header) {
    lineno = 1;
    fail("missing `qubits N` header");
  }
  return c;
}

inline std::string serialize(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.width) + "\n";
  for (const Gate& g : c.gates) {
    out += kind_name(g.kind);
    if (g.kind == GateKind::ZPOW) out += " " + std::to_string(g.zk);
    for (unsigned q : g.qubits) out += " " + std::to_string(q);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Controlled circuit: fresh control qubit prepended as index 0, existing
// indices shifted up by one; each gate is replaced by an exactly equivalent
// controlled form, so the matrix of the result is diag(I, U).
// ---------------------------------------------------------------------------

inline Circuit controlled(const Circuit& c) {
  Circuit out(c.width + 1);
  for (const Gate& g : c.gates) {
    auto q = [&](unsigned i) { return g.qubits[i] + 1; };
    switch (g.kind) {
      case GateKind::X: out.add(Gate::cnot(0, q(0))); break;
      case GateKind::Z: out.add(Gate::cz(0, q(0))); break;
      case GateKind::S: out.add(Gate::cs(0, q(0))); break;
      case GateKind::H: out.add(Gate::ch(0, q(0))); break;
      case GateKind::SDG:  // C(S†) = CS³
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        break;
      case GateKind::Y:  // Y = S X S†
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::cnot(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        break;
      case GateKind::SX:  // SX = H S H
        out.add(Gate::ch(0, q(0)));
        out.add(Gate::cs(0, q(0)));
        out.add(Gate::ch(0, q(0)));
        break;
      case GateKind::CNOT: out.add(Gate::ccx(0, q(0), q(1))); break;
      case GateKind::CZ:  // CZ = (I⊗H) CNOT (I⊗H)
        out.add(Gate::ch(0, q(1)));
        out.add(Gate::ccx(0, q(0), q(1)));
        out.add(Gate::ch(0, q(1)));
        break;
      default:
        throw UnsupportedControlError(std::string("no controlled form for gate kind ") +
                                      kind_name(g.kind));
    }
  }
  return out;
}

inline Circuit inverse_circuit(const Circuit& c) {
  Circuit out(c.width);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    const Gate& g = *it;
    switch (g.kind) {
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::H:
      case GateKind::CNOT:
      case GateKind::CZ:
      case GateKind::CH:
      case GateKind::CCX: out.add(g); break;
      case GateKind::S: out.add(Gate::sdg(g.qubits[0])); break;
      case GateKind::SDG: out.add(Gate::s(g.qubits[0])); break;
      case GateKind::T: out.add(Gate::tdg(g.qubits[0])); break;
      case GateKind::TDG: out.add(Gate::t(g.qubits[0])); break;
      case GateKind::SX:  // SX† = H S† H
        out.add(Gate::h(g.qubits[0]));
        out.add(Gate::sdg(g.qubits[0]));
        out.add(Gate::h(g.qubits[0]));
        break;
      case GateKind::CS:
        out.add(g);
        out.add(g);
        out.add(g);
        break;
      default:
        throw UnsupportedGateError(std::string("no inverse in alphabet for ") +
                                   kind_name(g.kind));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semantic maps
// ---------------------------------------------------------------------------

// Builds a tableau by conjugating generator images gate by gate.
class TableauBuilder {
 public:
  explicit TableauBuilder(std::size_t n) : n_(n) {
    images_.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) images_.push_back(PauliString::single_x(n, q));
    for (std::size_t q = 0; q < n; ++q) images_.push_back(PauliString::single_z(n, q));
  }

  void apply(const Gate& g) {
    for (auto& img : images_) img = conjugate_by_gate(img, g);
  }

  CliffordTableau finish() {
    return CliffordTableau::from_images(n_, std::move(images_));
  }

  // G P G† for a single Clifford gate: strip the gate-qubit factors of P,
  // conjugate them through the gate's generator images, and splice back.
  static PauliString conjugate_by_gate(const PauliString& p, const Gate& g) {
    std::size_t n = p.n;
    PauliString local = PauliString::identity(n);
    PauliString rest = p;
    for (unsigned q : g.qubits) {
      if (p.x.get(q)) local = pauli_mul(local, gate_image_x(g, q, n));
      rest.x.set(q, false);
    }
    for (unsigned q : g.qubits) {
      if (p.z.get(q)) local = pauli_mul(local, gate_image_z(g, q, n));
      rest.z.set(q, false);
    }
    rest.x.xor_with(local.x);
    rest.z.xor_with(local.z);
    rest.phase = (rest.phase + local.phase) % 4;
    return rest;
  }

 private:
  std::size_t n_;
  std::vector<PauliString> images_;

  static PauliString gate_image_x(const Gate& g, unsigned q, std::size_t n) {
    using PS = PauliString;
    switch (g.kind) {
      case GateKind::H: return PS::single_z(n, q);
      case GateKind::S: return PS::single_y(n, q);
      case GateKind::SDG: {
        PS y = PS::single_y(n, q);
        y.phase = 3;  // -Y
        return y;
      }
      case GateKind::SX: return PS::single_x(n, q);
      case GateKind::X: return PS::single_x(n, q);
      case GateKind::Y: {
        PS x = PS::single_x(n, q);
        x.phase = 2;
        return x;
      }
      case GateKind::Z: {
        PS x = PS::single_x(n, q);
        x.phase = 2;
        return x;
      }
      case GateKind::ZPOW:
        if (g.zk == 0) return gate_image_x(Gate::z(q), q, n);
        if (g.zk == 1) return gate_image_x(Gate::s(q), q, n);
        break;
      case GateKind::CNOT:
        if (q == g.qubits[0])
          return pauli_mul(PS::single_x(n, g.qubits[0]), PS::single_x(n, g.qubits[1]));
        return PS::single_x(n, q);
      case GateKind::CZ:
        if (q == g.qubits[0])
          return pauli_mul(PS::single_x(n, g.qubits[0]), PS::single_z(n, g.qubits[1]));
        return pauli_mul(PS::single_z(n, g.qubits[0]), PS::single_x(n, g.qubits[1]));
      default: break;
    }
    throw NonCliffordError(std::string("gate kind ") + kind_name(g.kind) +
                           " has no tableau (not Clifford)");
  }

  static PauliString gate_image_z(const Gate& g, unsigned q, std::size_t n) {
    using PS = PauliString;
    switch (g.kind) {
      case GateKind::H: return PS::single_x(n, q);
      case GateKind::S:
      case GateKind::SDG: return PS::single_z(n, q);
      case GateKind::SX: {
        PS y = PS::single_y(n, q);
        y.phase = 3;  // SX Z SX† = -Y
        return y;
      }
      case GateKind::X: {
        PS z = PS::single_z(n, q);
        z.phase = 2;
        return z;
      }
      case GateKind::Y: {
        PS z = PS::single_z(n, q);
        z.phase = 2;
        return z;
      }
      case GateKind::Z: return PS::single_z(n, q);
      case GateKind::ZPOW:
        if (g.zk <= 1) return PS::single_z(n, q);
        break;
      case GateKind::CNOT:
        if (q == g.qubits[1])
          return pauli_mul(PS::single_z(n, g.qubits[0]), PS::single_z(n, g.qubits[1]));
        return PS::single_z(n, q);
      case GateKind::CZ: return PS::single_z(n, q);
      default: break;
    }
    throw NonCliffordError(std::string("gate kind ") + kind_name(g.kind) +
                           " has no tableau (not Clifford)");
  }
};

inline bool is_clifford_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::T:
    case GateKind::TDG:
    case GateKind::CS:
    case GateKind::CH:
    case GateKind::CCX: return false;
    case GateKind::ZPOW: return g.zk <= 1;
    default: return true;
  }
}

inline bool is_clifford_circuit(const Circuit& c) {
  return std::all_of(c.gates.begin(), c.gates.end(), is_clifford_gate);
}

inline CliffordTableau to_tableau(const Circuit& c) {
  TableauBuilder b(c.width);
  for (const Gate& g : c.gates) {
    if (!is_clifford_gate(g))
      throw NonCliffordError(std::string("to_tableau: non-Clifford gate ") + kind_name(g.kind));
    b.apply(g);
  }
  return b.finish();
}

// Local exact matrix of a gate; throws RingUnrepresentable for ZPOW k >= 3.
inline ExactUnitary gate_exact_matrix(const Gate& g) {
  auto one = RingElem::one();
  auto mi = RingElem::i();
  switch (g.kind) {
    case GateKind::X: {
      ExactUnitary m(2);
      m.at(0, 1) = one;
      m.at(1, 0) = one;
      return m;
    }
    case GateKind::Y: {
      ExactUnitary m(2);
      m.at(0, 1) = -mi;
      m.at(1, 0) = mi;
      return m;
    }
    case GateKind::Z: {
      ExactUnitary m(2);
      m.at(0, 0) = one;
      m.at(1, 1) = -one;
      return m;
    }
    case GateKind::H: {
      ExactUnitary m(2);
      auto r = RingElem::inv_sqrt2();
      m.at(0, 0) = r;
      m.at(0, 1) = r;
      m.at(1, 0) = r;
      m.at(1, 1) = -r;
      return m;
    }
    case GateKind::S: {
      ExactUnitary m(2);
      m.at(0, 0) = one;
      m.at(1, 1) = mi;
      return m;
    }
    case GateKind::SDG: {
      ExactUnitary m(2);
      m.at(0, 0) = one;
      m.at(1, 1) = -mi;
      return m;
    }
    case GateKind::SX: {
      ExactUnitary m(2);
      RingElem half_p(1, 0, 1, 0, 2);   // (1+i)/2
      RingElem half_m(1, 0, -1, 0, 2);  // (1-i)/2
      m.at(0, 0) = half_p;
      m.at(0, 1) = half_m;
      m.at(1, 0) = half_m;
      m.at(1, 1) = half_p;
      return m;
    }
    case GateKind::T: {
      ExactUnitary m(2);
      m.at(0, 0) = one;
      m.at(1, 1) = RingElem::omega_pow(1);
      return m;
    }
    case GateKind::TDG: {
      ExactUnitary m(2);
      m.at(0, 0) = one;
      m.at(1, 1) = RingElem::omega_pow(-1);
      return m;
    }
    case GateKind::ZPOW: {
      if (g.zk == 0) return gate_exact_matrix(Gate::z(0));
      if (g.zk == 1) return gate_exact_matrix(Gate::s(0));
      if (g.zk == 2) return gate_exact_matrix(Gate::t(0));
      throw RingUnrepresentableError("ZPOW " + std::to_string(g.zk) +
                                     " is not representable in Z[ω, 1/√2]");
    }
    case GateKind::CNOT: {
      ExactUnitary m(4);
      m.at(0, 0) = one;
      m.at(1, 1) = one;
      m.at(2, 3) = one;
      m.at(3, 2) = one;
      return m;
    }
    case GateKind::CZ: {
      ExactUnitary m = ExactUnitary::identity(4);
      m.at(3, 3) = -one;
      return m;
    }
    case GateKind::CS: {
      ExactUnitary m = ExactUnitary::identity(4);
      m.at(3, 3) = mi;
      return m;
    }
    case GateKind::CH: return controlled(gate_exact_matrix(Gate::h(0)));
    case GateKind::CCX: {
      ExactUnitary m = ExactUnitary::identity(8);
      m.at(6, 6) = RingElem::zero();
      m.at(7, 7) = RingElem::zero();
      m.at(6, 7) = one;
      m.at(7, 6) = one;
      return m;
    }
  }
  throw Error("unreachable gate kind");
}

// U ← G·U where G embeds the gate at its qubit positions (qubit 0 = MSB).
inline void apply_exact_gate_left(ExactUnitary& u, const Gate& g, unsigned width) {
  ExactUnitary m = gate_exact_matrix(g);
  unsigned a = static_cast<unsigned>(g.qubits.size());
  std::size_t d = std::size_t(1) << a;
  std::size_t dim = u.dim();
  std::vector<std::size_t> bit(a);
  for (unsigned j = 0; j < a; ++j) bit[j] = std::size_t(1) << (width - 1 - g.qubits[j]);
  std::size_t mask = 0;
  for (auto b : bit) mask |= b;
  auto spread = [&](std::size_t l) {
    std::size_t r = 0;
    for (unsigned j = 0; j < a; ++j)
      if (l & (std::size_t(1) << (a - 1 - j))) r |= bit[j];
    return r;
  };
  std::vector<std::size_t> offs(d);
  for (std::size_t l = 0; l < d; ++l) offs[l] = spread(l);
  std::vector<RingElem> v(d), w(d);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t col = 0; col < dim; ++col) {
      for (std::size_t l = 0; l < d; ++l) v[l] = u.at(base | offs[l], col);
      for (std::size_t lo = 0; lo < d; ++lo) {
        RingElem acc;
        for (std::size_t li = 0; li < d; ++li) {
          if (m.at(lo, li).is_zero() || v[li].is_zero()) continue;
          acc += m.at(lo, li) * v[li];
        }
        w[lo] = acc;
      }
      for (std::size_t l = 0; l < d; ++l) u.at(base | offs[l], col) = w[l];
    }
  }
}

inline ExactUnitary to_exact(const Circuit& c) {
  ExactUnitary u = ExactUnitary::identity(std::size_t(1) << c.width);
  for (const Gate& g : c.gates) apply_exact_gate_left(u, g, c.width);
  return u;
}

}  // namespace pauliperiod
