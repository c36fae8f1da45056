#pragma once

#include <vector>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/pauli.hpp"

namespace pauliperiod {

// ---------------------------------------------------------------------------
// Exact lowering: Cliffords to {H, S, CNOT, X, Z} from the tableau, and
// controlled Cliffords to {H, S, SDG, T, TDG, CNOT}.
// ---------------------------------------------------------------------------

struct SynthReport {
  std::size_t input_gates = 0;
  std::size_t output_gates = 0;
  std::size_t t_count = 0;
  bool verified = false;
  RingElem residual_global_phase;  // exact matrix equality up to this phase
};

namespace detail {

// Gates recorded here are left-multiplied onto the unitary being reduced; the
// emitted circuit is the reversed, inverted record.
struct SweepRec {
  std::vector<PauliString> img;
  std::size_t n;
  std::vector<Gate> rec;

  explicit SweepRec(const CliffordTableau& t) : n(t.num_qubits()) {
    img.reserve(2 * n);
    for (std::size_t g = 0; g < 2 * n; ++g) img.push_back(t.image(g));
  }

  void apply(Gate g) {
    for (auto& p : img) p = TableauBuilder::conjugate_by_gate(p, g);
    rec.push_back(std::move(g));
  }
};

}  // namespace detail

/**
 * Tableau sweep: reduces the tableau to the identity with left-applied
 * {H, S, CNOT} conjugations qubit by qubit, clears the residual Pauli with an
 * X/Z layer, and emits the inverted record. Output tableau equals the input
 * exactly, signs included; gate count O(n²).
 */
inline Circuit decompose_clifford(const CliffordTableau& t) {
  std::size_t n = t.num_qubits();
  detail::SweepRec s(t);

  for (unsigned i = 0; i < n; ++i) {
    // Reduce the image of X_i to ±X_i.
    {
      const PauliString p = s.img[i];
      for (unsigned j = i; j < n; ++j) {
        if (p.z.get(j)) s.apply(p.x.get(j) ? Gate::s(j) : Gate::h(j));
      }
      PauliString q = s.img[i];  // now X-type
      if (!q.x.get(i)) {
        for (unsigned j = i + 1; j < n; ++j)
          if (q.x.get(j)) {
            s.apply(Gate::cnot(j, i));
            break;
          }
      }
      q = s.img[i];
      for (unsigned j = 0; j < n; ++j)
        if (j != i && q.x.get(j)) s.apply(Gate::cnot(i, j));
    }
    // Reduce the image of Z_i to ±Z_i while fixing X_i.
    {
      PauliString q = s.img[n + i];
      if (q.x.get(i)) {  // Y at the pivot: conjugate by SX = HSH
        s.apply(Gate::h(i));
        s.apply(Gate::s(i));
        s.apply(Gate::h(i));
      }
      q = s.img[n + i];
      for (unsigned j = 0; j < n; ++j) {
        if (j == i) continue;
        bool xb = q.x.get(j), zb = q.z.get(j);
        if (!xb && !zb) continue;
        if (xb && zb) {
          s.apply(Gate::s(j));
          s.apply(Gate::h(j));
        } else if (xb) {
          s.apply(Gate::h(j));
        }
        s.apply(Gate::cnot(j, i));
      }
    }
  }

  // Residual is a Pauli layer: image X_j = ±X_j, image Z_j = ±Z_j. Clear the
  // signs with Z/X conjugations.
  for (unsigned j = 0; j < n; ++j) {
    if (s.img[j].phase == 2) s.apply(Gate::z(j));
    if (s.img[n + j].phase == 2) s.apply(Gate::x(j));
  }

  // Sanity: the sweep must land exactly on the identity tableau.
  for (unsigned j = 0; j < n; ++j) {
    if (s.img[j] != PauliString::single_x(n, j) || s.img[n + j] != PauliString::single_z(n, j))
      throw Error("decompose_clifford: sweep failed to reach identity");
  }

  Circuit out(static_cast<unsigned>(n));
  for (auto it = s.rec.rbegin(); it != s.rec.rend(); ++it) {
    switch (it->kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z:
      case GateKind::CNOT: out.add(*it); break;
      case GateKind::S:  // S† = S·Z
        out.add(Gate::s(it->qubits[0]));
        out.add(Gate::z(it->qubits[0]));
        break;
      default: throw Error("decompose_clifford: unexpected sweep gate");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Template library for controlled-Clifford lowering. Each template is a gate
// list plus the specification matrix it must reproduce with global phase
// exactly 1; every template is validated on first use, not trusted.
// ---------------------------------------------------------------------------

namespace detail {

struct LowerTemplates {
  std::vector<Gate> cs, ch, ccx, cz;

  LowerTemplates() {
    // CS(c, t) = CNOT·(I⊗T†)·CNOT·(T⊗T) with both orderings temporal.
    cs = {Gate::cnot(0, 1), Gate::tdg(1), Gate::cnot(0, 1), Gate::t(0), Gate::t(1)};
    // CH(c, t) = (I⊗R†)·CZ·(I⊗R) with R† = S†HT†; two T-type gates.
    ch = {Gate::s(1),   Gate::h(1),   Gate::t(1), Gate::cnot(0, 1),
          Gate::tdg(1), Gate::h(1),   Gate::sdg(1)};
    // Standard 7-T Toffoli.
    ccx = {Gate::h(2),        Gate::cnot(1, 2), Gate::tdg(2),     Gate::cnot(0, 2),
           Gate::t(2),        Gate::cnot(1, 2), Gate::tdg(2),     Gate::cnot(0, 2),
           Gate::t(1),        Gate::t(2),       Gate::h(2),       Gate::cnot(0, 1),
           Gate::t(0),        Gate::tdg(1),     Gate::cnot(0, 1)};
    cz = {Gate::h(1), Gate::cnot(0, 1), Gate::h(1)};

    validate(cs, 2, gate_exact_matrix(Gate::cs(0, 1)), "CS");
    validate(ch, 2, gate_exact_matrix(Gate::ch(0, 1)), "CH");
    validate(ccx, 3, gate_exact_matrix(Gate::ccx(0, 1, 2)), "CCX");
    validate(cz, 2, gate_exact_matrix(Gate::cz(0, 1)), "CZ");
  }

  static const LowerTemplates& instance() {
    static LowerTemplates t;
    return t;
  }

 private:
  static void validate(const std::vector<Gate>& gates, unsigned width,
                       const ExactUnitary& want, const char* name) {
    Circuit c(width);
    for (const Gate& g : gates) c.add(g);
    if (to_exact(c) != want)
      throw Error(std::string("lowering template ") + name + " failed exact validation");
  }
};

inline void emit_mapped(Circuit& out, const std::vector<Gate>& tpl,
                        const std::vector<unsigned>& qmap) {
  for (const Gate& g : tpl) {
    Gate h = g;
    for (auto& q : h.qubits) q = qmap[q];
    out.add(h);
  }
}

// Single-qubit Cliffords over {H, S, SDG}: exact, no global phase.
inline void emit_single_clifford(Circuit& out, const Gate& g) {
  unsigned q = g.qubits[0];
  switch (g.kind) {
    case GateKind::H: out.add(Gate::h(q)); break;
    case GateKind::S: out.add(Gate::s(q)); break;
    case GateKind::SDG: out.add(Gate::sdg(q)); break;
    case GateKind::Z:
      out.add(Gate::s(q));
      out.add(Gate::s(q));
      break;
    case GateKind::X:  // X = H Z H
      out.add(Gate::h(q));
      out.add(Gate::s(q));
      out.add(Gate::s(q));
      out.add(Gate::h(q));
      break;
    case GateKind::Y:  // Y = S X S†
      out.add(Gate::sdg(q));
      out.add(Gate::h(q));
      out.add(Gate::s(q));
      out.add(Gate::s(q));
      out.add(Gate::h(q));
      out.add(Gate::s(q));
      break;
    case GateKind::SX:  // H S H
      out.add(Gate::h(q));
      out.add(Gate::s(q));
      out.add(Gate::h(q));
      break;
    default: throw UnsupportedGateError(std::string("lower_controlled: unsupported gate ") +
                                        kind_name(g.kind));
  }
}

}  // namespace detail

/**
 * Lowers {CS, CH, CCX, CNOT, CZ} plus uncontrolled Cliffords to the exact
 * Clifford+T alphabet {H, S, SDG, T, TDG, CNOT}. The output matrix equals the
 * input matrix with global phase exactly 1.
 */
inline Circuit lower_controlled(const Circuit& c) {
  const auto& tpl = detail::LowerTemplates::instance();
  Circuit out(c.width);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT: out.add(g); break;
      case GateKind::CS: detail::emit_mapped(out, tpl.cs, g.qubits); break;
      case GateKind::CH: detail::emit_mapped(out, tpl.ch, g.qubits); break;
      case GateKind::CCX: detail::emit_mapped(out, tpl.ccx, g.qubits); break;
      case GateKind::CZ: detail::emit_mapped(out, tpl.cz, g.qubits); break;
      case GateKind::T: out.add(g); break;
      case GateKind::TDG: out.add(g); break;
      default: detail::emit_single_clifford(out, g); break;
    }
  }
  return out;
}

inline std::size_t t_count(const Circuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::T || g.kind == GateKind::TDG) ++n;
  return n;
}

// controlled(c) followed by lower_controlled, verified exactly against
// diag(I, U).
inline std::pair<Circuit, SynthReport> synth_jumped(const Circuit& c) {
  Circuit cu = controlled(c);
  Circuit lowered = lower_controlled(cu);
  SynthReport rep;
  rep.input_gates = c.gates.size();
  rep.output_gates = lowered.gates.size();
  rep.t_count = t_count(lowered);
  ExactUnitary want = controlled(to_exact(c));
  ExactUnitary got = to_exact(lowered);
  rep.verified = (got == want);
  rep.residual_global_phase = RingElem::one();
  if (!rep.verified) {
    auto ratio = global_phase_ratio(got, want);
    if (ratio) rep.residual_global_phase = *ratio;
  }
  return {std::move(lowered), rep};
}

}  // namespace pauliperiod
