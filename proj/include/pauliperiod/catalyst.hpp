#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "pauliperiod/pauli.hpp"
#include "pauliperiod/statevector.hpp"

namespace pauliperiod {

// ---------------------------------------------------------------------------
// Desk-scale simulation of the catalyst protocol: projector states, QPE-based
// catalyst preparation with post-selection, and phase kickback. Everything
// runs at the ideal, un-encoded level.
// ---------------------------------------------------------------------------

struct ProjectorResult {
  StateVector state;
  double weight = 0;  // 2-norm of the sum before normalization
};

// Normalized Σ_{r<2^m'} U^r |ψ0⟩ with m' = max(periodicity, 1); two terms for
// the canonical |H>-style projectors of Pauli targets.
inline ProjectorResult projector_state(const Circuit& c, const StateVector& psi0) {
  if (c.width != psi0.q) throw DimensionError("projector_state: width mismatch");
  auto m = pauli_periodicity(to_tableau(c));
  if (!m) throw std::invalid_argument("projector_state: circuit is not Pauli-periodic");
  std::size_t terms = std::size_t(1) << std::max<std::size_t>(*m, 1);
  StateVector acc(psi0.q);
  StateVector cur = psi0;
  for (std::size_t r = 0; r < terms; ++r) {
    for (std::size_t i = 0; i < acc.amps.size(); ++i) acc.amps[i] += cur.amps[i];
    if (r + 1 < terms) cur = apply(cur, c);
  }
  ProjectorResult res;
  res.weight = acc.norm();
  if (res.weight < 1e-12) throw ZeroProjectionError("projector_state: sum vanished");
  acc.normalize();
  res.state = std::move(acc);
  return res;
}

struct CatalystResult {
  StateVector state;        // post-selected target register
  double success_prob = 0;  // exact Born probability of the accepted outcome
  double eigen_residual = 0;  // || U ψ - e^{iπ/2^k} ψ ||
};

/**
 * QPE-based preparation of the e^{iπ/2^k} eigenstate of the circuit's
 * unitary.
 *
 * k+1 ancillas start in |+⟩; ancilla j (1-based) controls U^(2^(j-1)) with
 * the powers applied by circuit repetition; the ancilla register then gets an
 * inverse QFT and is post-selected on the outcome encoding the integer 1 —
 * ancilla 1 carries the least significant bit — which corresponds to the
 * eigenvalue e^{2πi/2^(k+1)} = e^{iπ/2^k}.
 */
inline CatalystResult prepare_catalyst(const Circuit& c, unsigned k, const StateVector& psi0) {
  if (c.width != psi0.q) throw DimensionError("prepare_catalyst: width mismatch");
  unsigned t = k + 1;
  unsigned n = c.width;
  if (t + n > 24) throw DimensionError("prepare_catalyst: register too large");

  // Precondition: the exact spectrum contains π/2^k.
  auto spec = eigenphase_spectrum(to_exact(c));
  if (!spectrum_contains(spec, 1, 1l << k))
    throw NoSuchEigenphaseError("prepare_catalyst: no e^{iπ/2^" + std::to_string(k) +
                                "} eigenphase");

  StateVector sv = tensor(StateVector::plus_all(t), psi0);
  Circuit cu = controlled(c);
  for (unsigned j = 1; j <= t; ++j) {
    std::vector<unsigned> map(n + 1);
    map[0] = j - 1;  // ancilla j is register qubit j-1
    for (unsigned i = 0; i < n; ++i) map[1 + i] = t + i;
    std::size_t reps = std::size_t(1) << (j - 1);
    for (std::size_t r = 0; r < reps; ++r) apply_on(sv, cu, map);
  }

  // Inverse QFT over the ancilla value a = Σ_j bit(ancilla j) 2^(j-1),
  // applied as the explicit DFT matrix on the ancilla index.
  const double pi = 3.14159265358979323846;
  std::size_t nanc = std::size_t(1) << t;
  std::size_t ntgt = std::size_t(1) << n;
  auto anc_value = [&](std::size_t anc_bits) {
    // anc_bits: the top t bits of the state index (qubit 0 = MSB); ancilla j
    // lives at register qubit j-1, i.e. index bit t-j of the ancilla block.
    std::size_t a = 0;
    for (unsigned j = 1; j <= t; ++j)
      if (anc_bits & (std::size_t(1) << (t - j))) a |= std::size_t(1) << (j - 1);
    return a;
  };
  std::vector<cplx> out(sv.amps.size(), 0.0);
  std::vector<std::size_t> value_of(nanc);
  for (std::size_t b = 0; b < nanc; ++b) value_of[b] = anc_value(b);
  for (std::size_t tau = 0; tau < ntgt; ++tau) {
    for (std::size_t jb = 0; jb < nanc; ++jb) {
      std::size_t j = value_of[jb];
      cplx acc = 0;
      for (std::size_t ab = 0; ab < nanc; ++ab) {
        std::size_t a = value_of[ab];
        double ang = -2.0 * pi * double(a) * double(j) / double(nanc);
        acc += std::polar(1.0, ang) * sv.amps[(ab << n) | tau];
      }
      out[(jb << n) | tau] = acc / std::sqrt(double(nanc));
    }
  }
  sv.amps = std::move(out);

  // Post-select the ancilla outcome with value 1.
  std::size_t accept_bits = 0;
  for (std::size_t b = 0; b < nanc; ++b)
    if (value_of[b] == 1) accept_bits = b;
  CatalystResult res;
  StateVector target(n);
  double prob = 0;
  for (std::size_t tau = 0; tau < ntgt; ++tau) {
    cplx amp = sv.amps[(accept_bits << n) | tau];
    prob += std::norm(amp);
    target.amps[tau] = amp;
  }
  res.success_prob = prob;
  if (prob < 1e-12)
    throw PostSelectImpossibleError("prepare_catalyst: post-selection probability " +
                                    std::to_string(prob));
  for (auto& a : target.amps) a /= std::sqrt(prob);

  // The accepted branch must be an eigenvector of U with phase π/2^k.
  StateVector evolved = apply(target, c);
  cplx phase = std::polar(1.0, pi / std::pow(2.0, double(k)));
  double resid = 0;
  for (std::size_t i = 0; i < ntgt; ++i)
    resid += std::norm(evolved.amps[i] - phase * target.amps[i]);
  res.eigen_residual = std::sqrt(resid);
  if (res.eigen_residual > 1e-8)
    throw Error("prepare_catalyst: post-selected state is not the target eigenvector");
  res.state = std::move(target);
  return res;
}

struct KickbackReport {
  double eigen_residual = 0;      // precondition residual of the catalyst
  double full_fidelity = 0;       // vs (Z^{1/2^k}|+⟩) ⊗ catalyst
  double catalyst_fidelity = 0;   // catalyst factor after the kickback
  bool pass = false;
};

// Prepares |+⟩ ⊗ catalyst, applies the controlled circuit once, and verifies
// that the control picked up Z^{1/2^k} while the catalyst is unconsumed.
inline KickbackReport kickback(const StateVector& catalyst, const Circuit& c, unsigned k) {
  if (catalyst.q != c.width) throw DimensionError("kickback: width mismatch");
  const double pi = 3.14159265358979323846;
  StateVector evolved = apply(catalyst, c);
  cplx phase = std::polar(1.0, pi / std::pow(2.0, double(k)));
  double resid = 0;
  for (std::size_t i = 0; i < catalyst.amps.size(); ++i)
    resid += std::norm(evolved.amps[i] - phase * catalyst.amps[i]);
  resid = std::sqrt(resid);
  if (resid > 1e-6)
    throw NotAnEigenstateError("kickback: catalyst is not an e^{iπ/2^k} eigenstate (residual " +
                               std::to_string(resid) + ")");

  KickbackReport rep;
  rep.eigen_residual = resid;

  StateVector full = tensor(StateVector::plus_all(1), catalyst);
  Circuit cu = controlled(c);
  full = apply(full, cu);

  StateVector ctrl(1);
  ctrl.amps[0] = std::sqrt(0.5);
  ctrl.amps[1] = std::sqrt(0.5) * phase;  // Z^{1/2^k} |+⟩
  StateVector expected = tensor(ctrl, catalyst);
  rep.full_fidelity = fidelity(expected, full);

  // Catalyst factor via the partial trace over the control.
  std::size_t ntgt = catalyst.amps.size();
  double cat_fid = 0;
  for (int b = 0; b < 2; ++b) {
    cplx ov = 0;
    for (std::size_t i = 0; i < ntgt; ++i)
      ov += std::conj(catalyst.amps[i]) * full.amps[(std::size_t(b) << catalyst.q) | i];
    cat_fid += std::norm(ov);
  }
  rep.catalyst_fidelity = cat_fid;
  rep.pass = rep.full_fidelity >= 1 - 1e-8 && rep.catalyst_fidelity >= 1 - 1e-10;
  return rep;
}

// Weight of the e^{2πiθ} eigencomponent of ψ under the circuit's unitary,
// θ = 1/2^(k+1), computed from the spectral projector (1/N) Σ_t e^{-2πiθt} U^t.
inline double eigencomponent_weight(const Circuit& c, unsigned k, std::size_t order,
                                    const StateVector& psi) {
  const double pi = 3.14159265358979323846;
  double theta = 1.0 / std::pow(2.0, double(k + 1));
  StateVector cur = psi;
  cplx acc = 0;
  for (std::size_t t = 0; t < order; ++t) {
    acc += std::polar(1.0, -2.0 * pi * theta * double(t)) * inner(psi, cur);
    if (t + 1 < order) cur = apply(cur, c);
  }
  return (acc / double(order)).real();
}

// Deterministic search for the smallest {H, S, CNOT} product on `n` qubits
// whose exact spectrum contains e^{iπ/2^k} with nonvanishing weight in
// |+...+⟩, so the QPE preparation from the default initial state can
// post-select it. Instances are restricted to periodicity k-1, the matched
// case where the Pauli power carries a ±i phase and the level of CU equals
// the level of Z^{1/2^k}. Search order: breadth-first over generator
// sequences.
inline Circuit find_eigenphase_clifford(unsigned n, unsigned k, unsigned max_len = 6) {
  std::vector<Gate> gens;
  for (unsigned q = 0; q < n; ++q) gens.push_back(Gate::h(q));
  for (unsigned q = 0; q < n; ++q) gens.push_back(Gate::s(q));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (a != b) gens.push_back(Gate::cnot(a, b));

  StateVector plus = StateVector::plus_all(n);
  std::vector<std::vector<Gate>> frontier = {{}};
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Gate>> next;
    for (const auto& seq : frontier) {
      for (const Gate& g : gens) {
        std::vector<Gate> cand = seq;
        cand.push_back(g);
        Circuit c(n, cand);
        if (k >= 1 && pauli_periodicity(to_tableau(c)) != k - 1) {
          next.push_back(std::move(cand));
          continue;
        }
        ExactUnitary u = to_exact(c);
        auto ord = order_of_exact(u, std::size_t(1) << (k + 3));
        if (ord && *ord % (std::size_t(1) << (k + 1)) == 0) {
          auto spec = eigenphase_spectrum(u);
          if (spectrum_contains(spec, 1, 1l << k) &&
              eigencomponent_weight(c, k, *ord, plus) > 1e-3)
            return c;
        }
        next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  throw NoSuchEigenphaseError("find_eigenphase_clifford: no instance up to length " +
                              std::to_string(max_len));
}

}  // namespace pauliperiod
