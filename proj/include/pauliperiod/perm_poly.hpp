#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pauliperiod/circuit.hpp"
#include "pauliperiod/errors.hpp"

namespace pauliperiod {

// ---------------------------------------------------------------------------
// Bit-level semantics for permutation gates and ANF extraction of coordinate
// functions. Basis index convention matches the exact matrices: qubit j is
// bit (width-1-j) of the index.
// ---------------------------------------------------------------------------

inline bool is_permutation_gate(const Gate& g) {
  return g.kind == GateKind::X || g.kind == GateKind::CNOT || g.kind == GateKind::CCX;
}

// Evaluates the circuit on every basis bitstring by bit operations; no
// matrices. Result maps input index -> output index and is a bijection.
inline std::vector<uint32_t> permutation_of(const Circuit& c) {
  if (c.width > 20) throw DimensionError("permutation_of: width too large");
  for (const Gate& g : c.gates)
    if (!is_permutation_gate(g))
      throw NonPermutationGateError(std::string("permutation_of: gate ") + kind_name(g.kind) +
                                    " is phase-bearing");
  uint32_t size = uint32_t(1) << c.width;
  std::vector<uint32_t> perm(size);
  for (uint32_t a = 0; a < size; ++a) {
    uint32_t v = a;
    for (const Gate& g : c.gates) {
      auto bit = [&](unsigned q) { return uint32_t(1) << (c.width - 1 - q); };
      switch (g.kind) {
        case GateKind::X: v ^= bit(g.qubits[0]); break;
        case GateKind::CNOT:
          if (v & bit(g.qubits[0])) v ^= bit(g.qubits[1]);
          break;
        case GateKind::CCX:
          if ((v & bit(g.qubits[0])) && (v & bit(g.qubits[1]))) v ^= bit(g.qubits[2]);
          break;
        default: break;
      }
    }
    perm[a] = v;
  }
  return perm;
}

// ANF over GF(2): the set of monomials, each a bitmask of participating
// variables (variable v = bit v of the table index).
struct BoolPoly {
  unsigned n = 0;
  std::vector<uint32_t> monomials;  // sorted masks with coefficient 1

  int degree() const {
    int d = 0;
    for (uint32_t m : monomials) d = std::max(d, std::popcount(m));
    return d;
  }

  bool eval(uint32_t point) const {
    int acc = 0;
    for (uint32_t m : monomials)
      if ((point & m) == m) acc ^= 1;
    return acc;
  }

  bool operator==(const BoolPoly& o) const { return n == o.n && monomials == o.monomials; }
};

// Möbius transform over GF(2), in place per bit: coefficient of monomial S is
// ⊕_{T ⊆ S} f(T).
inline BoolPoly anf(const std::vector<uint8_t>& table) {
  std::size_t len = table.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw DimensionError("anf: table length must be a power of 2");
  unsigned n = static_cast<unsigned>(ceil_log2(len));
  if (n > 24) throw DimensionError("anf: too many variables");
  std::vector<uint8_t> a = table;
  for (unsigned b = 0; b < n; ++b) {
    uint32_t step = uint32_t(1) << b;
    for (uint32_t x = 0; x < len; ++x)
      if (x & step) a[x] ^= a[x ^ step];
  }
  BoolPoly p;
  p.n = n;
  for (uint32_t m = 0; m < len; ++m)
    if (a[m] & 1) p.monomials.push_back(m);
  return p;
}

// Coordinate ANFs of a permutation: entry i is the polynomial computing bit
// of qubit i of the output (qubit 0 = most significant index bit).
inline std::vector<BoolPoly> coordinate_anfs(const std::vector<uint32_t>& perm, unsigned width) {
  std::vector<BoolPoly> out;
  std::size_t size = perm.size();
  for (unsigned q = 0; q < width; ++q) {
    uint32_t bit = uint32_t(1) << (width - 1 - q);
    std::vector<uint8_t> table(size);
    for (std::size_t a = 0; a < size; ++a) table[a] = (perm[a] & bit) ? 1 : 0;
    out.push_back(anf(table));
  }
  return out;
}

inline std::vector<uint32_t> invert_permutation(const std::vector<uint32_t>& perm) {
  std::vector<uint32_t> inv(perm.size());
  for (uint32_t a = 0; a < perm.size(); ++a) inv[perm[a]] = a;
  return inv;
}

struct QuadraticReport {
  unsigned width = 0;
  int max_forward_degree = 0;
  int max_inverse_degree = 0;
  bool pass = false;  // both directions degree <= 2
};

// Builds P · C(U) · Q as a reversible circuit and checks that every forward
// and inverse coordinate polynomial has degree at most 2.
inline QuadraticReport check_jumped_perm_quadratic(const Circuit& u, const Circuit& p,
                                                   const Circuit& q) {
  Circuit cu = controlled(u);
  if (p.width != cu.width || q.width != cu.width)
    throw DimensionError("check_jumped_perm_quadratic: dressing width must be u.width + 1");
  Circuit combined(cu.width);
  for (const Gate& g : q.gates) combined.add(g);
  for (const Gate& g : cu.gates) combined.add(g);
  for (const Gate& g : p.gates) combined.add(g);
  auto perm = permutation_of(combined);
  auto inv = invert_permutation(perm);
  QuadraticReport r;
  r.width = combined.width;
  for (const BoolPoly& poly : coordinate_anfs(perm, combined.width))
    r.max_forward_degree = std::max(r.max_forward_degree, poly.degree());
  for (const BoolPoly& poly : coordinate_anfs(inv, combined.width))
    r.max_inverse_degree = std::max(r.max_inverse_degree, poly.degree());
  r.pass = r.max_forward_degree <= 2 && r.max_inverse_degree <= 2;
  return r;
}

}  // namespace pauliperiod
