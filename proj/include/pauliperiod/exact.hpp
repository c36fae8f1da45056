#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pauliperiod/errors.hpp"
#include "pauliperiod/pauli.hpp"
#include "pauliperiod/ring.hpp"

namespace pauliperiod {

/**
 * Dense matrix with entries in Z[ω, 1/√2]. This is the exact carrier for
 * every phase-sensitive computation: hierarchy membership, controlled-gate
 * identities, synthesis verification. Basis index convention: qubit 0 is the
 * most significant bit of the row/column index.
 */
class ExactUnitary {
 public:
  ExactUnitary() : dim_(0) {}
  explicit ExactUnitary(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static ExactUnitary identity(std::size_t dim) {
    ExactUnitary u(dim);
    for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = RingElem::one();
    return u;
  }

  std::size_t dim() const { return dim_; }

  RingElem& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const RingElem& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  bool operator==(const ExactUnitary& o) const { return dim_ == o.dim_ && e_ == o.e_; }
  bool operator!=(const ExactUnitary& o) const { return !(*this == o); }

  ExactUnitary operator*(const ExactUnitary& o) const {
    if (dim_ != o.dim_) throw DimensionError("ExactUnitary mul: dimension mismatch");
    ExactUnitary r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const RingElem& lik = at(i, k);
        if (lik.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          const RingElem& rkj = o.at(k, j);
          if (rkj.is_zero()) continue;
          r.at(i, j) += lik * rkj;
        }
      }
    }
    return r;
  }

  ExactUnitary dagger() const {
    ExactUnitary r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
  }

  ExactUnitary scaled(const RingElem& s) const {
    ExactUnitary r(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }

  ExactUnitary tensor(const ExactUnitary& o) const {
    ExactUnitary r(dim_ * o.dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (at(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < o.dim_; ++k)
          for (std::size_t l = 0; l < o.dim_; ++l) {
            if (o.at(k, l).is_zero()) continue;
            r.at(i * o.dim_ + k, j * o.dim_ + l) = at(i, j) * o.at(k, l);
          }
      }
    return r;
  }

  ExactUnitary pow(std::size_t exp) const {
    ExactUnitary acc = identity(dim_);
    ExactUnitary base = *this;
    while (exp) {
      if (exp & 1) acc = acc * base;
      base = base * base;
      exp >>= 1;
    }
    return acc;
  }

  bool is_identity() const { return *this == identity(dim_); }

  RingElem trace() const {
    RingElem t;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  std::string key() const {
    std::string s = std::to_string(dim_) + ":";
    for (const auto& x : e_) x.append_key(s);
    return s;
  }

 private:
  std::size_t dim_;
  std::vector<RingElem> e_;
};

// diag(A, B)
inline ExactUnitary block_diag(const ExactUnitary& a, const ExactUnitary& b) {
  if (a.dim() != b.dim()) throw DimensionError("block_diag: dimension mismatch");
  ExactUnitary r(2 * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      r.at(i, j) = a.at(i, j);
      r.at(a.dim() + i, a.dim() + j) = b.at(i, j);
    }
  return r;
}

// diag(I, u): the controlled gate with the control as the most significant
// qubit.
inline ExactUnitary controlled(const ExactUnitary& u) {
  return block_diag(ExactUnitary::identity(u.dim()), u);
}

// Exact matrix of i^p X^x Z^z (qubit 0 = most significant bit).
inline ExactUnitary pauli_to_exact(const PauliString& p) {
  std::size_t n = p.n;
  std::size_t dim = std::size_t(1) << n;
  uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    uint64_t bit = uint64_t(1) << (n - 1 - q);
    if (p.x.get(q)) xmask |= bit;
    if (p.z.get(q)) zmask |= bit;
  }
  ExactUnitary u(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    int sgn = std::popcount(c & zmask) & 1;
    u.at(c ^ xmask, c) = RingElem::i_pow(p.phase + 2 * sgn);
  }
  return u;
}

struct PauliDecomp {
  PauliString pauli;      // phase exponent absorbs residuals in {1, i, -1, -i}
  RingElem residual;      // u = residual * i^pauli.phase * X^x Z^z
};

// Structural test: one nonzero entry per column, consistent XOR pattern, sign
// pattern linear in the column index. Returns nullopt when u is not of the
// form λ X^x Z^z.
inline std::optional<PauliDecomp> is_pauli_up_to_phase(const ExactUnitary& u) {
  std::size_t dim = u.dim();
  if (dim == 0 || (dim & (dim - 1)) != 0) throw DimensionError("is_pauli: dim not a power of 2");
  std::size_t n = ceil_log2(dim);
  // locate the single nonzero of column 0
  std::size_t x_mask = dim;
  for (std::size_t r = 0; r < dim; ++r) {
    if (!u.at(r, 0).is_zero()) {
      if (x_mask != dim) return std::nullopt;
      x_mask = r;
    }
  }
  if (x_mask == dim) return std::nullopt;
  RingElem lead = u.at(x_mask, 0);
  std::vector<int> sign(dim, 0);
  sign[0] = 0;
  for (std::size_t c = 1; c < dim; ++c) {
    std::size_t r = c ^ x_mask;
    const RingElem& v = u.at(r, c);
    if (v == lead)
      sign[c] = 0;
    else if (v == -lead)
      sign[c] = 1;
    else
      return std::nullopt;
    // all other entries of the column must vanish
    for (std::size_t rr = 0; rr < dim; ++rr)
      if (rr != r && !u.at(rr, c).is_zero()) return std::nullopt;
  }
  // z from the sign of each single-bit column; then verify linearity
  std::size_t z_mask = 0;
  for (std::size_t b = 0; b < n; ++b)
    if (sign[std::size_t(1) << b]) z_mask |= std::size_t(1) << b;
  for (std::size_t c = 0; c < dim; ++c)
    if ((std::popcount(c & z_mask) & 1) != sign[c]) return std::nullopt;

  PauliString p = PauliString::identity(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t bit = std::size_t(1) << (n - 1 - q);
    if (x_mask & bit) p.x.set(q, true);
    if (z_mask & bit) p.z.set(q, true);
  }
  PauliDecomp d;
  for (int ph = 0; ph < 4; ++ph) {
    if (lead == RingElem::i_pow(ph)) {
      p.phase = ph;
      d.pauli = p;
      d.residual = RingElem::one();
      return d;
    }
  }
  p.phase = 0;
  d.pauli = p;
  d.residual = lead;
  return d;
}

// Exact Pauli group membership (phase in {±1, ±i}).
inline bool is_exact_pauli(const ExactUnitary& u) {
  auto d = is_pauli_up_to_phase(u);
  return d && d->residual.is_one();
}

// Smallest e in [1, cap] with u^e = I, else nullopt.
inline std::optional<std::size_t> order_of_exact(const ExactUnitary& u, std::size_t cap) {
  ExactUnitary w = u;
  for (std::size_t e = 1; e <= cap; ++e) {
    if (w.is_identity()) return e;
    if (e < cap) w = w * u;
  }
  return std::nullopt;
}

struct EigenPhase {
  long num;          // angle = num * π / den, reduced, 0 <= num < 2*den
  long den;
  std::size_t mult;
};

/**
 * Spectrum of a finite-order unitary as exact rational multiples of π.
 *
 * The multiplicity of the N-th root e^{2πij/N} is (1/N) Σ_t e^{-2πijt/N}
 * tr(u^t) with N the exact order; the traces are exact ring elements, so the
 * DFT sums land within floating error of integers and are snapped (tolerance
 * 1e-9).
 */
inline std::vector<EigenPhase> eigenphase_spectrum(const ExactUnitary& u,
                                                   std::size_t order_cap = 4096) {
  if (u.dim() > 64) throw DimensionError("eigenphase_spectrum: dim > 64");
  auto ord = order_of_exact(u, order_cap);
  if (!ord) throw NoFiniteOrderError("eigenphase_spectrum: no order <= cap");
  std::size_t N = *ord;
  std::vector<std::complex<double>> traces(N);
  ExactUnitary w = ExactUnitary::identity(u.dim());
  for (std::size_t t = 0; t < N; ++t) {
    traces[t] = w.trace().to_complex();
    w = w * u;
  }
  const double pi = 3.14159265358979323846;
  std::vector<EigenPhase> out;
  for (std::size_t j = 0; j < N; ++j) {
    std::complex<double> acc = 0;
    for (std::size_t t = 0; t < N; ++t) {
      double ang = -2.0 * pi * double(j) * double(t) / double(N);
      acc += std::polar(1.0, ang) * traces[t];
    }
    double m = acc.real() / double(N);
    double mr = std::round(m);
    if (std::abs(m - mr) > 1e-9 || std::abs(acc.imag() / double(N)) > 1e-9)
      throw Error("eigenphase_spectrum: multiplicity failed to snap");
    long mult = static_cast<long>(mr);
    if (mult < 0) throw Error("eigenphase_spectrum: negative multiplicity");
    if (mult > 0) {
      // e^{2πij/N} = e^{iπ(2j)/N}
      long num = 2 * static_cast<long>(j), den = static_cast<long>(N);
      long g = std::gcd(num, den);
      if (g) {
        num /= g;
        den /= g;
      }
      out.push_back(EigenPhase{num, den, static_cast<std::size_t>(mult)});
    }
  }
  return out;
}

// True iff the spectrum contains e^{iπ num/den}.
inline bool spectrum_contains(const std::vector<EigenPhase>& spec, long num, long den) {
  long g = std::gcd(num, den);
  if (g) {
    num /= g;
    den /= g;
  }
  for (const auto& p : spec)
    if (p.num == num && p.den == den) return true;
  return false;
}

// If u = λ v entrywise for a scalar λ, returns λ.
inline std::optional<RingElem> global_phase_ratio(const ExactUnitary& u, const ExactUnitary& v) {
  if (u.dim() != v.dim()) return std::nullopt;
  // find a nonzero reference entry of v, try λ from the 8th roots of unity
  for (long e = 0; e < 8; ++e) {
    RingElem lambda = RingElem::omega_pow(e);
    bool ok = true;
    for (std::size_t i = 0; i < u.dim() && ok; ++i)
      for (std::size_t j = 0; j < u.dim() && ok; ++j)
        if (u.at(i, j) != v.at(i, j) * lambda) ok = false;
    if (ok) return lambda;
  }
  return std::nullopt;
}

}  // namespace pauliperiod
