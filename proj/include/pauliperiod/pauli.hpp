#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauliperiod/errors.hpp"
#include "pauliperiod/f2matrix.hpp"

namespace pauliperiod {

// Element of the n-qubit Pauli group, stored as i^phase * X^x Z^z with the
// whole X block to the left of the whole Z block and phase taken mod 4.
struct PauliString {
  std::size_t n = 0;
  BitVec x, z;
  int phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  PauliString(std::size_t n_, BitVec x_, BitVec z_, int phase_)
      : n(n_), x(std::move(x_)), z(std::move(z_)), phase(((phase_ % 4) + 4) % 4) {}

  static PauliString identity(std::size_t n) {
    return PauliString(n, BitVec(n), BitVec(n), 0);
  }
  static PauliString single_x(std::size_t n, std::size_t q) {
    PauliString p = identity(n);
    p.x.set(q, true);
    return p;
  }
  static PauliString single_z(std::size_t n, std::size_t q) {
    PauliString p = identity(n);
    p.z.set(q, true);
    return p;
  }
  static PauliString single_y(std::size_t n, std::size_t q) {
    PauliString p = identity(n);
    p.x.set(q, true);
    p.z.set(q, true);
    p.phase = 1;  // Y = i XZ
    return p;
  }

  bool is_identity_label() const { return !x.any() && !z.any(); }

  // Hermitian iff phase ≡ ⟨x, z⟩ (mod 2).
  bool is_hermitian() const {
    return ((phase & 1) == (x.dot(z) ? 1 : 0));
  }

  bool operator==(const PauliString& o) const {
    return n == o.n && phase == o.phase && x == o.x && z == o.z;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

  // Letter form such as "+XIZ" or "-iY"; the prefix absorbs one factor of -i
  // per Y so Hermitian strings always print with a +/- prefix.
  std::string to_string() const {
    int pref = phase;
    std::string body;
    for (std::size_t q = 0; q < n; ++q) {
      bool xb = x.get(q), zb = z.get(q);
      if (xb && zb) {
        body += 'Y';
        pref = (pref + 3) % 4;  // XZ = -iY
      } else if (xb)
        body += 'X';
      else if (zb)
        body += 'Z';
      else
        body += 'I';
    }
    static const char* prefixes[4] = {"+", "+i", "-", "-i"};
    return std::string(prefixes[pref]) + body;
  }
};

// i^(p1+p2) X^x1 Z^z1 X^x2 Z^z2 = i^(p1+p2+2<z1,x2>) X^(x1+x2) Z^(z1+z2).
inline PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw DimensionError("pauli_mul: size mismatch");
  PauliString r = p;
  r.phase = (p.phase + q.phase + 2 * (p.z.dot(q.x) ? 1 : 0)) % 4;
  r.x.xor_with(q.x);
  r.z.xor_with(q.z);
  return r;
}

inline PauliString pauli_inverse(const PauliString& p) {
  // (i^p X^x Z^z)^-1 = i^-p Z^z X^x = i^(-p + 2<z,x>) X^x Z^z
  PauliString r = p;
  r.phase = ((-p.phase + 2 * (p.z.dot(p.x) ? 1 : 0)) % 4 + 4) % 4;
  return r;
}

// Symplectic product of the labels: 0 if the operators commute, 1 otherwise.
inline int symplectic_product(const PauliString& p, const PauliString& q) {
  return (p.x.dot(q.z) ? 1 : 0) ^ (p.z.dot(q.x) ? 1 : 0);
}

// A Clifford up to global phase: the images of the generators X_j, Z_j under
// conjugation. The induced label map is the symplectic matrix F whose column
// j (resp. n+j) is the label of the image of X_j (resp. Z_j); the sign data
// is the +/- of each (Hermitian) image.
class CliffordTableau {
 public:
  static CliffordTableau identity(std::size_t n) {
    CliffordTableau t;
    t.n_ = n;
    t.images_.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) t.images_.push_back(PauliString::single_x(n, q));
    for (std::size_t q = 0; q < n; ++q) t.images_.push_back(PauliString::single_z(n, q));
    return t;
  }

  // images = [image of X_0, ..., X_{n-1}, Z_0, ..., Z_{n-1}]; validates that
  // the label map is symplectic and every image is Hermitian.
  static CliffordTableau from_images(std::size_t n, std::vector<PauliString> images) {
    if (images.size() != 2 * n)
      throw MalformedTableauError("tableau needs 2n generator images");
    CliffordTableau t;
    t.n_ = n;
    t.images_ = std::move(images);
    for (const auto& img : t.images_) {
      if (img.n != n) throw MalformedTableauError("image width mismatch");
      if (!img.is_hermitian())
        throw MalformedTableauError("generator image has odd sign entry: " + img.to_string());
    }
    if (!is_symplectic(t.f()))
      throw MalformedTableauError("label map is not symplectic");
    return t;
  }

  std::size_t num_qubits() const { return n_; }

  const PauliString& image_x(std::size_t q) const { return images_[q]; }
  const PauliString& image_z(std::size_t q) const { return images_[n_ + q]; }
  const PauliString& image(std::size_t g) const { return images_[g]; }

  F2Matrix f() const {
    F2Matrix m(2 * n_, 2 * n_);
    for (std::size_t g = 0; g < 2 * n_; ++g) {
      const PauliString& img = images_[g];
      for (std::size_t q = 0; q < n_; ++q) {
        if (img.x.get(q)) m.set(q, g, true);
        if (img.z.get(q)) m.set(n_ + q, g, true);
      }
    }
    return m;
  }

  // Sign entries in Z_4 (0 or 2): the phase of each image relative to its
  // Hermitian letter form.
  std::vector<int> signs() const {
    std::vector<int> s;
    s.reserve(2 * n_);
    for (const auto& img : images_) {
      std::size_t both = 0;
      for (std::size_t w = 0; w < img.x.words().size(); ++w)
        both += std::popcount(img.x.words()[w] & img.z.words()[w]);
      s.push_back(((img.phase - static_cast<int>(both % 4)) % 4 + 4) % 4);
    }
    return s;
  }

  // U P U† by multiplying generator images.
  PauliString conjugate(const PauliString& p) const {
    if (p.n != n_) throw DimensionError("conjugate: size mismatch");
    PauliString r = PauliString::identity(n_);
    r.phase = p.phase;
    for (std::size_t q = 0; q < n_; ++q)
      if (p.x.get(q)) r = pauli_mul(r, images_[q]);
    for (std::size_t q = 0; q < n_; ++q)
      if (p.z.get(q)) r = pauli_mul(r, images_[n_ + q]);
    return r;
  }

  bool operator==(const CliffordTableau& o) const {
    return n_ == o.n_ && images_ == o.images_;
  }
  bool operator!=(const CliffordTableau& o) const { return !(*this == o); }

  bool is_identity() const { return *this == identity(n_); }

  // True iff the underlying unitary is a Pauli up to global phase.
  bool is_pauli() const { return f().is_identity(); }

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> images_;

  friend CliffordTableau compose(const CliffordTableau&, const CliffordTableau&);
  friend CliffordTableau tableau_tensor(const CliffordTableau&, const CliffordTableau&);
  friend CliffordTableau tableau_inverse(const CliffordTableau&);
  friend class TableauBuilder;
};

// Tableau of A·B (a applied after b).
inline CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("compose: size mismatch");
  CliffordTableau t;
  t.n_ = a.num_qubits();
  t.images_.reserve(2 * t.n_);
  for (std::size_t g = 0; g < 2 * t.n_; ++g) t.images_.push_back(a.conjugate(b.image(g)));
  return t;
}

inline CliffordTableau tableau_pow(const CliffordTableau& t, std::size_t e) {
  CliffordTableau acc = CliffordTableau::identity(t.num_qubits());
  CliffordTableau base = t;
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

inline CliffordTableau tableau_inverse(const CliffordTableau& t) {
  std::size_t n = t.num_qubits();
  auto finv = t.f().inverse();
  if (!finv) throw SingularMatrixError("tableau_inverse: label map singular");
  CliffordTableau r;
  r.n_ = n;
  r.images_.reserve(2 * n);
  for (std::size_t g = 0; g < 2 * n; ++g) {
    BitVec e(2 * n);
    e.set(g, true);
    BitVec lbl = finv->apply(e);
    PauliString q(n, BitVec(n), BitVec(n), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (lbl.get(i)) q.x.set(i, true);
      if (lbl.get(n + i)) q.z.set(i, true);
    }
    PauliString fwd = t.conjugate(q);  // = i^s * (generator g)
    q.phase = ((-(fwd.phase)) % 4 + 4) % 4;
    r.images_.push_back(q);
  }
  return r;
}

inline CliffordTableau tableau_tensor(const CliffordTableau& a, const CliffordTableau& b) {
  std::size_t na = a.num_qubits(), nb = b.num_qubits(), n = na + nb;
  auto widen = [&](const PauliString& p, std::size_t off) {
    PauliString q = PauliString::identity(n);
    q.phase = p.phase;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (p.x.get(i)) q.x.set(off + i, true);
      if (p.z.get(i)) q.z.set(off + i, true);
    }
    return q;
  };
  CliffordTableau t;
  t.n_ = n;
  t.images_.resize(2 * n, PauliString::identity(n));
  for (std::size_t q = 0; q < na; ++q) {
    t.images_[q] = widen(a.image_x(q), 0);
    t.images_[n + q] = widen(a.image_z(q), 0);
  }
  for (std::size_t q = 0; q < nb; ++q) {
    t.images_[na + q] = widen(b.image_x(q), na);
    t.images_[n + na + q] = widen(b.image_z(q), na);
  }
  return t;
}

// Pauli periodicity m = min{t >= 0 : U^(2^t) is Pauli up to phase}. Decided
// entirely by the 2-power order of the label map; nullopt when the label map
// is not unipotent (U is not Pauli-periodic).
inline std::optional<std::size_t> pauli_periodicity(const CliffordTableau& t) {
  return two_power_order(t.f());
}

struct PredictedCuLevel {
  std::size_t level;
  // Strictness is only claimed for periodicity >= 1; a controlled Pauli is a
  // Clifford but need not be outside level 1.
  bool strict;
};

// Level of the controlled gate predicted from the periodicity of the target;
// nullopt when the target is not Pauli-periodic (CU then sits outside the
// hierarchy entirely).
inline std::optional<PredictedCuLevel> predicted_cu_level(const CliffordTableau& t) {
  auto m = pauli_periodicity(t);
  if (!m) return std::nullopt;
  if (*m == 0) return PredictedCuLevel{2, false};
  return PredictedCuLevel{*m + 2, true};
}

}  // namespace pauliperiod
