#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauliperiod/errors.hpp"

namespace pauliperiod {

// Packed bit vector over GF(2). Trailing padding bits are kept zero so that
// equality and hashing can compare words directly.
class BitVec {
 public:
  BitVec() : size_(0) {}
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void xor_with(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  // Inner product mod 2.
  bool dot(const BitVec& other) const {
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool operator==(const BitVec& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }
  bool operator!=(const BitVec& other) const { return !(*this == other); }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  std::size_t size_;
  std::vector<uint64_t> words_;
};

// Dense bit matrix over GF(2), row-major, one bit per entry packed in 64-bit
// words. Padding bits in each row are zero, so operator== compares storage.
class F2Matrix {
 public:
  F2Matrix() : rows_(0), cols_(0), wpr_(0) {}

  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool v) {
    uint64_t mask = uint64_t(1) << (j & 63);
    if (v)
      bits_[i * wpr_ + (j >> 6)] |= mask;
    else
      bits_[i * wpr_ + (j >> 6)] &= ~mask;
  }

  void flip(std::size_t i, std::size_t j) {
    bits_[i * wpr_ + (j >> 6)] ^= uint64_t(1) << (j & 63);
  }

  void xor_row(std::size_t dst, std::size_t src) {
    uint64_t* d = &bits_[dst * wpr_];
    const uint64_t* s = &bits_[src * wpr_];
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w)
      std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
  }

  BitVec row(std::size_t i) const {
    BitVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) v.set(j, true);
    return v;
  }

  BitVec col(std::size_t j) const {
    BitVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (get(i, j)) v.set(i, true);
    return v;
  }

  bool operator==(const F2Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
  }
  bool operator!=(const F2Matrix& other) const { return !(*this == other); }

  bool is_zero() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  bool is_square() const { return rows_ == cols_; }

  F2Matrix operator+(const F2Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DimensionError("F2Matrix add: shape mismatch");
    F2Matrix r = *this;
    for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] ^= other.bits_[w];
    return r;
  }

  F2Matrix operator*(const F2Matrix& other) const {
    if (cols_ != other.rows_)
      throw DimensionError("F2Matrix mul: " + std::to_string(cols_) + " cols vs " +
                           std::to_string(other.rows_) + " rows");
    F2Matrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      uint64_t* out = &r.bits_[i * r.wpr_];
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!get(i, k)) continue;
        const uint64_t* src = &other.bits_[k * other.wpr_];
        for (std::size_t w = 0; w < other.wpr_; ++w) out[w] ^= src[w];
      }
    }
    return r;
  }

  BitVec apply(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionError("F2Matrix apply: size mismatch");
    BitVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      uint64_t acc = 0;
      const uint64_t* r = &bits_[i * wpr_];
      const uint64_t* s = v.words().data();
      for (std::size_t w = 0; w < wpr_; ++w) acc ^= r[w] & s[w];
      if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
  }

  F2Matrix transpose() const {
    F2Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) r.set(j, i, true);
    return r;
  }

  // a^(2^t) via t repeated squarings.
  F2Matrix pow2(std::size_t t) const {
    if (!is_square()) throw DimensionError("pow2: non-square matrix");
    F2Matrix r = *this;
    for (std::size_t s = 0; s < t; ++s) r = r * r;
    return r;
  }

  F2Matrix pow(std::size_t e) const {
    if (!is_square()) throw DimensionError("pow: non-square matrix");
    F2Matrix acc = identity(rows_);
    F2Matrix base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::optional<F2Matrix> inverse() const {
    if (!is_square()) throw DimensionError("inverse: non-square matrix");
    std::size_t n = rows_;
    F2Matrix a = *this;
    F2Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && !a.get(pivot, col)) ++pivot;
      if (pivot == n) return std::nullopt;
      a.swap_rows(col, pivot);
      inv.swap_rows(col, pivot);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != col && a.get(i, col)) {
          a.xor_row(i, col);
          inv.xor_row(i, col);
        }
      }
    }
    return inv;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t rows_, cols_, wpr_;
  std::vector<uint64_t> bits_;
};

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t k = 0;
  std::size_t p = 1;
  while (p < x) {
    p <<= 1;
    ++k;
  }
  return k;
}

// true iff fᵀ Ω f = Ω with Ω = [[0, I],[I, 0]], label vectors ordered (x, z).
inline bool is_symplectic(const F2Matrix& f) {
  if (!f.is_square() || f.rows() % 2 != 0)
    throw DimensionError("is_symplectic: matrix must be 2n x 2n");
  std::size_t n = f.rows() / 2;
  F2Matrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega.set(i, n + i, true);
    omega.set(n + i, i, true);
  }
  return f.transpose() * omega * f == omega;
}

// Smallest r >= 1 with n^r = 0. The zero matrix has index 1.
inline std::size_t nilpotency_index(const F2Matrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency_index: non-square matrix");
  if (m.is_zero()) return 1;
  std::size_t dim = m.rows();
  F2Matrix p = m;
  for (std::size_t r = 1; r <= dim; ++r) {
    if (p.is_zero()) return r;
    p = p * m;
  }
  throw NotNilpotentError("nilpotency_index: matrix is not nilpotent");
}

// Smallest m >= 0 with f^(2^m) = I when f is unipotent; nullopt otherwise
// (a matrix of 2-power order over GF(2) must be unipotent).
inline std::optional<std::size_t> two_power_order(const F2Matrix& f) {
  if (!f.is_square()) throw DimensionError("two_power_order: non-square matrix");
  if (!f.inverse()) throw SingularMatrixError("two_power_order: singular matrix");
  F2Matrix n = f + F2Matrix::identity(f.rows());
  if (!n.pow(f.rows()).is_zero()) return std::nullopt;
  return ceil_log2(nilpotency_index(n));
}

}  // namespace pauliperiod
