#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

namespace pauliperiod {

using Integer = boost::multiprecision::cpp_int;

/**
 * Exact arithmetic in Z[ω, 1/√2] with ω = e^{iπ/4}.
 *
 * An element is (a + bω + cω² + dω³) / √2^k with integer a, b, c, d and
 * k >= 0. Reduction uses ω⁴ = -1 and √2 = ω - ω³. Canonical form divides out
 * √2 while the numerator allows it (so k is minimal), which makes equality a
 * plain component comparison.
 */
class RingElem {
 public:
  RingElem() : a_(0), b_(0), c_(0), d_(0), k_(0) {}
  RingElem(Integer a) : a_(std::move(a)), b_(0), c_(0), d_(0), k_(0) {}
  RingElem(Integer a, Integer b, Integer c, Integer d, unsigned k)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), k_(k) {
    canonicalize();
  }

  static RingElem zero() { return RingElem(); }
  static RingElem one() { return RingElem(Integer(1)); }
  static RingElem i() { return RingElem(0, 0, 1, 0, 0); }
  static RingElem sqrt2() { return RingElem(0, 1, 0, -1, 0); }
  static RingElem inv_sqrt2() { return RingElem(1, 0, 0, 0, 1); }

  // ω^e for any integer e, reduced via ω⁴ = -1.
  static RingElem omega_pow(long e) {
    long r = ((e % 8) + 8) % 8;
    int sign = r >= 4 ? -1 : 1;
    r %= 4;
    Integer coef(sign);
    switch (r) {
      case 0: return RingElem(coef, 0, 0, 0, 0);
      case 1: return RingElem(0, coef, 0, 0, 0);
      case 2: return RingElem(0, 0, coef, 0, 0);
      default: return RingElem(0, 0, 0, coef, 0);
    }
  }

  // i^e
  static RingElem i_pow(long e) { return omega_pow(2 * e); }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_one() const { return k_ == 0 && a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  unsigned k() const { return k_; }

  bool operator==(const RingElem& o) const {
    return k_ == o.k_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  RingElem operator-() const {
    RingElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    r.c_ = -r.c_;
    r.d_ = -r.d_;
    return r;
  }

  RingElem operator+(const RingElem& o) const {
    const RingElem *lo = this, *hi = &o;
    if (lo->k_ > hi->k_) std::swap(lo, hi);
    RingElem l = *lo;  // smaller k, scale up to hi->k_
    l.scale_sqrt2(hi->k_ - lo->k_);
    RingElem r;
    r.a_ = l.a_ + hi->a_;
    r.b_ = l.b_ + hi->b_;
    r.c_ = l.c_ + hi->c_;
    r.d_ = l.d_ + hi->d_;
    r.k_ = hi->k_;
    r.canonicalize();
    return r;
  }

  RingElem operator-(const RingElem& o) const { return *this + (-o); }

  RingElem operator*(const RingElem& o) const {
    RingElem r;
    r.a_ = a_ * o.a_ - b_ * o.d_ - c_ * o.c_ - d_ * o.b_;
    r.b_ = a_ * o.b_ + b_ * o.a_ - c_ * o.d_ - d_ * o.c_;
    r.c_ = a_ * o.c_ + b_ * o.b_ + c_ * o.a_ - d_ * o.d_;
    r.d_ = a_ * o.d_ + b_ * o.c_ + c_ * o.b_ + d_ * o.a_;
    r.k_ = k_ + o.k_;
    r.canonicalize();
    return r;
  }

  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

  // Complex conjugation: ω ↦ ω⁷ = -ω³.
  RingElem conj() const {
    RingElem r;
    r.a_ = a_;
    r.b_ = -d_;
    r.c_ = -c_;
    r.d_ = -b_;
    r.k_ = k_;
    return r;
  }

  std::complex<double> to_complex() const {
    const double inv_rt2 = 0.70710678118654752440;
    double re = static_cast<double>(a_) + (static_cast<double>(b_) - static_cast<double>(d_)) * inv_rt2;
    double im = static_cast<double>(c_) + (static_cast<double>(b_) + static_cast<double>(d_)) * inv_rt2;
    double scale = 1.0;
    for (unsigned j = 0; j < k_; ++j) scale *= inv_rt2;
    return {re * scale, im * scale};
  }

  std::string to_string() const {
    std::string s = "(" + a_.str() + "," + b_.str() + "," + c_.str() + "," + d_.str() + ")";
    if (k_) s += "/rt2^" + std::to_string(k_);
    return s;
  }

  void append_key(std::string& out) const {
    out += a_.str();
    out += ',';
    out += b_.str();
    out += ',';
    out += c_.str();
    out += ',';
    out += d_.str();
    out += '/';
    out += std::to_string(k_);
    out += ';';
  }

 private:
  Integer a_, b_, c_, d_;
  unsigned k_;

  // Multiply numerator by √2^t (used to align denominators).
  void scale_sqrt2(unsigned t) {
    for (unsigned j = 0; j < t / 2; ++j) {
      a_ *= 2;
      b_ *= 2;
      c_ *= 2;
      d_ *= 2;
    }
    if (t & 1) {
      // u * (ω - ω³)
      Integer na = b_ - d_, nb = a_ + c_, nc = b_ + d_, nd = c_ - a_;
      a_ = na;
      b_ = nb;
      c_ = nc;
      d_ = nd;
    }
  }

  void canonicalize() {
    if (is_zero()) {
      k_ = 0;
      return;
    }
    // u / √2 = u(ω - ω³)/2, exact iff a+c and b+d are both even.
    while (k_ > 0 && (a_ + c_) % 2 == 0 && (b_ + d_) % 2 == 0) {
      Integer na = (b_ - d_) / 2, nb = (a_ + c_) / 2, nc = (b_ + d_) / 2, nd = (c_ - a_) / 2;
      a_ = na;
      b_ = nb;
      c_ = nc;
      d_ = nd;
      --k_;
    }
  }
};

inline RingElem ring_mul(const RingElem& x, const RingElem& y) { return x * y; }
inline RingElem ring_add(const RingElem& x, const RingElem& y) { return x + y; }
inline RingElem ring_conj(const RingElem& x) { return x.conj(); }

}  // namespace pauliperiod
