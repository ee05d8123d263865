#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

#include "polar/errors.hpp"

namespace polar {

inline constexpr int kDim = 4;

enum class Variance : std::uint8_t { Lower, Upper };

constexpr std::size_t component_count(int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= kDim;
  return n;
}

// Dense tensor over a 4-d chart. Slot i of the flat index has stride 4^(Rank-1-i).
template <int Rank>
class Tensor {
  static_assert(Rank >= 0 && Rank <= 4, "rank must be in [0,4]");

 public:
  static constexpr int rank = Rank;
  static constexpr std::size_t size = component_count(Rank);
  using Signature = std::array<Variance, Rank>;

  Tensor() { variance_.fill(Variance::Lower); }
  explicit Tensor(const Signature& v) : variance_(v) {}

  static Tensor lower() { return Tensor(); }
  static Tensor upper() {
    Signature v;
    v.fill(Variance::Upper);
    return Tensor(v);
  }
  static Tensor lower(std::initializer_list<double> c) {
    Tensor t;
    t.assign(c);
    return t;
  }
  static Tensor upper(std::initializer_list<double> c) {
    Tensor t = upper();
    t.assign(c);
    return t;
  }

  template <class... I>
  double& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank, "index count must equal rank");
    return c_[flat(idx...)];
  }
  template <class... I>
  double operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank, "index count must equal rank");
    return c_[flat(idx...)];
  }

  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }

  std::array<double, size>& data() { return c_; }
  const std::array<double, size>& data() const { return c_; }

  Variance variance(int slot) const { return variance_[slot]; }
  void set_variance(int slot, Variance v) { variance_[slot] = v; }
  const Signature& signature() const { return variance_; }

  Tensor& operator+=(const Tensor& o) {
    for (std::size_t i = 0; i < size; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (std::size_t i = 0; i < size; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Tensor& operator*=(double a) {
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, double k) { return a *= k; }
  friend Tensor operator*(double k, Tensor a) { return a *= k; }
  friend Tensor operator-(Tensor a) { return a *= -1.0; }

  double max_abs() const {
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::abs(x));
    return m;
  }

  // Stride of a slot in the flat layout.
  static constexpr std::size_t stride(int slot) {
    return component_count(Rank - 1 - slot);
  }
  static constexpr int index_of(std::size_t flat_index, int slot) {
    return static_cast<int>((flat_index / stride(slot)) % kDim);
  }

 private:
  void assign(std::initializer_list<double> c) {
    if (c.size() != size) throw ContractViolation("tensor initializer has wrong component count");
    std::copy(c.begin(), c.end(), c_.begin());
  }

  template <class... I>
  static std::size_t flat(I... idx) {
    std::size_t f = 0;
    ((f = f * kDim + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  std::array<double, size> c_{};
  Signature variance_{};
};

using Scalar = Tensor<0>;
using Vector = Tensor<1>;
using Rank2 = Tensor<2>;
using Rank3 = Tensor<3>;
using Rank4 = Tensor<4>;

inline Rank2 identity_mixed() {
  Rank2 d({Variance::Upper, Variance::Lower});
  for (int a = 0; a < kDim; ++a) d(a, a) = 1.0;
  return d;
}

template <int Rank>
double max_abs_difference(const Tensor<Rank>& a, const Tensor<Rank>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < Tensor<Rank>::size; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline Rank2 transpose(const Rank2& t) {
  Rank2 out({t.variance(1), t.variance(0)});
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) out(a, b) = t(b, a);
  return out;
}

inline Rank2 outer(const Vector& a, const Vector& b) {
  Rank2 out({a.variance(0), b.variance(0)});
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i, j) = a(i) * b(j);
  return out;
}

// a_i b_j - a_j b_i
inline Rank2 wedge(const Vector& a, const Vector& b) {
  return outer(a, b) - outer(b, a);
}

// Plain component sum, caller keeps track of which index is up.
inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i) s += a(i) * b(i);
  return s;
}

}  // namespace polar
