#pragma once

#include "gonality/rational.hpp"

#include <vector>

namespace gonality {

// A length that is a linear form in free parameters, evaluated at a reference
// point. Comparisons elsewhere look at value only; the gradient records which
// linear form produced it.
struct Affine {
  Rational value;
  std::vector<Rational> grad;

  Affine() = default;
  Affine(Rational v) : value(std::move(v)) {}  // NOLINT: constants convert implicitly
  Affine(Rational v, std::vector<Rational> g) : value(std::move(v)), grad(std::move(g)) {}

  static Affine variable(int index, int dims, Rational at) {
    std::vector<Rational> g(dims);
    g.at(index) = 1;
    return {std::move(at), std::move(g)};
  }

  Affine& operator+=(const Affine& o) {
    value += o.value;
    if (grad.size() < o.grad.size()) grad.resize(o.grad.size());
    for (std::size_t i = 0; i < o.grad.size(); ++i) grad[i] += o.grad[i];
    return *this;
  }
  Affine& operator*=(const Rational& c) {
    value *= c;
    for (auto& x : grad) x *= c;
    return *this;
  }
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(const Affine& a) { return a * Rational(-1); }
  friend Affine operator-(Affine a, const Affine& b) { return a += -b; }
  friend Affine operator*(Affine a, const Rational& c) { return a *= c; }
  friend Affine operator*(const Rational& c, Affine a) { return a *= c; }
  friend Affine operator/(Affine a, const Rational& c) { return a *= Rational(1) / c; }
  friend Affine operator/(Affine a, int c) { return a *= Rational(1, c); }

  bool is_constant() const {
    for (const auto& x : grad)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Affine& a, const Affine& b) {
    if (a.value != b.value) return false;
    std::size_t n = std::max(a.grad.size(), b.grad.size());
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = i < a.grad.size() ? a.grad[i] : Rational(0);
      Rational y = i < b.grad.size() ? b.grad[i] : Rational(0);
      if (x != y) return false;
    }
    return true;
  }
};

inline bool is_positive(const Affine& a) { return a.value > 0; }
inline const Rational& value_of(const Affine& a) { return a.value; }

}  // namespace gonality
