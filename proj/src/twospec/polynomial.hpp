#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace twospec {

/// Dense polynomial with ascending coefficients: coeffs[i] multiplies x^i.
/// Monic families (P_k, Phi_k, Psi_k) are stored as ordinary polynomials whose
/// leading coefficient is one; nothing here trims trailing zeros.
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0)} {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
  }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  /// prod_j (x - roots[j]); the empty product is the constant one.
  static Polynomial from_roots(std::span<const T> roots) {
    std::vector<T> c{T(1)};
    for (const T& r : roots) {
      c.push_back(T(0));
      for (std::size_t i = c.size() - 1; i > 0; --i) {
        c[i] = c[i - 1] - r * c[i];
      }
      c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  const T& leading() const { return coeffs_.back(); }

  /// Horner evaluation.
  template <class U>
  U operator()(const U& x) const {
    U acc = U(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      acc = acc * x + U(coeffs_[i]);
    }
    return acc;
  }

  /// x * p
  Polynomial times_x() const {
    std::vector<T> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(T(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const T ai = i < a.coeffs_.size() ? a.coeffs_[i] : T(0);
      const T bi = i < b.coeffs_.size() ? b.coeffs_[i] : T(0);
      if (!(ai == bi)) return false;
    }
    return true;
  }

 private:
  std::vector<T> coeffs_;
};

}  // namespace twospec
