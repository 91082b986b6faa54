#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polycol/poly.hpp"

namespace polycol {

// Small dense row-major matrix over an exact field T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    T zero = x.a_.empty() ? T() : x.a_[0] - x.a_[0];
    Matrix z(x.r_, y.c_, zero);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& v = x(i, k);
        if (is_zero(v)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) = z(i, j) + v * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = z.a_[i] + y.a_[i];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = z.a_[i] - y.a_[i];
    return z;
  }
  friend Matrix operator*(const T& s, const Matrix& y) {
    Matrix z = y;
    for (auto& v : z.a_) v = s * v;
    return z;
  }
  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    T zero = v[0] - v[0];
    std::vector<T> out(r_, zero);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  Matrix transpose() const {
    Matrix t(c_, r_, a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& x, const Matrix<T>& y) {
  T zero = x(0, 0) - x(0, 0);
  Matrix<T> z(x.rows() * y.rows(), x.cols() * y.cols(), zero);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l)
          z(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
  return z;
}

template <class T>
Matrix<T> mat_pow(Matrix<T> base, unsigned long e, const T& zero, const T& one) {
  Matrix<T> r = Matrix<T>::identity(base.rows(), zero, one);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// Characteristic polynomial det(xI - M), monic, via Hessenberg reduction.
template <class T>
Poly<T> charpoly(Matrix<T> h, const T& one) {
  std::size_t n = h.rows();
  T zero = one - one;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i)
      if (!is_zero(h(i, m - 1))) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    T ip = inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      if (is_zero(h(i, m - 1))) continue;
      T u = h(i, m - 1) * ip;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = h(i, j) - u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) = h(j, m) + u * h(j, i);
    }
  }
  std::vector<Poly<T>> p;
  p.push_back(Poly<T>::constant(one));
  Poly<T> x = Poly<T>::monomial(one, 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly<T> pm = (x - Poly<T>::constant(h(m - 1, m - 1))) * p[m - 1];
    T t = one;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      T c = h(m - i - 1, m - 1) * t;
      if (!is_zero(c)) pm = pm - c * p[m - i - 1];
    }
    p.push_back(pm);
  }
  (void)zero;
  return p[n];
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T ip = inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * ip;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// Basis of {v : M v = 0}, one vector per free column, in RREF-normal form.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, const T& one) {
  T zero = one - one;
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
    out.push_back(v);
  }
  return out;
}

// Basis of the column space in reduced form (rows of the RREF of M^T).
template <class T>
std::vector<std::vector<T>> column_space(const Matrix<T>& m) {
  Matrix<T> t = m.transpose();
  auto piv = rref(t);
  std::vector<std::vector<T>> out;
  for (std::size_t k = 0; k < piv.size(); ++k) {
    std::vector<T> v;
    for (std::size_t j = 0; j < t.cols(); ++j) v.push_back(t(k, j));
    out.push_back(v);
  }
  return out;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, const T& zero, const T& one) {
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

template <class T>
T determinant(Matrix<T> m, const T& zero, const T& one) {
  std::size_t n = m.rows();
  T det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p == n) return zero;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    T ip = inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * ip;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

using QMatrix = Matrix<Rational>;

// Companion matrix of a monic (after normalisation) rational polynomial.
QMatrix companion(const QPoly& p);

}  // namespace polycol
