// Copyright 2026 The djc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <functional>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "djc/errors.hpp"

namespace djc {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

inline constexpr cplx kI{0.0, 1.0};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
      throw DimensionMismatch("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                              " is not " + std::to_string(dim_) + "^2");
    }
  }
  /// Row-wise literal, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionMismatch("ComplexMatrix: rows must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }
  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }
  static ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra) {
    if (ket.size() != bra.size()) throw DimensionMismatch("outer: size mismatch");
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
      for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * dim_ + c];
  }
  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }
  ComplexMatrix transpose() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  ComplexMatrix conj() const {
    ComplexMatrix m(*this);
    for (auto& z : m.data_) z = std::conj(z);
    return m;
  }
  cplx trace() const noexcept {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> v) {
    if (v.size() != a.dim_) throw DimensionMismatch("matvec: size mismatch");
    ComplexVector out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < a.dim_; ++j) acc += a(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }
  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    return a * std::span<const cplx>(v);
  }

  /// Largest entrywise modulus.
  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }
  bool all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  bool is_hermitian(double tol = 1e-10) const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
  }
  bool is_unitary(double tol = 1e-10) const {
    const ComplexMatrix p = adjoint() * (*this);
    return max_abs_diff(p, identity(dim_)) <= tol;
  }
  // Defined below, needs the eigensolver.
  bool is_psd(double tol = 1e-10) const;

  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same(b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.data_.size(); ++k) m = std::max(m, std::abs(a.data_[k] - b.data_[k]));
    return m;
  }

 private:
  void check_same(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) {
      throw DimensionMismatch("matrix dims " + std::to_string(dim_) + " vs " +
                              std::to_string(o.dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

inline double norm(std::span<const cplx> v) noexcept {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner: size mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionMismatch("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Ordered tensor-product structure. The first subsystem is the most
/// significant digit of the composite index.
class HilbertLayout {
 public:
  HilbertLayout() = default;
  HilbertLayout(std::vector<std::size_t> dims, std::vector<std::string> labels)
      : dims_(std::move(dims)), labels_(std::move(labels)) {
    if (labels_.empty()) labels_.resize(dims_.size());
    if (labels_.size() != dims_.size()) throw DimensionMismatch("HilbertLayout: labels/dims size");
    for (auto d : dims_)
      if (d == 0) throw DimensionMismatch("HilbertLayout: zero-dimensional subsystem");
  }

  std::size_t subsystem_count() const noexcept { return dims_.size(); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::size_t dim(std::size_t subsystem) const { return dims_.at(subsystem); }
  const std::string& label(std::size_t subsystem) const { return labels_.at(subsystem); }

  std::size_t total_dim() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
  }

  std::vector<std::size_t> split(std::size_t composite) const {
    std::vector<std::size_t> digits(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
      digits[k] = composite % dims_[k];
      composite /= dims_[k];
    }
    return digits;
  }
  std::size_t join(std::span<const std::size_t> digits) const {
    if (digits.size() != dims_.size()) throw BadSubsystem("join: digit count mismatch");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (digits[k] >= dims_[k]) throw BadSubsystem("join: digit out of range");
      idx = idx * dims_[k] + digits[k];
    }
    return idx;
  }
  std::size_t join(std::initializer_list<std::size_t> digits) const {
    return join(std::span<const std::size_t>(digits.begin(), digits.size()));
  }

  /// Layout restricted to `keep` (strictly increasing subsystem indices).
  HilbertLayout restrict_to(std::span<const std::size_t> keep) const {
    validate_keep(keep);
    std::vector<std::size_t> d;
    std::vector<std::string> l;
    for (auto k : keep) {
      d.push_back(dims_[k]);
      l.push_back(labels_[k]);
    }
    return {std::move(d), std::move(l)};
  }

  void validate_keep(std::span<const std::size_t> keep) const {
    if (keep.empty()) throw BadSubsystem("empty subsystem selection");
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] >= dims_.size())
        throw BadSubsystem("subsystem " + std::to_string(keep[i]) + " outside layout of " +
                           std::to_string(dims_.size()));
      if (i > 0 && keep[i] <= keep[i - 1])
        throw BadSubsystem("subsystem selection must be strictly increasing");
    }
  }

  friend bool operator==(const HilbertLayout&, const HilbertLayout&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

/// Kronecker product of a list of factors, left to right.
inline ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

namespace detail {

// One complex Jacobi rotation zeroing a(p,q); accumulates into v.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * mag);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
  const cplx gpp = c, gpq = s;
  const cplx gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {  // A <- A G
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A <- G^H A
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Throws NotHermitian when the input deviates from Hermitian by more than `tol`.
inline EigenSystem hermitian_eig(const ComplexMatrix& m, double tol = 1e-10) {
  if (!m.is_hermitian(tol)) throw NotHermitian("hermitian_eig: input is not Hermitian");
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize exactly so the rotations see a true Hermitian matrix.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.max_abs(), std::numeric_limits<double>::min());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-300) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-10) {
  return hermitian_eig(m, tol).values;
}

/// Singular values (descending) by one-sided Jacobi. Absolute accuracy is of
/// order eps * ||m||, including for the smallest values.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag <= 1e-15 * std::sqrt(alpha * beta) || mag == 0.0) continue;
        rotated = true;
        const cplx phase = gamma / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx gpp = c, gpq = s;
        const cplx gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(a(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>{});
  return sv;
}

/// V diag(f(lambda)) V^H.
template <typename F>
ComplexMatrix spectral_map(const EigenSystem& es, F&& f) {
  const std::size_t n = es.values.size();
  ComplexMatrix out(n);
  std::vector<cplx> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(es.values[k]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += es.vectors(i, k) * fv[k] * std::conj(es.vectors(j, k));
      out(i, j) = acc;
    }
  return out;
}

inline bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  const auto vals = hermitian_eigenvalues(*this, tol);
  return vals.empty() || vals.front() >= -tol;
}

/// Hermitian PSD square root. Eigenvalues in [-clamp, 0) are treated as zero.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double clamp = 1e-10) {
  const EigenSystem es = hermitian_eig(rho);
  if (!es.values.empty() && es.values.front() < -clamp)
    throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(es.values.front()) + " below -" +
                 std::to_string(clamp));
  return spectral_map(es, [](double x) { return cplx{std::sqrt(std::max(x, 0.0))}; });
}

/// Traces out every subsystem not in `keep`. `keep` must be strictly increasing.
inline std::pair<ComplexMatrix, HilbertLayout> partial_trace(const ComplexMatrix& rho,
                                                             const HilbertLayout& layout,
                                                             std::span<const std::size_t> keep) {
  if (rho.dim() != layout.total_dim())
    throw DimensionMismatch("partial_trace: matrix dim does not match layout");
  HilbertLayout kept = layout.restrict_to(keep);
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < layout.subsystem_count(); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);
  std::vector<std::size_t> tdims;
  for (auto s : traced) tdims.push_back(layout.dim(s));
  const HilbertLayout traced_layout(tdims, {});

  const std::size_t n = layout.total_dim();
  std::vector<std::size_t> kidx(n), tidx(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto digits = layout.split(i);
    std::size_t ki = 0, ti = 0;
    for (auto s : keep) ki = ki * layout.dim(s) + digits[s];
    for (auto s : traced) ti = ti * layout.dim(s) + digits[s];
    kidx[i] = ki;
    tidx[i] = ti;
  }
  ComplexMatrix out(kept.total_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (tidx[i] == tidx[j]) out(kidx[i], kidx[j]) += rho(i, j);
  return {std::move(out), std::move(kept)};
}

/// Transposes the indices of one subsystem.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, const HilbertLayout& layout,
                                       std::size_t subsystem) {
  if (subsystem >= layout.subsystem_count())
    throw BadSubsystem("partial_transpose: subsystem " + std::to_string(subsystem) +
                       " outside layout");
  if (rho.dim() != layout.total_dim())
    throw DimensionMismatch("partial_transpose: matrix dim does not match layout");
  const std::size_t n = rho.dim();
  std::size_t stride = 1;
  for (std::size_t s = layout.subsystem_count(); s-- > subsystem + 1;) stride *= layout.dim(s);
  const std::size_t d = layout.dim(subsystem);
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      const std::size_t i2 = i + (dj - di) * stride;
      const std::size_t j2 = j + (di - dj) * stride;
      out(i2, j2) = rho(i, j);
    }
  }
  return out;
}

}  // namespace djc
