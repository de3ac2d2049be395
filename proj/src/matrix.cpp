// Copyright 2026 The multop Authors.
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

#include "multop/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "multop/errors.hpp"

namespace multop {

double sup_norm(const CVector& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
  return m;
}

double sup_induced_norm(const CMatrix& a) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    m = std::max(m, row);
  }
  return m;
}

bool all_finite(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
  return true;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rotation [c s; -conj(s) c] mapping (a, b) to (r, 0).
struct Givens {
  double c = 1.0;
  Complex s{0.0, 0.0};

  static Givens make(Complex a, Complex b) {
    Givens g;
    if (b == Complex(0.0)) return g;
    const double abs_a = std::abs(a);
    if (abs_a == 0.0) {
      g.c = 0.0;
      g.s = std::conj(b) / std::abs(b);
      return g;
    }
    const double nrm = std::hypot(abs_a, std::abs(b));
    g.c = abs_a / nrm;
    g.s = (a / abs_a) * std::conj(b) / nrm;
    return g;
  }

  void apply_rows(CMatrix& m, Eigen::Index k, Eigen::Index col_begin) const {
    for (Eigen::Index j = col_begin; j < m.cols(); ++j) {
      const Complex x = m(k, j), y = m(k + 1, j);
      m(k, j) = c * x + s * y;
      m(k + 1, j) = -std::conj(s) * x + c * y;
    }
  }

  void apply_cols_adjoint(CMatrix& m, Eigen::Index k, Eigen::Index row_end) const {
    for (Eigen::Index i = 0; i < row_end; ++i) {
      const Complex x = m(i, k), y = m(i, k + 1);
      m(i, k) = x * c + y * std::conj(s);
      m(i, k + 1) = -x * s + y * c;
    }
  }
};

// Eigenvalue of the trailing 2x2 block [a b; c d] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (scale == 0.0) return Complex(0.0);
  a /= scale;
  b /= scale;
  c /= scale;
  d /= scale;
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  const Complex mid = 0.5 * (a + d);
  Complex e1 = mid + disc;
  Complex e2 = mid - disc;
  // Recover the smaller root from the determinant to avoid cancellation.
  const Complex det = a * d - b * c;
  if (std::abs(e1) >= std::abs(e2)) {
    if (e1 != Complex(0.0)) e2 = det / e1;
  } else {
    if (e2 != Complex(0.0)) e1 = det / e2;
  }
  return scale * (std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2);
}

// Reduces h to upper triangular Schur form in place, accumulating z.
void schur_qr(CMatrix& h, CMatrix& z) {
  const Eigen::Index n = h.rows();
  constexpr int kMaxIterPerRow = 30;
  const double norm = std::max(sup_induced_norm(h), std::numeric_limits<double>::min());
  int total_iter = 0;
  int iter = 0;
  Eigen::Index iu = n - 1;
  while (iu > 0) {
    Eigen::Index il = iu;
    while (il > 0) {
      const double s = std::abs(h(il, il)) + std::abs(h(il - 1, il - 1));
      const double sub = std::abs(h(il, il - 1));
      if (sub <= kEps * (s == 0.0 ? norm : s) || sub <= std::numeric_limits<double>::min()) {
        h(il, il - 1) = 0.0;
        break;
      }
      --il;
    }
    if (il == iu) {
      --iu;
      iter = 0;
      continue;
    }
    ++iter;
    ++total_iter;
    if (total_iter > kMaxIterPerRow * n) {
      double worst = 0.0;
      for (Eigen::Index k = 1; k < n; ++k) worst = std::max(worst, std::abs(h(k, k - 1)));
      throw ConvergenceError("QR eigenvalue iteration did not converge", worst);
    }

    Complex mu;
    if (iter == 10 || iter == 20) {
      // Exceptional shift to break cycles.
      const Eigen::Index below = std::max(il, iu - 2);
      mu = h(iu, iu) + Complex(std::abs(h(iu, iu - 1).real()) +
                                   std::abs(h(iu - 1, below).real()),
                               0.0);
    } else {
      mu = wilkinson_shift(h(iu - 1, iu - 1), h(iu - 1, iu), h(iu, iu - 1), h(iu, iu));
    }

    for (Eigen::Index j = il; j <= iu; ++j) h(j, j) -= mu;
    std::vector<Givens> rot(static_cast<std::size_t>(iu - il));
    for (Eigen::Index k = il; k < iu; ++k) {
      const Givens g = Givens::make(h(k, k), h(k + 1, k));
      g.apply_rows(h, k, k);
      h(k + 1, k) = 0.0;
      rot[static_cast<std::size_t>(k - il)] = g;
    }
    for (Eigen::Index k = il; k < iu; ++k) {
      const Givens& g = rot[static_cast<std::size_t>(k - il)];
      g.apply_cols_adjoint(h, k, k + 2);
      g.apply_cols_adjoint(z, k, n);
    }
    for (Eigen::Index j = il; j <= iu; ++j) h(j, j) += mu;
  }
}

// Eigenvectors of the triangular factor by back substitution, with the
// denominators perturbed away from zero in the style of LAPACK xTREVC.
CMatrix triangular_eigenvectors(const CMatrix& t) {
  const Eigen::Index n = t.rows();
  const double small = std::max(kEps * sup_induced_norm(t), std::numeric_limits<double>::min());
  CMatrix y = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    y(k, k) = 1.0;
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      Complex acc = 0.0;
      for (Eigen::Index l = j + 1; l <= k; ++l) acc += t(j, l) * y(l, k);
      Complex denom = t(j, j) - t(k, k);
      if (std::abs(denom) < small) denom = small;
      y(j, k) = -acc / denom;
    }
  }
  return y;
}

}  // namespace

EigenSet eigenvalues(const CMatrix& a) {
  EigenSet out;
  const Eigen::Index n = a.rows();
  if (n == 0) return out;
  if (n == 1) {
    out.values.push_back(a(0, 0));
    return out;
  }
  Eigen::HessenbergDecomposition<CMatrix> hess(a);
  CMatrix h = hess.matrixH();
  CMatrix z = hess.matrixQ();
  schur_qr(h, z);

  out.values.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) out.values.push_back(h(k, k));

  const CMatrix v = z * triangular_eigenvectors(h);
  for (Eigen::Index k = 0; k < n; ++k) {
    const CVector vk = v.col(k);
    const double scale = sup_norm(vk);
    if (scale == 0.0) continue;
    const CVector r = a * vk - out.values[static_cast<std::size_t>(k)] * vk;
    out.residual = std::max(out.residual, sup_norm(r) / scale);
  }
  return out;
}

double spectral_bound(const CMatrix& a) {
  const EigenSet eig = eigenvalues(a);
  double s = -std::numeric_limits<double>::infinity();
  for (const Complex& l : eig.values) s = std::max(s, l.real());
  return s;
}

namespace {

// Pade coefficients b_0..b_m for degrees 3, 5, 7, 9, 13 and the norm
// thresholds theta_m that bound the backward error by unit roundoff.
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t M>
void pade_low(const CMatrix& a, const std::array<double, M>& b, CMatrix& u, CMatrix& v) {
  const Eigen::Index n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  CMatrix even = b[0] * id;
  CMatrix odd = b[1] * id;
  CMatrix power = id;
  for (std::size_t k = 2; k < M; k += 2) {
    power = power * a2;
    even += b[k] * power;
    if (k + 1 < M) odd += b[k + 1] * power;
  }
  u = a * odd;
  v = even;
}

void pade13(const CMatrix& a, CMatrix& u, CMatrix& v) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const CMatrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                          b[3] * a2 + b[1] * id;
  u = a * inner_u;
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
      b[0] * id;
}

}  // namespace

CMatrix expm(const CMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  const double norm = sup_induced_norm(a);
  if (!std::isfinite(norm)) throw NumericError("expm: matrix has non-finite entries");
  if (norm == 0.0) return CMatrix::Identity(n, n);

  CMatrix u, v;
  int squarings = 0;
  if (norm <= kTheta3) {
    pade_low(a, kPade3, u, v);
  } else if (norm <= kTheta5) {
    pade_low(a, kPade5, u, v);
  } else if (norm <= kTheta7) {
    pade_low(a, kPade7, u, v);
  } else if (norm <= kTheta9) {
    pade_low(a, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    pade13(a / std::ldexp(1.0, squarings), u, v);
  }
  CMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

CMatrix inverse(const CMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DomainError("inverse: matrix is not square");
  const double threshold = kSingularPivotRatio * sup_induced_norm(a);
  CMatrix lu = a;
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (!(std::abs(lu(piv, k)) > threshold))
      throw SingularMatrixError("inverse: pivot below singularity threshold");
    if (piv != k) {
      lu.row(k).swap(lu.row(piv));
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(piv)]);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      lu(i, k) /= lu(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) lu(i, j) -= lu(i, k) * lu(k, j);
    }
  }

  CMatrix inv(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    CVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = perm[static_cast<std::size_t>(i)] == col ? 1.0 : 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < i; ++j) x(i) -= lu(i, j) * x(j);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      for (Eigen::Index j = i + 1; j < n; ++j) x(i) -= lu(i, j) * x(j);
      x(i) /= lu(i, i);
    }
    inv.col(col) = x;
  }
  return inv;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](std::span<const Complex> from, std::span<const Complex> to) {
    double worst = 0.0;
    for (const Complex& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<Complex> unique_points(std::vector<Complex> points) {
  auto less = [](const Complex& x, const Complex& y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace multop
