#include "fiva/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fiva {

CMat CMat::identity(int dim) {
  CMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

CMat matmul(const CMat& lhs, const CMat& rhs) {
  const int n = lhs.n;
  CMat out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) acc += lhs(i, k) * rhs(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

CMat adjoint(const CMat& m) {
  CMat out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

CVec matvec(const CMat& m, const CVec& x) {
  CVec out(m.n, cplx(0.0, 0.0));
  for (int i = 0; i < m.n; ++i) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < m.n; ++j) acc += m(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

double frob_norm(const CMat& m) {
  double acc = 0.0;
  for (const cplx& v : m.a) acc += std::norm(v);
  return std::sqrt(acc);
}

double frob_dist(const CMat& lhs, const CMat& rhs) {
  double acc = 0.0;
  for (std::size_t i = 0; i < lhs.a.size(); ++i) acc += std::norm(lhs.a[i] - rhs.a[i]);
  return std::sqrt(acc);
}

bool all_finite(const CMat& m) {
  for (const cplx& v : m.a) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

HermitianMatrix HermitianMatrix::from(const CMat& m) {
  if (m.n <= 0) throw Error(ErrorCode::InvalidInput, "empty matrix");
  if (!all_finite(m)) throw Error(ErrorCode::InvalidInput, "non-finite matrix entries");
  double scale = frob_norm(m);
  double tol = 1e-12 * std::max(scale, 1e-300);
  CMat out(m.n);
  for (int i = 0; i < m.n; ++i) {
    if (std::abs(m(i, i).imag()) > tol) {
      throw Error(ErrorCode::InvalidInput, "matrix is not Hermitian (diagonal)");
    }
    out(i, i) = cplx(m(i, i).real(), 0.0);
    for (int j = 0; j < i; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw Error(ErrorCode::InvalidInput, "matrix is not Hermitian");
      }
      cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return HermitianMatrix(std::move(out));
}

namespace {

// Makes the largest-modulus component real and non-negative. Ties resolve to
// the lowest index, so the result is deterministic.
void fix_phase(CVec& v) {
  int pivot = 0;
  double best = -1.0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    double mag = std::norm(v[i]);
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  double mag = std::abs(v[pivot]);
  if (mag == 0.0) return;
  cplx rot = std::conj(v[pivot]) / mag;
  for (cplx& x : v) x *= rot;
  v[pivot] = cplx(std::abs(v[pivot].real()), 0.0);
}

bool lex_less(const CVec& lhs, const CVec& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].real() != rhs[i].real()) return lhs[i].real() < rhs[i].real();
    if (lhs[i].imag() != rhs[i].imag()) return lhs[i].imag() < rhs[i].imag();
  }
  return false;
}

double off_diag_frob(const CMat& m) {
  double acc = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

}  // namespace

EigenDecomposition eigh(const HermitianMatrix& h) {
  const int n = h.dim();
  CMat a = h.mat();
  CMat u = CMat::identity(n);
  const double scale = frob_norm(a);

  if (scale > 0.0) {
    // Cyclic Jacobi sweeps; stop when the off-diagonal mass is negligible.
    const double stop = 1e-14 * scale;
    for (int sweep = 0; sweep < 100; ++sweep) {
      if (off_diag_frob(a) < stop) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const cplx apq = a(p, q);
          const double mag = std::abs(apq);
          if (mag <= 1e-300) continue;
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * mag);
          const double sign = tau >= 0.0 ? 1.0 : -1.0;
          const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx phase = apq / mag;  // e^{i phi}
          const cplx sp = s * phase;

          // A <- R^H A R with R = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
          for (int i = 0; i < n; ++i) {
            const cplx aip = a(i, p);
            const cplx aiq = a(i, q);
            a(i, p) = c * aip - std::conj(sp) * aiq;
            a(i, q) = sp * aip + c * aiq;
          }
          for (int j = 0; j < n; ++j) {
            const cplx apj = a(p, j);
            const cplx aqj = a(q, j);
            a(p, j) = c * apj - sp * aqj;
            a(q, j) = std::conj(sp) * apj + c * aqj;
          }
          a(p, q) = std::conj(a(q, p));
          a(p, p) = cplx(a(p, p).real(), 0.0);
          a(q, q) = cplx(a(q, q).real(), 0.0);

          for (int i = 0; i < n; ++i) {
            const cplx uip = u(i, p);
            const cplx uiq = u(i, q);
            u(i, p) = c * uip - std::conj(sp) * uiq;
            u(i, q) = sp * uip + c * uiq;
          }
        }
      }
    }
  }

  // Extract, normalize, phase-fix, then order ascending with a lexicographic
  // tie break on the eigenvectors.
  std::vector<double> lambda(n);
  std::vector<CVec> vecs(n, CVec(n));
  for (int j = 0; j < n; ++j) {
    lambda[j] = a(j, j).real();
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) norm_sq += std::norm(u(i, j));
    double inv = norm_sq > 0.0 ? 1.0 / std::sqrt(norm_sq) : 0.0;
    for (int i = 0; i < n; ++i) vecs[j][i] = u(i, j) * inv;
    fix_phase(vecs[j]);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (lambda[lhs] != lambda[rhs]) return lambda[lhs] < lambda[rhs];
    return lex_less(vecs[lhs], vecs[rhs]);
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMat(n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = lambda[order[j]];
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = vecs[order[j]][i];
  }
  return out;
}

std::pair<double, CVec> smallest_eigvec(const HermitianMatrix& m) {
  EigenDecomposition dec = eigh(m);
  CVec v(m.dim());
  for (int i = 0; i < m.dim(); ++i) v[i] = dec.eigenvectors(i, 0);
  return {dec.eigenvalues[0], std::move(v)};
}

CMat inv_sqrt_from_eig(const EigenDecomposition& eig, double eig_floor_ratio) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  const double lambda_max = eig.eigenvalues[n - 1];
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::DegenerateMatrix, "matrix has no positive eigenvalue");
  }
  const double floor = eig_floor_ratio * lambda_max;
  std::vector<double> inv_root(n);
  for (int i = 0; i < n; ++i) {
    inv_root[i] = 1.0 / std::sqrt(std::max(eig.eigenvalues[i], floor));
  }
  // U diag(inv_root) U^H, lower triangle computed then mirrored so the result
  // is exactly Hermitian.
  CMat out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        acc += eig.eigenvectors(i, k) * inv_root[k] * std::conj(eig.eigenvectors(j, k));
      }
      if (i == j) {
        out(i, i) = cplx(acc.real(), 0.0);
      } else {
        out(i, j) = acc;
        out(j, i) = std::conj(acc);
      }
    }
  }
  return out;
}

CMat inv_sqrt(const HermitianMatrix& m, double eig_floor_ratio) {
  return inv_sqrt_from_eig(eigh(m), eig_floor_ratio);
}

namespace {

struct Lu {
  CMat lu;
  std::vector<int> perm;
  int swaps = 0;
  bool singular = false;
};

Lu lu_factor(const CMat& m) {
  const int n = m.n;
  Lu out{m, std::vector<int>(n), 0, false};
  std::iota(out.perm.begin(), out.perm.end(), 0);
  double scale = 0.0;
  for (const cplx& v : m.a) scale = std::max(scale, std::abs(v));
  const double tiny = scale * 1e-14 + std::numeric_limits<double>::min();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(out.lu(col, col));
    for (int i = col + 1; i < n; ++i) {
      double mag = std::abs(out.lu(i, col));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best <= tiny) {
      out.singular = true;
      return out;
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(out.lu(col, j), out.lu(pivot, j));
      std::swap(out.perm[col], out.perm[pivot]);
      ++out.swaps;
    }
    const cplx inv_piv = 1.0 / out.lu(col, col);
    for (int i = col + 1; i < n; ++i) {
      const cplx factor = out.lu(i, col) * inv_piv;
      out.lu(i, col) = factor;
      for (int j = col + 1; j < n; ++j) out.lu(i, j) -= factor * out.lu(col, j);
    }
  }
  return out;
}

CVec lu_solve(const Lu& f, const CVec& b) {
  const int n = f.lu.n;
  CVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i) {
    cplx acc = x[i];
    for (int j = 0; j < i; ++j) acc -= f.lu(i, j) * x[j];
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    cplx acc = x[i];
    for (int j = i + 1; j < n; ++j) acc -= f.lu(i, j) * x[j];
    x[i] = acc / f.lu(i, i);
  }
  return x;
}

}  // namespace

CMat inverse(const CMat& m) {
  if (!all_finite(m)) throw Error(ErrorCode::InvalidInput, "non-finite matrix entries");
  Lu f = lu_factor(m);
  if (f.singular) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  const int n = m.n;
  CMat out(n);
  CVec e(n, cplx(0.0, 0.0));
  for (int col = 0; col < n; ++col) {
    e[col] = cplx(1.0, 0.0);
    CVec x = lu_solve(f, e);
    for (int i = 0; i < n; ++i) out(i, col) = x[i];
    e[col] = cplx(0.0, 0.0);
  }
  return out;
}

CVec solve(const CMat& m, const CVec& b) {
  Lu f = lu_factor(m);
  if (f.singular) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  return lu_solve(f, b);
}

double log_abs_det(const CMat& m) {
  Lu f = lu_factor(m);
  if (f.singular) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (int i = 0; i < m.n; ++i) acc += std::log(std::abs(f.lu(i, i)));
  return acc;
}

}  // namespace fiva
