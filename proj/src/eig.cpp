#include "qsd/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsd {

namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian()) throw NotHermitian("matrix is not Hermitian within 1e-12");
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// Sort eigenpairs descending by value; ties keep their prior (unitary) order.
EigResult sorted(std::vector<double> values, std::vector<Ket> vectors) {
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  EigResult out;
  for (int i : idx) {
    out.values.push_back(values[i]);
    out.vectors.push_back(vectors[i]);
  }
  return out;
}

EigResult eig2_closed_form(const ComplexMatrix& m) {
  const double alpha = m(0, 0).real();
  const double beta = m(1, 1).real();
  const cxd c = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mid = 0.5 * (alpha + beta);
  const double d = 0.5 * (alpha - beta);
  const double ac = std::abs(c);
  const double r = std::hypot(d, ac);

  if (ac < 1e-300 || r < 1e-300) {
    // Diagonal (or fully degenerate): the standard basis diagonalises it.
    return sorted({alpha, beta}, {Ket::basis(2, 0), Ket::basis(2, 1)});
  }

  // Eigenvector of the larger eigenvalue is (c, lam_plus - alpha); the second
  // component equals r - d, computed without cancellation when d > 0.
  const double y = d > 0.0 ? ac * ac / (r + d) : r - d;
  const double nrm = std::sqrt(ac * ac + y * y);
  const cxd v0 = c / nrm;
  const cxd v1 = y / nrm;
  Ket plus({v0, v1});
  Ket minus({-std::conj(v1), std::conj(v0)});  // exact orthonormal partner
  return EigResult{{mid + r, mid - r}, {plus, minus}};
}

}  // namespace

EigResult jacobi_hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m);
  const int n = m.dim();
  ComplexMatrix h = symmetrized(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
    if (off_diagonal_norm(h) <= tol::jacobi_off) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cxd hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq < 1e-300) continue;
        const cxd phase = hpq / apq;
        const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * apq);
        double t = 1.0;
        if (tau != 0.0) {
          t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          if (tau < 0.0) t = -t;
        }
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;

        ComplexMatrix rot = ComplexMatrix::identity(n);
        rot(p, p) = cth;
        rot(q, q) = cth;
        rot(p, q) = sth * phase;
        rot(q, p) = -sth * std::conj(phase);

        h = rot.adjoint() * h * rot;
        v = v * rot;
      }
    }
  }

  std::vector<double> values(n);
  std::vector<Ket> vectors;
  for (int i = 0; i < n; ++i) values[i] = h(i, i).real();
  for (int col = 0; col < n; ++col) {
    std::vector<cxd> amps(n);
    for (int row = 0; row < n; ++row) amps[row] = v(row, col);
    vectors.push_back(Ket::normalized(std::move(amps)));
  }
  return sorted(std::move(values), std::move(vectors));
}

EigResult hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m);
  if (m.dim() == 2) return eig2_closed_form(symmetrized(m));
  return jacobi_hermitian_eig(m);
}

double trace_norm(const ComplexMatrix& m) {
  const EigResult e = hermitian_eig(m);
  double s = 0.0;
  for (double lam : e.values) s += std::abs(lam);
  return s;
}

SqrtPair matrix_sqrt_and_pinv_sqrt(const ComplexMatrix& m) {
  const EigResult e = hermitian_eig(m);
  if (e.values.back() < -tol::psd)
    throw NotPsd("matrix has eigenvalue " + std::to_string(e.values.back()));
  SqrtPair out{ComplexMatrix(m.dim()), ComplexMatrix(m.dim())};
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    const double lam = std::max(e.values[i], 0.0);
    const ComplexMatrix proj = e.vectors[i].outer();
    out.sqrt += std::sqrt(lam) * proj;
    if (lam >= tol::support_cut) out.pinv_sqrt += (1.0 / std::sqrt(lam)) * proj;
  }
  return out;
}

}  // namespace qsd
