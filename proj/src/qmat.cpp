// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qent/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qent/error.hpp"

namespace qent {

bool is_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

static void check_hermitian(const CMat& m) {
  if (!is_hermitian(m)) throw DomainError("matrix is not Hermitian within tolerance");
}

EigResult hermitian_eig(const CMat& m) {
  check_hermitian(m);
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  const Eigen::Index n = m.rows();
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = es.eigenvalues()[n - 1 - i];
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

RVec eigvalsh(const CMat& m) {
  check_hermitian(m);
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

double min_eigenvalue(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

int total_dim(const Dims& dims) {
  int n = 1;
  for (int d : dims) {
    require(d >= 1, "subsystem dimension must be positive");
    n *= d;
  }
  return n;
}

namespace {

// Mixed-radix digits of a flat index, slowest factor first.
void digits_of(int index, const Dims& dims, std::vector<int>& out) {
  out.resize(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
}

int index_of(const std::vector<int>& digits, const Dims& dims) {
  int idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

}  // namespace

CMat partial_transpose(const CMat& rho, const Dims& dims, int subsystem) {
  require(dims.size() >= 2, "partial transpose needs at least two factors");
  require(subsystem >= 0 && subsystem < static_cast<int>(dims.size()), "invalid subsystem index");
  const int n = total_dim(dims);
  require(rho.rows() == n && rho.cols() == n, "matrix size does not match dims");
  CMat out(n, n);
  std::vector<int> di, dj;
  for (int i = 0; i < n; ++i) {
    digits_of(i, dims, di);
    for (int j = 0; j < n; ++j) {
      digits_of(j, dims, dj);
      std::swap(di[subsystem], dj[subsystem]);
      out(i, j) = rho(index_of(di, dims), index_of(dj, dims));
      std::swap(di[subsystem], dj[subsystem]);
    }
  }
  return out;
}

CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<int>& keep) {
  require(!keep.empty(), "partial trace needs at least one kept factor");
  const int n = total_dim(dims);
  require(rho.rows() == n && rho.cols() == n, "matrix size does not match dims");
  std::vector<bool> kept(dims.size(), false);
  Dims kdims;
  for (int k : keep) {
    require(k >= 0 && k < static_cast<int>(dims.size()), "invalid kept factor");
    require(!kept[k], "duplicate kept factor");
    kept[k] = true;
  }
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) kdims.push_back(dims[k]);
  const int m = total_dim(kdims);
  CMat out = CMat::Zero(m, m);
  std::vector<int> di, dj, ki(kdims.size()), kj(kdims.size());
  for (int i = 0; i < n; ++i) {
    digits_of(i, dims, di);
    for (int j = 0; j < n; ++j) {
      digits_of(j, dims, dj);
      bool diag = true;
      for (std::size_t k = 0, c = 0; k < dims.size(); ++k) {
        if (kept[k]) {
          ki[c] = di[k];
          kj[c] = dj[k];
          ++c;
        } else if (di[k] != dj[k]) {
          diag = false;
          break;
        }
      }
      if (diag) out(index_of(ki, kdims), index_of(kj, kdims)) += rho(i, j);
    }
  }
  return out;
}

CMat reduced_from_pure(const CVec& psi, const Dims& dims, const std::vector<int>& keep) {
  const int n = total_dim(dims);
  require(psi.size() == n, "vector size does not match dims");
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    require(k >= 0 && k < static_cast<int>(dims.size()), "invalid kept factor");
    kept[k] = true;
  }
  Dims kdims, tdims;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kdims : tdims).push_back(dims[k]);
  const int m = total_dim(kdims);
  const int r = n / m;
  // Reshape psi into an m x r matrix M so that the reduced state is M M^dagger.
  CMat mat = CMat::Zero(m, r);
  std::vector<int> d, kd(kdims.size()), td(tdims.size());
  for (int i = 0; i < n; ++i) {
    digits_of(i, dims, d);
    for (std::size_t k = 0, a = 0, b = 0; k < dims.size(); ++k) {
      if (kept[k])
        kd[a++] = d[k];
      else
        td[b++] = d[k];
    }
    int row = index_of(kd, kdims);
    int col = tdims.empty() ? 0 : index_of(td, tdims);
    mat(row, col) = psi[i];
  }
  return mat * mat.adjoint();
}

CMat psd_sqrt(const CMat& m) {
  EigResult e = hermitian_eig(m);
  RVec s = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * s.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

void validate_density(const CMat& rho, const Dims& dims) {
  const int n = total_dim(dims);
  require(rho.rows() == n && rho.cols() == n, "density matrix size does not match dims");
  require(is_hermitian(rho), "density matrix is not Hermitian");
  require(std::abs(rho.trace() - cplx(1.0, 0.0)) <= 1e-12, "density matrix trace differs from 1");
  require(min_eigenvalue(rho) >= -kPsdTol, "density matrix has a negative eigenvalue");
}

CMat projector(const CVec& psi) { return psi * psi.adjoint(); }

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMat identity(int n) { return CMat::Identity(n, n); }

CMat expm_hermitian(const CMat& generator) {
  EigResult e = hermitian_eig(generator);
  CVec phases(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) phases[i] = std::exp(cplx(0.0, -e.values[i]));
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

}  // namespace qent
