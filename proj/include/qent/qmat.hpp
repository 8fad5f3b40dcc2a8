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

// Small dense complex linear algebra shared by every other module.
//
// Basis convention: row-major tensor ordering |i_A, i_B, ...> with the first
// factor as the slowest index, i.e. the computational basis |00>,|01>,|10>,|11>.

#ifndef QENT_QMAT_HPP_
#define QENT_QMAT_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qent {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Dims = std::vector<int>;

inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct EigResult {
  RVec values;   // descending
  CMat vectors;  // column j pairs with values[j]
};

// m = V diag(values) V^dagger with values sorted descending.
// Throws DomainError if m is not Hermitian within kHermTol (entrywise, scaled
// by max(1, |m|_max)).
EigResult hermitian_eig(const CMat& m);

// Eigenvalues only, descending. Same Hermiticity contract.
RVec eigvalsh(const CMat& m);

// Smallest eigenvalue of a Hermitian matrix (no Hermiticity check; used on
// matrices built to be Hermitian by construction in hot loops).
double min_eigenvalue(const CMat& m);

bool is_hermitian(const CMat& m, double tol = kHermTol);

CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

int total_dim(const Dims& dims);

// <i,m| rho^{T_sys} |j,n> = <j,m| rho |i,n> for the chosen tensor factor.
CMat partial_transpose(const CMat& rho, const Dims& dims, int subsystem);

// Reduced matrix over the factors listed in keep (ascending order kept).
CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<int>& keep);

// Reduced state of a pure vector over the listed factors (avoids forming |psi><psi|).
CMat reduced_from_pure(const CVec& psi, const Dims& dims, const std::vector<int>& keep);

// PSD square root via eigendecomposition (negative round-off clamped to 0).
CMat psd_sqrt(const CMat& m);

// Throws DomainError unless rho is Hermitian (1e-12), trace 1 (1e-12),
// eigenvalues >= -1e-10 and dims multiply to its size.
void validate_density(const CMat& rho, const Dims& dims);

CMat projector(const CVec& psi);

CMat pauli_x();
CMat pauli_y();
CMat pauli_z();
CMat identity(int n);

// Unitary built from a Hermitian generator: exp(-i * generator).
CMat expm_hermitian(const CMat& generator);

}  // namespace qent

#endif  // QENT_QMAT_HPP_
