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

#include "qent/entmeas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "qent/error.hpp"

namespace qent {

namespace {

const CMat& sigma_yy() {
  static const CMat yy = kron(pauli_y(), pauli_y());
  return yy;
}

// Eigenvalues of a matrix that is Hermitian up to round-off.
RVec herm_values(const CMat& m) {
  CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

// W with rho = W W^dagger: eigenvectors scaled by sqrt(lambda). Directions
// with lambda below 1e-14 are dropped so rank-deficient states do not pick up
// sqrt(round-off) noise downstream.
CMat sqrt_factor(const CMat& rho) {
  constexpr double kDropBelow = 1e-14;
  const EigResult e = hermitian_eig(0.5 * (rho + rho.adjoint()));
  Eigen::Index rank = 0;
  while (rank < e.values.size() && e.values[rank] > kDropBelow) ++rank;
  CMat w = e.vectors.leftCols(rank);
  for (Eigen::Index j = 0; j < rank; ++j) w.col(j) *= std::sqrt(e.values[j]);
  return w;
}

// Square roots of eig(rho * J rho^* J) in descending order for a real
// symmetric unitary J: the singular values of W^T J W.
RVec wootters_roots(const CMat& rho, const CMat& conj_op) {
  const CMat w = sqrt_factor(rho);
  RVec out = RVec::Zero(rho.rows());
  if (w.cols() == 0) return out;
  Eigen::JacobiSVD<CMat> svd(w.transpose() * conj_op * w);
  out.head(w.cols()) = svd.singularValues();
  return out;
}

RVec probs_of(const CMat& rho) { return herm_values(rho).cwiseMax(0.0); }

void check_q(QParam q) { require(q.infinite || q.value > 0.0, "entropic index q must be positive"); }

void check_state_dims(const CMat& rho, const Dims& dims) {
  require(dims.size() == 2, "conditional entropies need a bipartite state");
  require(rho.rows() == total_dim(dims) && rho.cols() == rho.rows(), "state size does not match dims");
}

// Pair order 01,02,03,12,13,23.
constexpr std::array<std::pair<int, int>, 6> kPairs = {
    std::pair{0, 1}, std::pair{0, 2}, std::pair{0, 3}, std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}};

// Antiunitary dual for pair states: a -> J a*, J pairs 01<->23 (+), 02<->13 (-), 03<->12 (+).
const CMat& pair_dual() {
  static const CMat j = [] {
    CMat m = CMat::Zero(6, 6);
    m(0, 5) = m(5, 0) = 1.0;
    m(1, 4) = m(4, 1) = -1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
  }();
  return j;
}

}  // namespace

QParam QParam::finite(double q) {
  require(q > 0.0 && std::isfinite(q), "entropic index q must be positive and finite");
  return {q, false};
}

QParam QParam::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return inf();
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad entropic index '" + text + "'");
  }
  require(used == text.size(), "bad entropic index '" + text + "'");
  if (std::isinf(q)) return inf();
  return finite(q);
}

std::string QParam::name() const {
  if (infinite) return "inf";
  std::string s = std::to_string(value);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

double concurrence(const CMat& rho) {
  require(rho.rows() == 4 && rho.cols() == 4, "concurrence needs a two-qubit state");
  const RVec l = wootters_roots(rho, sigma_yy());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_pure(const CVec& psi) {
  require(psi.size() == 4, "concurrence needs a two-qubit state");
  return std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

double binary_entropy(double p) {
  double out = 0.0;
  if (p > 0.0 && p < 1.0) out = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return out;
}

double eof_from_concurrence(double c) {
  require(c >= -1e-12 && c <= 1.0 + 1e-12, "concurrence must lie in [0,1]");
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double eof(const CMat& rho) { return eof_from_concurrence(concurrence(rho)); }

double eof_pure(const CVec& psi) { return eof_from_concurrence(concurrence_pure(psi)); }

double purity(const CMat& rho) { return rho.squaredNorm(); }

double participation_ratio(const CMat& rho) { return 1.0 / purity(rho); }

double lambda_max(const CMat& rho) { return herm_values(rho)[0]; }

double von_neumann(const RVec& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s -= p[i] * std::log(p[i]);
  return s;
}

double renyi(const RVec& p, QParam q) {
  check_q(q);
  if (q.infinite) return -std::log(p.maxCoeff());
  if (q.is_one()) return von_neumann(p);
  double w = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) w += std::pow(p[i], q.value);
  return std::log(w) / (1.0 - q.value);
}

double tsallis(const RVec& p, QParam q) {
  check_q(q);
  if (q.infinite) return 0.0;
  if (q.is_one()) return von_neumann(p);
  double w = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) w += std::pow(p[i], q.value);
  return (1.0 - w) / (q.value - 1.0);
}

double renyi(const CMat& rho, QParam q) { return renyi(probs_of(rho), q); }
double tsallis(const CMat& rho, QParam q) { return tsallis(probs_of(rho), q); }

double conditional_q(const CMat& rho, const Dims& dims, QParam q, CondSide side, EntropyFamily family) {
  check_q(q);
  check_state_dims(rho, dims);
  const int cond = side == CondSide::kAgivenB ? 1 : 0;
  const RVec p_all = probs_of(rho);
  const RVec p_cond = probs_of(partial_trace(rho, dims, {cond}));
  if (family == EntropyFamily::kRenyi) return renyi(p_all, q) - renyi(p_cond, q);
  require(!q.infinite, "Tsallis conditional entropy has no q -> infinity form; use the Renyi family");
  const double s_all = tsallis(p_all, q), s_cond = tsallis(p_cond, q);
  if (q.is_one()) return s_all - s_cond;
  return (s_all - s_cond) / (1.0 + (1.0 - q.value) * s_cond);
}

double residual_tangle_raw(const CVec& psi, int n_qubits, int pivot) {
  require(n_qubits >= 2, "residual tangle needs at least two qubits");
  require(pivot >= 0 && pivot < n_qubits, "invalid pivot qubit");
  require(psi.size() == (Eigen::Index(1) << n_qubits), "vector size does not match qubit count");
  require(std::abs(psi.squaredNorm() - 1.0) <= 1e-10, "residual tangle needs a normalized pure state");
  const Dims dims(n_qubits, 2);
  const CMat r1 = reduced_from_pure(psi, dims, {pivot});
  double tangle = 4.0 * (r1(0, 0) * r1(1, 1) - r1(0, 1) * r1(1, 0)).real();
  for (int i = 0; i < n_qubits; ++i) {
    if (i == pivot) continue;
    const CMat r2 = reduced_from_pure(psi, dims, {std::min(i, pivot), std::max(i, pivot)});
    const double c = concurrence(r2);
    tangle -= c * c;
  }
  return tangle;
}

double residual_tangle_dW(const CVec& psi, int n_qubits, int pivot) {
  return std::clamp(residual_tangle_raw(psi, n_qubits, pivot), 0.0, 1.0);
}

double rebit_concurrence(const RMat& rho) {
  require(rho.rows() == 4 && rho.cols() == 4, "rebit concurrence needs a two-rebit state");
  // sigma_y x sigma_y is real: anti-diagonal (-1, 1, 1, -1).
  return std::abs(-rho(0, 3) + rho(1, 2) + rho(2, 1) - rho(3, 0));
}

double rebit_concurrence(const CMat& rho) {
  require(rho.rows() == 4 && rho.cols() == 4, "rebit concurrence needs a two-rebit state");
  require(rho.imag().cwiseAbs().maxCoeff() <= 1e-12, "rebit state has complex entries");
  return rebit_concurrence(RMat(rho.real()));
}

CVec fermion_pair_amplitudes(const CMat& w) {
  require(w.rows() == 4 && w.cols() == 4, "fermion coefficients form a 4x4 matrix");
  require((w + w.transpose()).cwiseAbs().maxCoeff() <= 1e-12, "fermion coefficients must be antisymmetric");
  CVec a(6);
  for (int p = 0; p < 6; ++p) a[p] = 2.0 * w(kPairs[p].first, kPairs[p].second);
  require(std::abs(a.squaredNorm() - 1.0) <= 1e-10, "fermion coefficients violate the normalization");
  return a;
}

double fermion_concurrence_pure(const CMat& w) {
  fermion_pair_amplitudes(w);
  const cplx pf = w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
  return std::min(1.0, 8.0 * std::abs(pf));
}

FermionMixedConcurrence fermion_concurrence_mixed(const CMat& rho) {
  require(rho.rows() == 6 && rho.cols() == 6, "two-fermion state must be 6x6");
  validate_density(rho, {6});
  const CMat& j = pair_dual();
  const RVec l = wootters_roots(rho, j);
  FermionMixedConcurrence out;
  out.value = std::max(0.0, l[0] - l.tail(5).sum());
  const RVec p = herm_values(rho);
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 1e-10) ++out.rank;
  return out;
}

FermionMixedConcurrence fermion_concurrence_mixed(const std::vector<double>& probs, const std::vector<CMat>& ws) {
  require(!probs.empty() && probs.size() == ws.size(), "mixture weights and states must pair up");
  CMat rho = CMat::Zero(6, 6);
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    require(probs[i] >= 0.0, "mixture weights must be non-negative");
    const CVec a = fermion_pair_amplitudes(ws[i]);
    rho += probs[i] * a * a.adjoint();
    total += probs[i];
  }
  require(std::abs(total - 1.0) <= 1e-12, "mixture weights must sum to 1");
  return fermion_concurrence_mixed(rho);
}

double boson_concurrence(const CMat& v) {
  require(v.rows() == 2 && v.cols() == 2, "boson coefficients form a 2x2 matrix");
  require((v - v.transpose()).cwiseAbs().maxCoeff() <= 1e-12, "boson coefficients must be symmetric");
  require(std::abs(2.0 * v.squaredNorm() - 1.0) <= 1e-10, "boson coefficients violate the normalization");
  return std::min(1.0, 4.0 * std::abs(v(0, 0) * v(1, 1) - v(0, 1) * v(0, 1)));
}

double fidelity(const CMat& r1, const CMat& r2) {
  require(r1.rows() == r2.rows() && r1.cols() == r2.cols(), "states must have equal dimension");
  // sqrt(F) is the trace norm of sqrt(r1) sqrt(r2), equal to that of W1^dagger W2.
  const CMat w1 = sqrt_factor(r1), w2 = sqrt_factor(r2);
  if (w1.cols() == 0 || w2.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(w1.adjoint() * w2);
  const double root = svd.singularValues().sum();
  return root * root;
}

double bures_distance(const CMat& r1, const CMat& r2) {
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(fidelity(r1, r2))));
}

double hs_distance(const CMat& r1, const CMat& r2) {
  require(r1.rows() == r2.rows() && r1.cols() == r2.cols(), "states must have equal dimension");
  return (r1 - r2).norm();
}

}  // namespace qent
