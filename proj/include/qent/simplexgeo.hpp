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

// Eigenvalue-simplex geometry for two qubits: the unit-side regular
// tetrahedron picture, analytic densities of R = 1/Tr(rho^2) and of the
// largest eigenvalue, and the Dirichlet mean purity.

#ifndef QENT_SIMPLEXGEO_HPP_
#define QENT_SIMPLEXGEO_HPP_

#include <array>

#include <Eigen/Dense>

#include "qent/qmat.hpp"

namespace qent {

using TetraPoint = Eigen::Vector3d;

// Vertex i of the unit-side tetrahedron centred at the origin (i = 0..3),
// vertex 3 on the +z axis and vertex 1 in the x > 0 half of the xz plane.
const std::array<TetraPoint, 4>& tetra_vertices();

// The same solid rotated about the z axis (the general-N vertex layout
// restricted to N = 4); used only to check frame independence.
const std::array<TetraPoint, 4>& tetra_vertices_alt();

// r = sum_i lam_i r_i. Throws DomainError unless lam is a 4-entry spectrum.
TetraPoint simplex_to_tetra(const RVec& lam);
// lam_i = 2 r.r_i + 1/4, order follows the vertex order (not sorted).
// Throws DomainError if the point lies outside the tetrahedron (slack 1e-12).
RVec tetra_to_simplex(const TetraPoint& r);

// Radius of the sphere of states with participation ratio R.
double radius_for_R(double r_val);
double R_for_radius(double radius);

// Area of the part of the radius-r sphere inside the tetrahedron.
double sphere_area_inside(double radius);
// Area of the part of the level surface {lambda_max = const} inside, as a
// function of the centre-to-vertex distance l of the inner tetrahedron.
double lambda_level_area(double l);
double l_for_lambda_max(double lm);

inline constexpr double kTetraVolume = 0.11785113019775792;  // sqrt(2)/12

// Densities on [1,4] and [1/4,1] under the product measure.
double f_R(double r_val);
double f_lambda_max(double lm);

// [n - (n-1)/(eta+1)]^(-1).
double avg_purity_dirichlet(int n, double eta);

}  // namespace qent

#endif  // QENT_SIMPLEXGEO_HPP_
