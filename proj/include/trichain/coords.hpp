#pragma once

// Action-angle coordinates on chains of triangles and the equivariant map to
// complex projective space, together with its inverse construction, moment
// maps and Fubini-Study geometry.

#include <complex>
#include <vector>

#include "trichain/chain.hpp"
#include "trichain/triangle_solver.hpp"

namespace trichain {

using Complex = std::complex<double>;

// Homogeneous coordinates [z_0 : ... : z_{n-3}] of a point of CP^{n-3},
// stored as n-2 complex numbers, not all zero.
struct ProjectivePoint {
    std::vector<Complex> z;

    int dim() const { return static_cast<int>(z.size()); }
    double norm_squared() const;
};

// Scales so that sum |z_k|^2 = target and rotates so the first nonzero
// coordinate is a positive real. Throws ZeroVectorError on the zero vector.
ProjectivePoint normalize(const ProjectivePoint& p, double target);

// Fubini-Study distance between projective classes, in [0, pi/2]. Evaluated
// through the orthogonal component so that distances far below 1e-8 are still
// resolved (arccos of the overlap saturates near machine precision).
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// Area parameters a_i = 2[D_i], angle parameters gamma_i between consecutive
// triangles and their partial sums sigma_i, all reduced to [0, 2*pi).
struct ActionAngleCoords {
    std::vector<double> a;      // size n-2, indices 0..n-3
    std::vector<double> gamma;  // size n-3, gamma[j] is gamma_{j+1}
    std::vector<double> sigma;  // size n-3, sigma[j] is sigma_{j+1}
};

// a_i = 2 * signed_area(D_i), clamped at zero.
std::vector<double> area_params(const TriangleChain& chain);

// The angle parameters with the degenerate-case rules: gamma_i = 0 when all
// earlier areas vanish, pi - alpha_{i+2}/2 when a_i = 0 but an earlier area is
// positive, and the oriented angle from the ray B_i C_{i+2} to the ray
// B_i C_{m(i)+2} otherwise, m(i) being the last earlier index with positive
// area.
ActionAngleCoords angle_params(const TriangleChain& chain);

// The closed-form area parameter through the hyperbolic law of cosines,
//   4*arcsin( sin(alpha_{i+2}/2) sin(beta_i/2)
//             / (2 sin((alpha_{i+2}+2*pi-beta_{i+1}-beta_i)/4))
//             * (cosh d(C_{i+2},B_i) - 1) ),
// with cosh d - 1 evaluated directly from the coordinates of C_{i+2} and B_i.
// Used as an independent route to a_i in the verification suites.
double area_param_arcsin(const TriangleChain& chain, int i, double beta_i, double beta_next);

// The coordinate map: [sqrt(a_0) : sqrt(a_1) e^{i sigma_1} : ...], returned in
// normalized form.
ProjectivePoint coordinate_map(const DTRepresentation& rep);
ProjectivePoint coordinate_map(const TriangleChain& chain);

// Inverse construction: builds the chain triangle by triangle with prescribed
// areas |z_k|^2/2 and interior angles, consuming the phases of the nonzero
// coordinates as oriented angles between triangles. Degenerate coordinates
// collapse the corresponding points.
TriangleChain chain_from_projective(const AngleVector& alpha, const ProjectivePoint& p);
DTRepresentation construct_from_projective(const AngleVector& alpha, const ProjectivePoint& p);

// Moment map components mu_i = (alpha_{i+2} + beta_{i+1} - beta_i - 2*pi)/(2*lambda)
// for i = 1..n-3, computed from the rotation numbers of the pants curves.
std::vector<double> moment_mu(const DTRepresentation& rep);

// Moment map of the torus action on CP^{n-3}: nu_i = |z_i|^2 / (2 |z|^2),
// i = 1..n-3. Scale invariant. Throws ZeroVectorError on the zero vector.
std::vector<double> moment_nu(const ProjectivePoint& p);

// Fubini-Study 2-form at p on ambient tangent representatives u, v,
// normalized so the total volume of CP^m is pi^m/m!.
double fubini_study(const ProjectivePoint& p, const std::vector<Complex>& u,
                    const std::vector<Complex>& v);

// Finite-difference verification of the Darboux identity
//   lambda * (pullback of the Fubini-Study form) = 1/2 sum da_i ^ dsigma_i
// on the (a, sigma) chart through the full construct/measure round trip.
// Indices i, j refer to a_i resp. sigma_j with i, j in 1..n-3.
struct WolpertResidual {
    double mixed;        // |lambda*w(d/da_i, d/dsigma_j) - delta_ij/2|
    double area_area;    // |lambda*w(d/da_i, d/da_j)|
    double angle_angle;  // |lambda*w(d/dsigma_i, d/dsigma_j)|
};
WolpertResidual wolpert_check(const AngleVector& alpha, const ActionAngleCoords& base, int i,
                              int j, double step = 1e-4);

}  // namespace trichain
