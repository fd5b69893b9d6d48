#pragma once

// Representations of the n-punctured sphere group into PSL(2,R) with elliptic
// boundary holonomy: membership diagnostics, rotation numbers of the pants
// curves, volume by two independent formulas, and the relative Euler class.

#include <array>
#include <vector>

#include "trichain/halfplane.hpp"
#include "trichain/words.hpp"

namespace trichain {

inline constexpr double kRelatorTol = 1e-9;
inline constexpr double kGenAngleTol = 1e-9;
// Looser than the matrix tolerances: the volume accumulates n-1 triangle areas.
inline constexpr double kVolumeTol = 1e-7;

// Boundary angles alpha in (0, 2*pi)^n together with the scaling factor
//   lambda = sum(alpha) - 2*pi*(n-1),
// required positive (the compact component is empty otherwise).
class AngleVector {
public:
    explicit AngleVector(std::vector<double> alpha);

    int n() const { return static_cast<int>(alpha_.size()); }
    double lambda() const { return lambda_; }
    const std::vector<double>& values() const { return alpha_; }
    double operator[](int i) const { return alpha_[i]; }

private:
    std::vector<double> alpha_;
    double lambda_;
};

// A representation given by the images of the generators c_1..c_n, stored as
// a concrete tuple rather than a conjugacy class. All derived quantities are
// conjugation invariant.
struct DTRepresentation {
    AngleVector alpha;
    std::vector<Isometry> gens;

    int n() const { return alpha.n(); }
};

// Fixed points C_i of the generator images and B_i of the pants-curve images.
// Throws NotEllipticError if any required image fails classification, which
// signals that the input does not lie in the intended component.
struct PointConfiguration {
    std::vector<PointH> C;  // size n
    std::vector<PointH> B;  // size n-3
};
PointConfiguration fixed_points(const DTRepresentation& rep);

// Rotation number beta_i of the curve b_i, for i = 0..n-2 with the boundary
// conventions beta_0 = 2*pi - alpha_1 and beta_{n-2} = alpha_n.
double beta(const DTRepresentation& rep, int i);
std::vector<double> beta_all(const DTRepresentation& rep);

// Volume through the bar-resolution cocycle with base point z:
//   sum_{i=2}^{n-1} [D(z, g_1..g_{i-1} z, g_1..g_i z)] - sum_i [D(C_i, z, g_i z)].
// Independent of z; requires all generator images elliptic (their fixed
// points enter the relative correction terms).
double volume_cocycle(const std::vector<Isometry>& gens, const PointH& z);
double volume_cocycle(const DTRepresentation& rep, const PointH& z);

// Volume as -2 * sum of the chain triangle areas; equals -lambda exactly on
// the compact component.
double volume_chain(const DTRepresentation& rep);

struct EulerData {
    double volume = 0.0;
    int euler_class = 0;
};

// Extension of the rotation number to all of PSL(2,R): the angle on elliptic
// elements, 0 on hyperbolic or positively parabolic ones, 2*pi on the
// identity and negatively parabolic ones.
double theta_bar(const Isometry& g);

// Relative Euler class from vol = 2*pi*k - sum theta_bar(g_i). Throws
// NonIntegerEulerError if the rounding residual exceeds 1e-5.
EulerData euler_class(const std::vector<Isometry>& gens);
EulerData euler_class(const DTRepresentation& rep);

// The conjugated tuple h * g_i * h^{-1}; all derived quantities are invariant.
DTRepresentation conjugate(const DTRepresentation& rep, const Isometry& h);

// Membership diagnostics: relator residual, per-generator rotation-angle
// residuals, and the volume residual against -lambda. Never throws.
struct RepDiagnostics {
    bool pass = false;
    double relator_residual = 0.0;
    std::vector<double> angle_residuals;
    double volume_residual = 0.0;
    std::string message;  // nonempty when a structural failure occurred
};
RepDiagnostics validate(const DTRepresentation& rep);

// ---- the three-punctured sphere ----

enum class TripleConfig { Coincident, ClockwiseTriangle, AnticlockwiseTriangle };

struct EllipticTriple {
    std::array<double, 3> alpha;
    std::array<Isometry, 3> gens;
    std::array<PointH, 3> fixed;
};

// Decide which of the three admissible fixed-point configurations a triple
// with product one realizes, verifying the interior angles
// (pi - alpha_i/2 clockwise, alpha_i/2 anticlockwise) to 1e-8.
// Throws InconsistentConfigurationError if the checks fail and DomainError if
// the preconditions (elliptic, product one) do not hold.
TripleConfig classify_triple(const std::array<double, 3>& alpha,
                             const std::array<Isometry, 3>& gens);

// The unique-up-to-conjugacy triple of rotations with product one and the
// given angles. Throws EmptyVarietyError for angle sums in (2*pi, 4*pi) and
// DomainError for angles outside (0, 2*pi).
EllipticTriple construct_triple(const std::array<double, 3>& alpha);

}  // namespace trichain
