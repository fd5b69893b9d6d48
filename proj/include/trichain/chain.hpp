#pragma once

// The polygonal model: chains of geodesic triangles built on the fixed points
// of a representation, the bijection with the representation space, and
// structural validation against the interior-angle laws.

#include <string>
#include <vector>

#include "trichain/repspace.hpp"

namespace trichain {

inline constexpr double kChainAngleTol = 1e-8;
inline constexpr double kAreaSumTol = 1e-8;

// Point configuration (C_1..C_n, B_1..B_{n-3}) with the aliases B_0 = C_1 and
// B_{n-2} = C_n. The chain triangle D_i has vertices (B_i, C_{i+2}, B_{i+1})
// for i = 0..n-3. Indices below are 0-based: C[k] is C_{k+1}, B[k] is B_{k+1}.
struct TriangleChain {
    AngleVector alpha;
    std::vector<PointH> C;
    std::vector<PointH> B;

    int n() const { return alpha.n(); }

    // B_i including the aliases; i = 0..n-2 in the mathematical indexing.
    const PointH& b_full(int i) const;

    // D_i for i = 0..n-3.
    Triangle triangle(int i) const;

    // 2 * signed area of each D_i.
    std::vector<double> doubled_areas() const;
};

// The configuration of fixed points of a representation. Throws
// NotEllipticError (via fixed_points) on inputs outside the component.
TriangleChain to_chain(const DTRepresentation& rep);

// The representation sending each generator to the rotation by alpha_i about
// C_i. Validates the chain first and throws InvalidChainError on failure.
DTRepresentation from_chain(const TriangleChain& chain);

struct ChainDiagnostics {
    bool pass = false;
    double area_sum_residual = 0.0;          // |2*sum areas - lambda|
    std::vector<double> beta;                // recursion values beta_0..beta_{n-2}
    std::vector<double> angle_residuals;     // per-triangle worst interior-angle residual
    std::vector<double> degeneracy_residuals;  // per-triangle vertex spread when degenerate
    std::vector<double> supplementary_residuals;  // at shared vertices of adjacent triangles
    std::vector<bool> degenerate;
    std::string message;

    double worst() const;
};

// Checks all structural conditions: nonnegative clockwise triangles with
// interior angles (beta_i/2, pi - alpha_{i+2}/2, pi - beta_{i+1}/2) computed
// through the beta recursion, collapsed vertices for degenerate triangles,
// supplementary angles at shared vertices, and the area sum. Diagnostic only.
ChainDiagnostics validate_chain(const TriangleChain& chain);

// Pointwise image of the chain under an isometry.
TriangleChain apply_to_chain(const Isometry& g, const TriangleChain& chain);

// Canonical pose for serialization: C_1 = i and the first chain point distinct
// from C_1 placed on the upward vertical ray.
TriangleChain normal_form(const TriangleChain& chain);

}  // namespace trichain
