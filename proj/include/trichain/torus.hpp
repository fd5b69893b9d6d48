#pragma once

// The Hamiltonian torus action: on representations by conjugating with prefix
// products of rotations about the pants-curve fixed points, on chains by
// rotating sub-chains, and on projective space by phase multiplication.

#include "trichain/coords.hpp"

namespace trichain {

struct TorusElement {
    std::vector<double> theta;  // n-3 components, theta[j] is theta_{j+1} in [0, 2*pi)

    explicit TorusElement(std::vector<double> t);

    int dim() const { return static_cast<int>(theta.size()); }

    // Increments theta_i - theta_{i-1} with theta_0 = 0, reduced to [0, 2*pi).
    std::vector<double> increments() const;
};

// Conjugates each generator image by the prefix product of rotations by the
// increments about the fixed points B_j of the original representation; the
// last two generators are conjugated by the same element.
DTRepresentation act_on_rep(const TorusElement& theta, const DTRepresentation& rep);

// The same action transported to the chain: the sub-chain from triangle i on
// rotates about B_i by the i-th increment.
TriangleChain act_on_chain(const TorusElement& theta, const TriangleChain& chain);

// [z_0 : e^{-i theta_1} z_1 : ... : e^{-i theta_{n-3}} z_{n-3}].
ProjectivePoint act_on_cp(const TorusElement& theta, const ProjectivePoint& p);

struct FlowSample {
    double t = 0.0;
    ActionAngleCoords coords;
};

struct FlowTrajectory {
    int direction = 0;  // 1-based coordinate direction
    bool boundary_warning = false;
    std::vector<FlowSample> samples;
};

// Samples the flow of the `direction`-th torus coordinate: theta(t) = t*e_dir
// for t = 0, dt, ..., steps*dt, recording the action-angle coordinates. Along
// the flow sigma_dir decreases with slope -1 and everything else is constant.
// Sets boundary_warning when some area parameter is below 1e-3 * lambda.
FlowTrajectory flow_trajectory(const DTRepresentation& rep, int direction, int steps, double dt);

}  // namespace trichain
