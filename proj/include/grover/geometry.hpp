#pragma once

#include "grover/engine.hpp"
#include "grover/state_vector.hpp"
#include "grover/variant.hpp"

#include <cstdint>

namespace grover {

struct Vec2 {
    double c1 = 0.0;
    double c2 = 0.0;
};

struct Mat2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static Mat2 rotation(double angle);

    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.c1 + a12 * v.c2, a21 * v.c1 + a22 * v.c2};
    }
    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    double max_abs_diff(const Mat2& o) const;
};

// Real orthonormal frame {e1, e2} of the invariant plane span{U|0>, |x0>}:
// e1 = U|0>, and the phase xi is chosen so that e^{i xi}|x0> = a e1 + b e2
// with a = |<U0|x0>| >= 0 and b > 0. xi is normalized to (-pi, pi].
struct PlaneBasis {
    StateVector e1;
    StateVector e2;
    double xi = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Throws when u0 and x0_state are parallel (|overlap| >= 1 - 1e-14); the
// plane is degenerate and callers treat that start as an immediate success.
// Orthogonal inputs are fine (a = 0).
PlaneBasis build_plane_basis(const StateVector& u0, const StateVector& x0_state);

// The analytic rotation model: sin(alpha) = |<x0|U|0>|, beta = pi/2 - alpha,
// and the iterate angle alpha_n(k) = (2k+1) alpha.
struct RotationModel {
    double alpha = 0.0;
    double beta = 0.0;

    static RotationModel from_overlap(double overlap_magnitude);
    double alpha_n(int k) const { return (2 * k + 1) * alpha; }
};

// 2x2 reflection in the line at angle theta through the origin.
Mat2 reflection_matrix(double theta);

// Reflection in the line at theta1 followed by reflection in the line at
// theta2; equals counterclockwise rotation by 2 (theta2 - theta1).
Mat2 rotation_from_reflections(double theta1, double theta2);

struct PlaneProjection {
    Vec2 coords;                // real coordinates after phase factoring
    double residual = 0.0;      // norm of the out-of-plane component
    double phase = 0.0;         // factored-out common phase, in (-pi/2, pi/2]
    double imag_residual = 0.0; // what remains imaginary after factoring
};

// Coordinates of `state` in the plane frame. The common global phase of the
// two coordinates is factored out and reported separately; a large residual
// is data (the state left the plane), not an error.
PlaneProjection project_to_plane(const StateVector& state, const PlaneBasis& basis);

// One analytic step in plane coordinates. Positive rotation moves e1 toward
// x0. MinusSign advances by 2 alpha. Squared advances by 4 alpha, which is
// the rotation through 4 beta = 2 pi - 4 alpha traversed the other way
// around; the sign here is fixed by matching the simulated iterates.
Vec2 model_step(const Vec2& v, const RotationModel& model, IterateVariant variant);

struct TraceComparison {
    double max_prob_dev = 0.0;
    double max_coord_dev = 0.0;
    double max_residual = 0.0;
};

// Worst-case deviation between the simulated trace and the pure 2D rotation
// model, across all recorded iterations. Coordinates are skipped for
// degenerate-plane traces.
TraceComparison compare_trace(const IterationTrace& trace, const RotationModel& model);

} // namespace grover
