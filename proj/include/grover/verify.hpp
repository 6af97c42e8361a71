#pragma once

#include "grover/engine.hpp"
#include "grover/oracle.hpp"
#include "grover/state_vector.hpp"
#include "grover/variant.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace grover::verify {

// One verified property: worst measured deviation against its tolerance.
struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

// Signature of the iterate; injectable so tests can confirm the suite catches
// a deliberately broken step.
using StepFn = StateVector (*)(const StateVector&, Oracle&, const StateVector&,
                               IterateVariant);

// Reflection / statevector primitives.
CheckResult check_reflection_involution();
CheckResult check_norm_preservation();
CheckResult check_reflection_linearity();
CheckResult check_plane_preservation();   // reflections keep 2D spans invariant
CheckResult check_conjugated_reflection(); // U I_psi U^-1 == I_{U psi}, 1000 trials
CheckResult check_reflection_pair_2d();    // -I_v == I_{v_perp} on 2x2 matrices
CheckResult check_rotation_composition();  // two mirrors == rotation by 2*delta

// Oracle query model.
CheckResult check_oracle_involutions();
CheckResult check_oracle_equivalences();
CheckResult check_query_accounting();

// Iterate behaviour against the closed form and the plane model.
CheckResult check_closed_form_agreement(StepFn step = &grover_step);
CheckResult check_plane_confinement();
CheckResult check_plane_realness();
CheckResult check_angle_additivity();
CheckResult check_variant_relation();
CheckResult check_monotone_approach();
CheckResult check_squared_rotation();
CheckResult check_random_u_efficacy();

// Output plumbing.
CheckResult check_output_determinism();

// Runs every check whose name contains `only` (all when empty), in a fixed
// order.
std::vector<CheckResult> run_all(const std::string& only = "");

// Prints one line per result; returns the number of failures.
int print_report(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace grover::verify
