#pragma once

#include <vector>

#include "loewner/scalar_function.hpp"

namespace loewner {

enum class MeasureKind { UnitInterval, HalfLine, Pick };

const char* to_string(MeasureKind k);
MeasureKind measure_kind_from_string(const std::string& s);

/// Finite nonnegative weighted nodes plus endpoint atoms.  Nodes live strictly
/// inside the open support; endpoint mass goes in the named atoms, whose
/// kernels degenerate to the constant 1 and the identity t.
struct RepresentingMeasure {
    MeasureKind kind = MeasureKind::UnitInterval;
    std::vector<double> nodes;
    std::vector<double> weights;
    double atom_at_zero = 0.0;
    double atom_at_one_or_infinity = 0.0;  // at 1 (unit-interval) or infinity (half-line)
};

/// Validate invariants (weight sign, node placement) and return the measure.
RepresentingMeasure make_measure(MeasureKind kind, std::vector<double> nodes,
                                 std::vector<double> weights, double atom_at_zero = 0.0,
                                 double atom_at_one_or_infinity = 0.0);

void validate_measure(const RepresentingMeasure& mu);

double total_mass(const RepresentingMeasure& mu);

/// Kernel value: t/(lambda + (1-lambda) t) on [0,1], t(1+lambda)/(t+lambda)
/// on the half-line.  Both send lambda=0 to 1 and the far endpoint to t.
double measure_kernel(MeasureKind kind, double t, double lambda);

/// f(t) = sum_i w_i K(t, lambda_i) + atom0 * 1 + atom1 * t, for t > 0.
double eval_measure(const RepresentingMeasure& mu, double t);

/// Node transport lambda <-> lambda/(1-lambda) between the unit-interval and
/// half-line forms; weights and atoms carry over unchanged and the kernel
/// identity makes eval_measure agree on both sides.
RepresentingMeasure convert_measure(const RepresentingMeasure& mu, MeasureKind target);

/// The measure as a ScalarFunction (analytic derivatives and complex
/// evaluator); any nonnegative measure yields an operator monotone function.
ScalarFunction measure_function(const RepresentingMeasure& mu, const std::string& name = "measure");

/// f(z) = alpha z + beta + int (lambda/(1+lambda^2) - 1/(z+lambda)) dnu(lambda).
struct PickRepresentation {
    double alpha = 0.0;  // slope at infinity, >= 0
    double beta = 0.0;
    RepresentingMeasure nu;  // kind Pick; atom_at_zero allowed
};

/// Build the Pick form of f from f(1), f'(1) and the probability measure mu
/// (half-line kind) representing Tf:
///   nu = f'(1) (1+lambda)^2 mu|_(0,inf),  alpha = f'(1) mu({inf}),
///   beta = f(1) - f'(1) mu({inf}) + f'(1) int (1-lambda^2)/(1+lambda^2) dmu.
PickRepresentation to_pick(double f1, double fp1, const RepresentingMeasure& mu);

/// Evaluate off the closed negative real axis, Im z >= 0.  Real z > 0 gives a
/// real value; Im z > 0 gives nonnegative imaginary part.
Complex eval_pick(const PickRepresentation& rep, Complex z);

/// The Pick representation as a ScalarFunction on (0,inf).
ScalarFunction pick_function(const PickRepresentation& rep, const std::string& name = "pick");

}  // namespace loewner
