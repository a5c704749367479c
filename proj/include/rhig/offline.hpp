#pragma once

#include "rhig/core.hpp"

namespace rhig {

/// C(x; theta) = sum_t [ f(x_t; theta_t) + switching ], including the
/// d(x_1, x_0) term. Triple stencils sum d3(x_{t+1}, x_t, x_{t-1}) over
/// t = 1..T-1 (no coupling past the horizon).
double total_cost(const CostSpec& spec, const DecisionTrajectory& x, const ParamTrajectory& theta);

/// Gradient of C with respect to x_tau (1-based). Only neighboring stages
/// enter: +-1 for pair stencils, +-2 for triple.
Vec partial_gradient(const CostSpec& spec, const DecisionTrajectory& x, const VecCRef& theta_tau,
                     int tau);

/// All stage gradients stacked into an nT vector.
Vec stacked_gradient(const CostSpec& spec, const DecisionTrajectory& x,
                     const ParamTrajectory& theta);

/// Hessian of C assembled from the quadratic structure (quadratic families
/// only). Used for exact solves and numeric smoothness estimates.
Mat quadratic_hessian(const CostSpec& spec, int n, int T);

struct OfflineSolution {
  DecisionTrajectory x_star;
  double cost = 0.0;
  long iterations = 0;
  double residual = 0.0;  // final gradient-mapping norm; 0 for exact solves
};

struct OfflineOptions {
  double tol = 1e-10;        // gradient-mapping norm target
  long max_iterations = 1000000;
  bool allow_exact = true;   // banded solve for unconstrained quadratics
};

/// argmin_{x in X^T} C(x; theta). Unconstrained quadratic families are
/// solved exactly by a banded linear solve; everything else runs projected
/// gradient descent with step 1/L until the gradient-mapping norm <= tol.
/// Throws NumericalError (carrying the last iterate in the message) when the
/// iteration cap is hit.
OfflineSolution offline_optimum(const CostSpec& spec, const ParamTrajectory& theta,
                                const FeasibleSet& set, const Vec& x0,
                                const OfflineOptions& opts = {});

struct CurvatureReport {
  double max_lower_violation = 0.0;  // strong-convexity side
  double max_upper_violation = 0.0;  // smoothness side
  int trials = 0;
};

/// Samples random (x, y, theta) and checks
///   (alpha/2)||x-y||^2 <= C(y)-C(x)-<gradC(x),y-x> <= (L/2)||x-y||^2.
CurvatureReport check_lemma1(const CostSpec& spec, int n, int T, int trials,
                             std::uint64_t seed = 0);

}  // namespace rhig
