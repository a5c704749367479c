#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "rhig/errors.hpp"

namespace rhig {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using VecCRef = Eigen::Ref<const Eigen::VectorXd>;

/// Decision set X: an axis-aligned box or all of R^n.
struct FeasibleSet {
  enum class Kind { Box, All };

  Kind kind = Kind::All;
  int dim = 0;
  Vec lower;  // box only
  Vec upper;  // box only

  static FeasibleSet all_of_space(int dim);
  static FeasibleSet box(Vec lower, Vec upper);

  bool bounded() const { return kind == Kind::Box; }
  bool contains(const VecCRef& x, double tol = 0.0) const;

  /// Euclidean projection (per-coordinate clamp for boxes).
  Vec project(const VecCRef& x) const;
};

/// Free-function form of FeasibleSet::project.
Vec project(const FeasibleSet& set, const VecCRef& x);

enum class SwitchArity {
  Pair,    // d(x_t, x_{t-1})
  Triple,  // d(x_{t+1}, x_t, x_{t-1})
};

/// Marks cost families with known closed forms (exact offline solves,
/// closed-form environment variation). Custom callbacks use None.
enum class QuadraticKind {
  None,
  Tracking,     // f = (alpha/2)||x-theta||^2
  LinearTheta,  // f = (alpha/2)(||x||^2 - 2<theta,x>)
};

/// A parameterized stage cost f(x; theta), a switching cost, and the
/// regularity constants the regret machinery needs.
///
/// Constants are declared by the constructor; for custom callbacks they are
/// verified statistically (see verify_constants), not symbolically.
struct CostSpec {
  QuadraticKind quad_kind = QuadraticKind::None;
  SwitchArity arity = SwitchArity::Pair;

  std::function<double(const VecCRef& x, const VecCRef& theta)> f;
  std::function<Vec(const VecCRef& x, const VecCRef& theta)> grad_f;

  // Pair switching cost d(x, x_prev) and both partial gradients.
  std::function<double(const VecCRef& x, const VecCRef& x_prev)> d;
  std::function<Vec(const VecCRef& x, const VecCRef& x_prev)> grad_d_x;
  std::function<Vec(const VecCRef& x, const VecCRef& x_prev)> grad_d_xprev;

  // Triple switching cost d3(x_next, x, x_prev) and its partial gradients.
  std::function<double(const VecCRef&, const VecCRef&, const VecCRef&)> d3;
  std::function<Vec(const VecCRef&, const VecCRef&, const VecCRef&)> grad_d3_next;
  std::function<Vec(const VecCRef&, const VecCRef&, const VecCRef&)> grad_d3_mid;
  std::function<Vec(const VecCRef&, const VecCRef&, const VecCRef&)> grad_d3_prev;

  double alpha = 0.0;       // strong convexity of f
  double l_f = 0.0;         // smoothness of f
  double l_d = 0.0;         // smoothness of the switching cost
  double h = 0.0;           // theta-Lipschitz constant of grad_f
  double grad_bound = 0.0;  // G: sup ||grad_f||, 0 when unknown
  double beta_cap = 0.0;    // beta: 0 <= d <= (beta/2)||x-x'||^2

  // The experiment quadratics carry extra structure used by the exact solver
  // and the control-recovery map.
  double quad_beta = 0.0;                 // switching weight of the built-in family
  std::optional<double> smoothness_override;  // numeric L for irregular stencils

  /// Smoothness L of the full-horizon objective. Pair stencil: l_f + 2 l_d.
  /// Triple stencil: l_f + 3 l_d unless a numeric value was supplied.
  double total_smoothness() const {
    if (smoothness_override) return *smoothness_override;
    return arity == SwitchArity::Pair ? l_f + 2.0 * l_d : l_f + 3.0 * l_d;
  }

  bool is_quadratic_family() const { return quad_kind != QuadraticKind::None; }

  void validate() const;
};

/// f = (alpha/2)||x - theta||^2, d = (beta/2)||x - x'||^2.
/// Constants: l_f = alpha, l_d = 2 beta, h = alpha, so L = alpha + 4 beta.
CostSpec quadratic_tracking_cost(double alpha, double beta);

/// f = (alpha/2)(||x||^2 - 2<theta, x>) with the same switching cost; the
/// gradients match the tracking family but the cost lacks the theta^2 term.
CostSpec quadratic_linear_cost(double alpha, double beta);

/// The parameter path theta_1..theta_T, stored as p x T columns.
struct ParamTrajectory {
  Mat theta;  // p x T

  ParamTrajectory() = default;
  explicit ParamTrajectory(Mat values);

  int horizon() const { return static_cast<int>(theta.cols()); }
  int dim() const { return static_cast<int>(theta.rows()); }

  /// 1-based stage access.
  Vec stage(int t) const;

  /// Flatten to a pT vector (stage-major).
  Vec stacked() const;
};

/// Decisions x_1..x_T plus the fixed initial decision x_0.
struct DecisionTrajectory {
  Vec x0;
  Mat x;  // n x T

  DecisionTrajectory() = default;
  DecisionTrajectory(Vec x0_in, Mat x_in);

  int horizon() const { return static_cast<int>(x.cols()); }
  int dim() const { return static_cast<int>(x.rows()); }

  /// 0-based stage access; stage(0) == x0.
  Vec stage(int t) const;

  Vec stacked() const;
  static DecisionTrajectory from_stacked(const Vec& x0, const VecCRef& stacked, int n, int T);
};

/// Result of the statistical verification of declared constants.
struct ConstantCheckReport {
  double max_theta_lipschitz_violation = 0.0;  // Assumption 2
  double min_curvature = 0.0;                  // secant curvature of f
  double max_curvature = 0.0;
  double max_switch_cap_violation = 0.0;  // d <= (beta/2)||x-x'||^2
  bool ok(double tol = 1e-6) const;
};

/// Samples random (x, theta, theta') pairs and checks the declared constants.
ConstantCheckReport verify_constants(const CostSpec& spec, int dim, int samples,
                                     std::uint64_t seed = 0, double radius = 10.0);

}  // namespace rhig
