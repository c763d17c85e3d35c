#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <set>

#include "nahm/double_system.hpp"
#include "nahm/nahm_algebra.hpp"

namespace nahm {

struct FlowOptions {
  double t_end = 10.0;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 = no cap
  double blow_up_norm = 1e9;
  std::set<std::string> monitors;  // subset of {"confinement", "potential", "gradient"}
};

enum class FlowStatus { completed, blow_up, equilibrium, step_underflow };

std::string to_string(FlowStatus s);

/// Time-stamped states of the Nahm flow with per-monitor diagnostic channels.
/// Dense output between accepted steps uses a quartic Hermite interpolant
/// fed by the exact first and second derivatives of the quadratic field.
class Trajectory {
 public:
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // flattened 3n coordinates
  FlowStatus status = FlowStatus::completed;
  double blow_up_estimate = 0.0;  // meaningful only when status == blow_up
  std::map<std::string, std::vector<double>> diagnostics;

  [[nodiscard]] std::vector<double> sample(double t) const;
  [[nodiscard]] double t_front() const { return times.front(); }
  [[nodiscard]] double t_back() const { return times.back(); }

  std::shared_ptr<const DoubleSystem> system;  // for dense output
};

Trajectory integrate(const NahmAlgebra& a, const std::vector<double>& p, const FlowOptions& opts);
Trajectory integrate(const NahmAlgebra& a, const NahmElement& p, const FlowOptions& opts);

/// Max distance of trajectory states (with sup-norm at most norm_cutoff) from
/// the product-closed subspace generated by the initial condition.
double monitor_confinement(const NahmAlgebra& a, const Trajectory& traj, const NahmElement& p,
                           double norm_cutoff = 1e300);

/// || grad phi - X^2 ||_inf at x, where phi(X) = 1/3 C(X, X^2) and the
/// gradient is taken with respect to the C-inner product (central
/// differences with step h). Requires a nondegenerate standard form.
double monitor_gradient(const NahmAlgebra& a, const std::vector<double>& x, double h);

/// phi nondecreasing along the trajectory up to 10 * abs_tol slack; requires
/// a compact semisimple algebra.
bool monitor_monotone(const NahmAlgebra& a, const Trajectory& traj, double abs_tol = 1e-12);

/// Integrates the sum system from p1 (+) p2 and the two summand systems
/// separately; returns the max componentwise deviation on a shared sample
/// grid (dense output).
double monitor_decoupling(const LieAlgebra& g1, const LieAlgebra& g2, const NahmElement& p1,
                          const NahmElement& p2, const FlowOptions& opts);

/// phi(X) = 1/3 C(X, X^2) evaluated in binary64.
double potential_value(const NahmAlgebra& a, const std::vector<double>& x);

/// CSV export: header t,x1_1..x1_n,x2_1..x2_n,x3_1..x3_n plus one column per
/// active monitor channel; 17 significant digits.
void write_csv(std::ostream& os, const NahmAlgebra& a, const Trajectory& traj);

}  // namespace nahm
