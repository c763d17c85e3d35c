#pragma once

#include "nahm/lie_algebra.hpp"

namespace nahm {

/// One verified statement about g / A(g). `statement` carries the identity
/// the check certifies, so report lines are self-describing.
struct TheoremCheck {
  std::string name;       // stable dotted identifier, e.g. "nahm.commutativity"
  std::string statement;  // the identity checked, e.g. "XY = YX"
  bool pass = false;
  bool skipped = false;   // precondition not met for this algebra
  std::string detail;
};

/// Runs the full invariant suite for g and its Nahm algebra. Deterministic:
/// all sampling uses a fixed seed. Checks whose preconditions fail (e.g.
/// simplicity) are reported as skipped, never silently dropped.
std::vector<TheoremCheck> run_theorem_checks(const LieAlgebra& g);

/// True when every non-skipped check passed.
bool all_pass(const std::vector<TheoremCheck>& checks);

}  // namespace nahm
