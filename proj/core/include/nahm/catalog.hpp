#pragma once

#include "nahm/lie_algebra.hpp"

namespace nahm {

/// Built-in algebras: "so3", "sl2", "heisenberg", "aff1", "abelian(n)" and
/// '+'-separated direct sums such as "sl2+aff1". All entries validate.
LieAlgebra catalog(const std::string& name);

struct CatalogEntry {
  std::string name;
  std::string summary;
};
std::vector<CatalogEntry> catalog_entries();

/// Defining two-dimensional representation of sl2 (basis h, e, f).
Representation sl2_defining_representation();

/// Defining three-dimensional representation of so3; coincides with the
/// adjoint representation in the cross-product basis.
Representation so3_defining_representation();

}  // namespace nahm
