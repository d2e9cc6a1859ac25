#pragma once

#include <functional>

#include "fracporo/mesh/scope.hpp"
#include "fracporo/types.hpp"

namespace fracporo {

using ScalarField = std::function<double(const Point&)>;

/// Load vector int f phi_l over the bulk, 3-point Gauss rule per triangle
/// (exact for quadratic f).
Vec assemble_manufactured_source(const ScalarField& f, const FineMesh& mesh, const MeshScope& scope);
Vec assemble_manufactured_source(const ScalarField& f, const FineMesh& mesh);

/// Interleaved vector load for the displacement block.
Vec assemble_vector_source(const ScalarField& fx, const ScalarField& fy, const FineMesh& mesh);

}  // namespace fracporo
