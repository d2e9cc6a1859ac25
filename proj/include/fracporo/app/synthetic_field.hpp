#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

enum class FieldStyle { kLayered, kLognormalBlobs };

/// "layered" or "lognormal-blobs"; ValidationError otherwise.
FieldStyle parse_field_style(const std::string& name);

/// Deterministic heterogeneous coefficient per triangle with values in
/// [1, contrast]:
///
///  1. a raw score s per triangle: smooth value noise on an 8x8 lattice
///     (blobs) or hashed horizontal bands (layered), plus 20% per-triangle
///     hash noise;
///  2. two Jacobi passes averaging s with its edge neighbours;
///  3. min-max normalization to [0, 1] and the map contrast^s.
///
/// All randomness comes from a splitmix64 hash of (seed, index), so equal
/// seeds give bitwise-identical fields. Throws DataError if contrast < 1.
std::vector<double> generate_synthetic_field(std::uint64_t seed, const FineMesh& mesh, double contrast,
                                             FieldStyle style);

}  // namespace fracporo
