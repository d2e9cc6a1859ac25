#pragma once

#include <string>

#include "fracporo/assembly/model.hpp"
#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo::test {

/// Unit square split along the (0,0)-(1,1) diagonal; optionally that
/// diagonal is a fracture.
FineMesh two_triangle_square(bool diagonal_fracture = false);

/// cells x cells lattice on [0, size]^2. With `fractured`, one horizontal
/// fracture at mid-height and one vertical fracture crossing it. Every
/// `lock_every`-th lattice line stays straight under jitter.
FineMesh structured_mesh(int cells, bool fractured = false, double size = 1.0, double jitter = 0.0,
                         int lock_every = 0);

/// Single bulk continuum with constant coefficients.
PoroModel bulk_model(const FineMesh& mesh, double storage, double permeability, double biot, double youngs = 1.0,
                     double poisson = 0.3);

/// Bulk continuum "m" plus fracture continuum "f" coupled by a constant eta.
PoroModel fractured_model(const FineMesh& mesh, double eta, double bulk_permeability = 1.0,
                          double fracture_permeability = 10.0);

/// Two bulk continua and a fracture continuum, all pairs exchanging.
PoroModel triple_model(const FineMesh& mesh, double eta);

/// Path of a file shipped under data/.
std::string data_path(const std::string& relative);

}  // namespace fracporo::test
