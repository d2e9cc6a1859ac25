#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fracporo/mesh/fine_mesh.hpp"
#include "fracporo/types.hpp"

namespace fracporo {

/// Nodal scalar field (one value per fine node).
struct NodalScalar {
  std::string name;
  Vec values;
};

/// Legacy VTK 3.0 ASCII, UNSTRUCTURED_GRID:
///
///   # vtk DataFile Version 3.0
///   <title>
///   ASCII
///   DATASET UNSTRUCTURED_GRID
///   POINTS <n> double            x y 0 per line
///   CELLS <t> <4t>               3 a b c per line
///   CELL_TYPES <t>               5 per line
///   POINT_DATA <n>
///   SCALARS <name> double 1 / LOOKUP_TABLE default, one value per line
///   VECTORS displacement double  ux uy 0 per line
///
/// Numbers are printed with %.17g; negative zero is written as 0.
void write_vtk(std::ostream& out, const FineMesh& mesh, const std::vector<NodalScalar>& scalars,
               const Vec& displacement, const std::string& title = "fracporo");
void write_vtk(const std::filesystem::path& path, const FineMesh& mesh, const std::vector<NodalScalar>& scalars,
               const Vec& displacement, const std::string& title = "fracporo");

/// Contents of a file produced by write_vtk.
struct VtkData {
  std::vector<Point> points;
  std::vector<std::array<int, 3>> cells;
  std::map<std::string, std::vector<double>> scalars;
  std::map<std::string, std::vector<std::array<double, 3>>> vectors;
};

/// Reader for the subset written above. Throws ParseError otherwise.
VtkData read_vtk(std::istream& in);

}  // namespace fracporo
