#include "fracporo/analysis/vtk.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

std::string number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
T read_value(std::istream& in, const char* what) {
  T v;
  if (!(in >> v)) throw ParseError(std::string("VTK: expected ") + what);
  return v;
}

void expect(std::istream& in, const std::string& word) {
  std::string got;
  if (!(in >> got) || got != word) throw ParseError("VTK: expected '" + word + "', got '" + got + "'");
}

}  // namespace

void write_vtk(std::ostream& out, const FineMesh& mesh, const std::vector<NodalScalar>& scalars,
               const Vec& displacement, const std::string& title) {
  const int n = mesh.num_nodes();
  const int t = mesh.num_triangles();
  for (const auto& s : scalars)
    if (s.values.size() != n) throw ContractError("scalar field '" + s.name + "' has the wrong size");
  if (displacement.size() != 2 * n) throw ContractError("displacement field has the wrong size");

  out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << n << " double\n";
  for (const auto& p : mesh.nodes()) out << number(p.x) << ' ' << number(p.y) << " 0\n";
  out << "CELLS " << t << ' ' << 4 * t << '\n';
  for (const auto& tri : mesh.triangles()) out << "3 " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
  out << "CELL_TYPES " << t << '\n';
  for (int k = 0; k < t; ++k) out << "5\n";
  out << "POINT_DATA " << n << '\n';
  for (const auto& s : scalars) {
    out << "SCALARS " << s.name << " double 1\nLOOKUP_TABLE default\n";
    for (int k = 0; k < n; ++k) out << number(s.values[k]) << '\n';
  }
  out << "VECTORS displacement double\n";
  for (int k = 0; k < n; ++k) out << number(displacement[2 * k]) << ' ' << number(displacement[2 * k + 1]) << " 0\n";
}

void write_vtk(const std::filesystem::path& path, const FineMesh& mesh, const std::vector<NodalScalar>& scalars,
               const Vec& displacement, const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_vtk(out, mesh, scalars, displacement, title);
  if (!out) throw Error("failed writing " + path.string());
}

VtkData read_vtk(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# vtk DataFile Version", 0) != 0) throw ParseError("VTK: bad header");
  std::getline(in, line);  // title
  if (!std::getline(in, line) || line != "ASCII") throw ParseError("VTK: only ASCII files are supported");
  expect(in, "DATASET");
  expect(in, "UNSTRUCTURED_GRID");

  VtkData data;
  int npoints = -1;
  std::string key;
  while (in >> key) {
    if (key == "POINTS") {
      npoints = read_value<int>(in, "point count");
      read_value<std::string>(in, "point type");
      for (int k = 0; k < npoints; ++k) {
        const double x = read_value<double>(in, "x"), y = read_value<double>(in, "y");
        read_value<double>(in, "z");
        data.points.push_back({x, y});
      }
    } else if (key == "CELLS") {
      const int ncells = read_value<int>(in, "cell count");
      read_value<int>(in, "cell list size");
      for (int k = 0; k < ncells; ++k) {
        if (read_value<int>(in, "cell size") != 3) throw ParseError("VTK: only triangles are supported");
        std::array<int, 3> c{};
        for (int& v : c) v = read_value<int>(in, "cell node");
        data.cells.push_back(c);
      }
    } else if (key == "CELL_TYPES") {
      const int ncells = read_value<int>(in, "cell type count");
      for (int k = 0; k < ncells; ++k)
        if (read_value<int>(in, "cell type") != 5) throw ParseError("VTK: only triangles are supported");
    } else if (key == "POINT_DATA") {
      if (read_value<int>(in, "point data count") != npoints) throw ParseError("VTK: point data count mismatch");
    } else if (key == "SCALARS") {
      const auto name = read_value<std::string>(in, "scalar name");
      read_value<std::string>(in, "scalar type");
      read_value<int>(in, "component count");
      expect(in, "LOOKUP_TABLE");
      read_value<std::string>(in, "table name");
      auto& values = data.scalars[name];
      for (int k = 0; k < npoints; ++k) values.push_back(read_value<double>(in, "scalar value"));
    } else if (key == "VECTORS") {
      const auto name = read_value<std::string>(in, "vector name");
      read_value<std::string>(in, "vector type");
      auto& values = data.vectors[name];
      for (int k = 0; k < npoints; ++k) {
        std::array<double, 3> v{};
        for (double& c : v) c = read_value<double>(in, "vector component");
        values.push_back(v);
      }
    } else {
      throw ParseError("VTK: unexpected keyword '" + key + "'");
    }
  }
  return data;
}

}  // namespace fracporo
