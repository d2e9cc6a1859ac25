#pragma once

#include <iosfwd>
#include <string>

#include "fracporo/mesh/fine_mesh.hpp"

namespace fracporo {

// Plain-text mesh format. Lines starting with '#' and blank lines are ignored.
// Sections may appear in any order, each at most once; NODES and TRIANGLES
// are mandatory.
//
//   NODES
//   <id> <x> <y>                  ids must be exactly 0..N-1 (any order)
//   TRIANGLES
//   <id> <n1> <n2> <n3> <region>  ids must be exactly 0..T-1
//   FRACTURE_EDGES
//   <n1> <n2>
//   BOUNDARY
//   <node> <L|R|T|B>              one line per (node, side) pair
//
// Any other section keyword is a ParseError.

FineMesh read_fine_mesh(std::istream& in);
FineMesh load_fine_mesh(const std::string& path);

void write_fine_mesh(std::ostream& out, const FineMesh& mesh);
void save_fine_mesh(const std::string& path, const FineMesh& mesh);

}  // namespace fracporo
