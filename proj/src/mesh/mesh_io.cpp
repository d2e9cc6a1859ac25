#include "fracporo/mesh/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

enum class Section { kNone, kNodes, kTriangles, kFractures, kBoundary };

Section section_from_keyword(const std::string& word) {
  if (word == "NODES") return Section::kNodes;
  if (word == "TRIANGLES") return Section::kTriangles;
  if (word == "FRACTURE_EDGES") return Section::kFractures;
  if (word == "BOUNDARY") return Section::kBoundary;
  return Section::kNone;
}

bool is_keyword(const std::string& word) {
  return !word.empty() && std::isalpha(static_cast<unsigned char>(word[0])) &&
         std::all_of(word.begin(), word.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)) || c == '_'; });
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("mesh line " + std::to_string(line) + ": " + what);
}

}  // namespace

FineMesh read_fine_mesh(std::istream& in) {
  std::vector<Point> nodes;
  std::vector<char> node_seen;
  std::vector<Triangle> tris;
  std::vector<int> regions;
  std::vector<char> tri_seen;
  std::vector<Edge> fractures;
  std::vector<std::pair<int, std::uint8_t>> tags;

  Section current = Section::kNone;
  bool seen_section[5] = {false, false, false, false, false};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (is_keyword(word)) {
      const Section s = section_from_keyword(word);
      if (s == Section::kNone) fail(lineno, "unknown section '" + word + "'");
      if (seen_section[static_cast<int>(s)]) fail(lineno, "duplicate section '" + word + "'");
      seen_section[static_cast<int>(s)] = true;
      current = s;
      continue;
    }
    ls.clear();
    ls.str(line);
    switch (current) {
      case Section::kNone:
        fail(lineno, "data before any section header");
      case Section::kNodes: {
        long id;
        double x, y;
        if (!(ls >> id >> x >> y)) fail(lineno, "expected '<id> <x> <y>'");
        if (id < 0) fail(lineno, "negative node id");
        if (static_cast<std::size_t>(id) >= nodes.size()) {
          nodes.resize(id + 1);
          node_seen.resize(id + 1, 0);
        }
        if (node_seen[id]) fail(lineno, "duplicate node id " + std::to_string(id));
        node_seen[id] = 1;
        nodes[id] = {x, y};
        break;
      }
      case Section::kTriangles: {
        long id;
        int a, b, c, region;
        if (!(ls >> id >> a >> b >> c >> region)) fail(lineno, "expected '<id> <n1> <n2> <n3> <region>'");
        if (id < 0) fail(lineno, "negative triangle id");
        if (static_cast<std::size_t>(id) >= tris.size()) {
          tris.resize(id + 1);
          regions.resize(id + 1);
          tri_seen.resize(id + 1, 0);
        }
        if (tri_seen[id]) fail(lineno, "duplicate triangle id " + std::to_string(id));
        tri_seen[id] = 1;
        tris[id] = {a, b, c};
        regions[id] = region;
        break;
      }
      case Section::kFractures: {
        int a, b;
        if (!(ls >> a >> b)) fail(lineno, "expected '<n1> <n2>'");
        fractures.push_back({a, b});
        break;
      }
      case Section::kBoundary: {
        int node;
        std::string tag;
        if (!(ls >> node >> tag)) fail(lineno, "expected '<node> <L|R|T|B>'");
        const BoundarySide side = parse_side(tag);
        if (side == kNoSide) fail(lineno, "unknown boundary tag '" + tag + "'");
        tags.emplace_back(node, side);
        break;
      }
    }
    std::string extra;
    if (ls >> extra) fail(lineno, "trailing content '" + extra + "'");
  }

  if (!seen_section[static_cast<int>(Section::kNodes)]) throw ParseError("mesh has no NODES section");
  if (!seen_section[static_cast<int>(Section::kTriangles)]) throw ParseError("mesh has no TRIANGLES section");
  for (std::size_t i = 0; i < node_seen.size(); ++i)
    if (!node_seen[i]) throw ParseError("node ids are not contiguous: missing " + std::to_string(i));
  for (std::size_t i = 0; i < tri_seen.size(); ++i)
    if (!tri_seen[i]) throw ParseError("triangle ids are not contiguous: missing " + std::to_string(i));
  const int n = static_cast<int>(nodes.size());
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int v : tris[t])
      if (v < 0 || v >= n)
        throw ParseError("triangle " + std::to_string(t) + " references missing node " + std::to_string(v));

  std::vector<std::uint8_t> boundary(nodes.size(), kNoSide);
  for (const auto& [node, side] : tags) {
    if (node < 0 || node >= n) throw ParseError("boundary tag references missing node " + std::to_string(node));
    boundary[node] |= side;
  }
  return FineMesh(std::move(nodes), std::move(tris), std::move(regions), std::move(fractures), std::move(boundary));
}

FineMesh load_fine_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mesh file '" + path + "'");
  return read_fine_mesh(in);
}

void write_fine_mesh(std::ostream& out, const FineMesh& mesh) {
  out << std::setprecision(17);
  out << "# fracporo mesh: " << mesh.num_nodes() << " nodes, " << mesh.num_triangles() << " triangles, "
      << mesh.num_fracture_edges() << " fracture edges\n";
  out << "NODES\n";
  for (int i = 0; i < mesh.num_nodes(); ++i) out << i << ' ' << mesh.node(i).x << ' ' << mesh.node(i).y << '\n';
  out << "TRIANGLES\n";
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    out << t << ' ' << tri[0] << ' ' << tri[1] << ' ' << tri[2] << ' ' << mesh.regions()[t] << '\n';
  }
  out << "FRACTURE_EDGES\n";
  for (const auto& e : mesh.fracture_edges()) out << e[0] << ' ' << e[1] << '\n';
  out << "BOUNDARY\n";
  for (int i = 0; i < mesh.num_nodes(); ++i)
    for (BoundarySide s : {kLeft, kRight, kTop, kBottom})
      if (mesh.boundary_tag(i) & s) out << i << ' ' << side_letter(s) << '\n';
}

void save_fine_mesh(const std::string& path, const FineMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write mesh file '" + path + "'");
  write_fine_mesh(out, mesh);
  if (!out) throw ConfigError("failed writing mesh file '" + path + "'");
}

}  // namespace fracporo
