#include "fracporo/assembly/assemble.hpp"

#include <string>

#include "fracporo/assembly/element.hpp"
#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

#ifndef NDEBUG
void debug_check_symmetric(const SpMat& m, const char* what) {
  const SpMat diff = SpMat(m.transpose()) - m;
  const double scale = m.norm() > 0.0 ? m.norm() : 1.0;
  if (diff.norm() > 1e-12 * scale) throw NumericalError(std::string(what) + " is not symmetric");
}
#else
void debug_check_symmetric(const SpMat&, const char*) {}
#endif

SpMat from_triplets(int rows, int cols, const std::vector<Triplet>& trips) {
  SpMat m(rows, cols);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

P1Triangle geometry(const FineMesh& mesh, int t) {
  const auto& tri = mesh.triangle(t);
  return p1_triangle(mesh.node(tri[0]), mesh.node(tri[1]), mesh.node(tri[2]));
}

void scatter3(std::vector<Triplet>& trips, const MeshScope& scope, const Triangle& tri, const Mat3& local) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      trips.emplace_back(scope.node_local[tri[a]], scope.node_local[tri[b]], local[a][b]);
}

void require_bulk(const ContinuumSpec& spec, const char* what) {
  if (spec.is_fracture()) throw ContractError(std::string(what) + " expects a bulk continuum, got '" + spec.name + "'");
}

SpMat bulk_weighted_mass(const std::vector<double>& w, const FineMesh& mesh, const MeshScope& scope) {
  std::vector<Triplet> trips;
  trips.reserve(9 * scope.triangles.size());
  for (int t : scope.triangles) scatter3(trips, scope, mesh.triangle(t), p1_mass(geometry(mesh, t), w[t]));
  return from_triplets(scope.num_nodes(), scope.num_nodes(), trips);
}

SpMat fracture_weighted_mass(const std::vector<double>& w, const FineMesh& mesh, const MeshScope& scope) {
  std::vector<Triplet> trips;
  trips.reserve(4 * scope.fracture_edges.size());
  for (int e : scope.fracture_edges) {
    const auto& fe = mesh.fracture_edges()[e];
    const Mat2 m = edge_mass(mesh.fracture_length(e), w[e]);
    const int d[2] = {scope.fracture_local[mesh.fracture_dof(fe[0])], scope.fracture_local[mesh.fracture_dof(fe[1])]};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) trips.emplace_back(d[a], d[b], m[a][b]);
  }
  return from_triplets(scope.num_fracture(), scope.num_fracture(), trips);
}

}  // namespace

int field_size(const ContinuumSpec& spec, const MeshScope& scope) {
  return spec.is_fracture() ? scope.num_fracture() : scope.num_nodes();
}

SpMat assemble_stiffness(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  require_bulk(spec, "assemble_stiffness");
  std::vector<Triplet> trips;
  trips.reserve(9 * scope.triangles.size());
  for (int t : scope.triangles) {
    const double k = spec.permeability[t];
    if (!(k > 0.0)) throw DataError("permeability must be positive (triangle " + std::to_string(t) + ")");
    scatter3(trips, scope, mesh.triangle(t), p1_stiffness(geometry(mesh, t), k));
  }
  SpMat m = from_triplets(scope.num_nodes(), scope.num_nodes(), trips);
  debug_check_symmetric(m, "stiffness");
  return m;
}

SpMat assemble_fracture_stiffness(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  if (!spec.is_fracture()) throw ContractError("assemble_fracture_stiffness expects the fracture continuum");
  std::vector<Triplet> trips;
  trips.reserve(4 * scope.fracture_edges.size());
  for (int e : scope.fracture_edges) {
    const double k = spec.permeability[e];
    if (!(k > 0.0)) throw DataError("fracture permeability must be positive (edge " + std::to_string(e) + ")");
    const auto& fe = mesh.fracture_edges()[e];
    const Mat2 m = edge_stiffness(mesh.fracture_length(e), k);
    const int d[2] = {scope.fracture_local[mesh.fracture_dof(fe[0])], scope.fracture_local[mesh.fracture_dof(fe[1])]};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) trips.emplace_back(d[a], d[b], m[a][b]);
  }
  return from_triplets(scope.num_fracture(), scope.num_fracture(), trips);
}

SpMat assemble_weighted_mass(Support support, const std::vector<double>& weight, const FineMesh& mesh,
                             const MeshScope& scope) {
  SpMat m = support == Support::kFracture ? fracture_weighted_mass(weight, mesh, scope)
                                          : bulk_weighted_mass(weight, mesh, scope);
  debug_check_symmetric(m, "mass");
  return m;
}

SpMat assemble_mass(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  for (double c : spec.storage)
    if (!(c >= 0.0)) throw DataError("storage coefficient of '" + spec.name + "' must be >= 0");
  return assemble_weighted_mass(spec.support, spec.storage, mesh, scope);
}

SpMat assemble_plain_mass(Support support, const FineMesh& mesh, const MeshScope& scope) {
  const std::size_t n = support == Support::kFracture ? mesh.num_fracture_edges() : mesh.num_triangles();
  return assemble_weighted_mass(support, std::vector<double>(n, 1.0), mesh, scope);
}

SpMat assemble_coupling(const ContinuumSpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  const int rows = field_size(spec, scope);
  const int cols = 2 * scope.num_nodes();
  if (spec.is_fracture()) {
    if (spec.biot != 0.0) throw ConfigError("fracture continuum must have zero Biot coefficient");
    return SpMat(rows, cols);
  }
  if (spec.biot == 0.0) return SpMat(rows, cols);
  std::vector<Triplet> trips;
  trips.reserve(18 * scope.triangles.size());
  for (int t : scope.triangles) {
    const auto& tri = mesh.triangle(t);
    const Mat36 d = p1_divergence(geometry(mesh, t), spec.biot);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int comp = 0; comp < 2; ++comp)
          trips.emplace_back(scope.node_local[tri[a]], 2 * scope.node_local[tri[b]] + comp, d[a][2 * b + comp]);
  }
  return from_triplets(rows, cols, trips);
}

SpMat assemble_elasticity(const ElasticitySpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  std::vector<Triplet> trips;
  trips.reserve(36 * scope.triangles.size());
  for (int t : scope.triangles) {
    const Lame l = lame_parameters(spec.youngs[t], spec.poisson);
    const Mat6 k = p1_elasticity(geometry(mesh, t), l.lambda, l.mu);
    const auto& tri = mesh.triangle(t);
    int dof[6];
    for (int a = 0; a < 3; ++a) {
      dof[2 * a] = 2 * scope.node_local[tri[a]];
      dof[2 * a + 1] = dof[2 * a] + 1;
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) trips.emplace_back(dof[i], dof[j], k[i][j]);
  }
  SpMat m = from_triplets(2 * scope.num_nodes(), 2 * scope.num_nodes(), trips);
  debug_check_symmetric(m, "elasticity");
  return m;
}

SpMat assemble_vector_mass(const std::vector<double>& weight, const FineMesh& mesh, const MeshScope& scope) {
  std::vector<Triplet> trips;
  trips.reserve(18 * scope.triangles.size());
  for (int t : scope.triangles) {
    const Mat3 m = p1_mass(geometry(mesh, t), weight[t]);
    const auto& tri = mesh.triangle(t);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int comp = 0; comp < 2; ++comp)
          trips.emplace_back(2 * scope.node_local[tri[a]] + comp, 2 * scope.node_local[tri[b]] + comp, m[a][b]);
  }
  return from_triplets(2 * scope.num_nodes(), 2 * scope.num_nodes(), trips);
}

SpMat assemble_modulus_mass(const ElasticitySpec& spec, const FineMesh& mesh, const MeshScope& scope) {
  std::vector<double> w(mesh.num_triangles(), 0.0);
  for (int t : scope.triangles) {
    const Lame l = lame_parameters(spec.youngs[t], spec.poisson);
    w[t] = l.lambda + 2.0 * l.mu;
  }
  return assemble_vector_mass(w, mesh, scope);
}

ExchangeBlocks assemble_exchange(int first, int second, const PoroModel& model, const ExchangeSpec& exchange,
                                 const FineMesh& mesh, const MeshScope& scope) {
  if (first == second) throw ContractError("exchange of a continuum with itself is undefined");
  const ContinuumSpec& a = model.continua.at(first);
  const ContinuumSpec& b = model.continua.at(second);
  if (a.is_fracture() && b.is_fracture()) throw ContractError("fracture-fracture exchange is undefined");
  for (double v : exchange.eta)
    if (!(v >= 0.0)) throw DataError("exchange coefficient must be >= 0");

  ExchangeBlocks out;
  out.first = first;
  out.second = second;
  if (!a.is_fracture() && !b.is_fracture()) {
    SpMat m = bulk_weighted_mass(exchange.eta, mesh, scope);
    out.diag_first = m;
    out.diag_second = m;
    out.off = std::move(m);
    return out;
  }
  // Bulk-fracture: 1D mass along fracture edges. Bulk trace DOF = node, fracture DOF co-located.
  const bool first_is_bulk = !a.is_fracture();
  std::vector<Triplet> bulk, frac, cross;
  for (int e : scope.fracture_edges) {
    const auto& fe = mesh.fracture_edges()[e];
    const Mat2 m = edge_mass(mesh.fracture_length(e), exchange.eta[e]);
    const int nb[2] = {scope.node_local[fe[0]], scope.node_local[fe[1]]};
    const int nf[2] = {scope.fracture_local[mesh.fracture_dof(fe[0])], scope.fracture_local[mesh.fracture_dof(fe[1])]};
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        bulk.emplace_back(nb[p], nb[q], m[p][q]);
        frac.emplace_back(nf[p], nf[q], m[p][q]);
        if (first_is_bulk)
          cross.emplace_back(nb[p], nf[q], m[p][q]);
        else
          cross.emplace_back(nf[p], nb[q], m[p][q]);
      }
  }
  const int nbulk = scope.num_nodes(), nfrac = scope.num_fracture();
  SpMat mb = from_triplets(nbulk, nbulk, bulk);
  SpMat mf = from_triplets(nfrac, nfrac, frac);
  if (first_is_bulk) {
    out.diag_first = std::move(mb);
    out.diag_second = std::move(mf);
    out.off = from_triplets(nbulk, nfrac, cross);
  } else {
    out.diag_first = std::move(mf);
    out.diag_second = std::move(mb);
    out.off = from_triplets(nfrac, nbulk, cross);
  }
  return out;
}

}  // namespace fracporo
