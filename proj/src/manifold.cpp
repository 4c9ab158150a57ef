#include "orbicheck/manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "orbicheck/homology.hpp"

namespace orbicheck {

LinkComplex link_complex(const QuotientComplex& qc, int face_dimension, int face) {
  const auto& table = qc.table();
  if (!table) throw std::invalid_argument("links need a complex built from a gluing table");
  if (face_dimension > qc.dimension() - 2)
    throw std::invalid_argument("links are only built for faces of codimension at least 2");
  const FaceClass& fc = qc.face(face_dimension, face);

  std::map<int, int> local;
  for (int i = 0; i < fc.degree(); ++i) local[fc.members[i]] = i;

  const LabelSet link_labels = table->labels() & ~fc.labels;
  GluingTable link_table(fc.degree(), link_labels);
  for (int i = 0; i < fc.degree(); ++i)
    for (int l : label_list(link_labels))
      if (auto k = table->partner(fc.members[i], l)) link_table.assign(i, l, local.at(*k));

  return {face_dimension, face, fc.labels, build_quotient(link_table), fc.members};
}

const char* to_string(SphereStatus s) {
  switch (s) {
    case SphereStatus::certified:
      return "certified sphere";
    case SphereStatus::sphere_homology_pi1_inconclusive:
      return "sphere homology, pi1 inconclusive";
    case SphereStatus::failed:
      return "failed";
  }
  return "failed";
}

bool is_connected(const QuotientComplex& qc) {
  const int nv = qc.count(0);
  if (nv == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < qc.count(1); ++e) {
    const auto& bd = qc.boundary(1, e);
    for (std::size_t i = 1; i < bd.size(); ++i) parent[find(bd[i].face)] = find(bd[0].face);
  }
  int roots = 0;
  for (int v = 0; v < nv; ++v)
    if (find(v) == v) ++roots;
  return roots == 1;
}

namespace {

SphereCheck fail(std::string reason) { return {SphereStatus::failed, std::move(reason)}; }

}  // namespace

SphereCheck check_sphere(const QuotientComplex& complex, int pass_budget) {
  const int dim = complex.dimension();
  if (dim < 1 || dim > 3) throw std::invalid_argument("sphere check supports dimensions 1..3");
  if (complex.has_boundary()) return fail("link has unglued facets");
  if (!is_connected(complex)) return fail("link is disconnected");
  if (dim == 1) return {SphereStatus::certified, {}};

  // Links inside the link, from the lowest codimension-2 faces down to vertices.
  for (int d = dim - 2; d >= 0; --d)
    for (int f = 0; f < complex.count(d); ++f) {
      auto sub = link_complex(complex, d, f);
      auto res = check_sphere(sub.complex, pass_budget);
      if (res.status != SphereStatus::certified)
        return {res.status, "link of " + std::to_string(d) + "-face " + std::to_string(f) + ": " + res.reason};
    }

  if (dim == 2) {
    int chi = euler_characteristic(complex);
    if (chi != 2) return fail("surface has Euler characteristic " + std::to_string(chi));
    return {SphereStatus::certified, {}};
  }

  auto h = homology(complex);
  bool sphere_homology = h[0].free_rank == 1 && h[0].torsion.empty() && h[1].is_zero() && h[2].is_zero() &&
                         h[3].free_rank == 1 && h[3].torsion.empty();
  if (!sphere_homology) {
    std::string text;
    for (const auto& g : h) text += (text.empty() ? "" : ", ") + format_group(g);
    return fail("homology (" + text + ")");
  }
  auto simplified = tietze_simplify(presentation(complex), pass_budget);
  if (!is_trivially_presented(simplified))
    return {SphereStatus::sphere_homology_pi1_inconclusive,
            "presentation did not simplify: " + format_presentation(simplified)};
  return {SphereStatus::certified, {}};
}

ManifoldReport verify_closed_pl_manifold(const QuotientComplex& qc, int pass_budget) {
  if (!qc.table()) throw std::invalid_argument("manifold check needs a complex built from a gluing table");
  if (qc.has_boundary()) throw std::invalid_argument("complex has unglued facets");
  ManifoldReport report;
  report.checked.assign(static_cast<std::size_t>(std::max(qc.dimension() - 1, 0)), 0);
  for (int d = qc.dimension() - 2; d >= 0; --d)
    for (int f = 0; f < qc.count(d); ++f) {
      auto link = link_complex(qc, d, f);
      auto res = check_sphere(link.complex, pass_budget);
      ++report.checked[d];
      if (res.status != SphereStatus::certified) report.failures.push_back({d, f, res.status, res.reason});
    }
  std::sort(report.failures.begin(), report.failures.end(), [](const FaceCheck& a, const FaceCheck& b) {
    return std::tie(a.dimension, a.face) < std::tie(b.dimension, b.face);
  });
  return report;
}

}  // namespace orbicheck
