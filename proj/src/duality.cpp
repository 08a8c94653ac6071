#include "srlab/duality.hpp"

#include <stdexcept>

namespace srlab {

namespace {

bool sphere_like(const BettiTable& b, int dim) {
  for (auto [i, x] : b)
    if (x != (i == dim ? 1u : 0u)) return false;
  return betti(b, dim) == 1;
}

}  // namespace

ManifoldCheck manifold_sanity(const PrimeField& F, const SimplicialComplex& delta) {
  ManifoldCheck c;
  auto fail = [&](std::string msg) {
    c.ok = false;
    c.diagnostics.push_back(std::move(msg));
  };
  if (delta.is_void() || delta.dim() < 0) {
    fail("complex has no vertices");
    return c;
  }
  const int d = delta.dim();
  if (!delta.is_pure()) fail("complex is not pure");
  for (Face tau : delta.faces()) {
    if (!tau) continue;
    if (!sphere_like(relative_cohomology_dims(RelativeComplex(link(delta, tau)), F), d - face_size(tau)))
      fail("link of " + delta.face_label(tau) + " is not a homology sphere");
  }
  BettiTable b = relative_cohomology_dims(RelativeComplex(delta), F);
  if (d > 0 && betti(b, 0) != 0) fail("complex is not connected");
  if (betti(b, d) != 1) fail("top cohomology has dimension " + std::to_string(betti(b, d)));
  return c;
}

std::vector<std::vector<Residue>> star_restriction_kernel(const PrimeField& F, const GradedQuotient& a,
                                                          const std::vector<GradedQuotient>& stars, int j) {
  const std::size_t n = a.dim(j);
  std::vector<Matrix> blocks;
  for (const auto& s : stars) blocks.push_back(induced_map(a, s, j));
  return kernel_basis(F, vstack(blocks, n));
}

DualityPresentation build_B(const PrimeField& F, const SimplicialComplex& delta, const LinearFormSequence& theta) {
  ManifoldCheck check = manifold_sanity(F, delta);
  if (!check.ok) throw InputError("manifold check failed: " + check.diagnostics.front());
  const int d = delta.dim();
  const int n = d + 1;
  GradedQuotient a(F, RelativeComplex(delta), theta, n + 1);
  std::vector<GradedQuotient> stars;
  for (int v : face_vertices(delta.vertex_mask()))
    stars.emplace_back(F, RelativeComplex(star(delta, vertex_face(v))), theta, n + 1);
  GradedQuotient::ExtraRelations extra;
  std::vector<std::size_t> j_dims;
  for (int i = 0; i <= n; ++i) {
    if (i == n || a.dim(i) == 0) {
      j_dims.push_back(0);
      continue;
    }
    auto ker = star_restriction_kernel(F, a, stars, i);
    j_dims.push_back(ker.size());
    for (const auto& k : ker) extra[i].push_back(a.lift(i, k));
  }
  GradedQuotient b(F, RelativeComplex(delta), theta, n + 1, extra);
  std::vector<std::size_t> b_dims;
  for (int i = 0; i <= n; ++i) b_dims.push_back(b.dim(i));
  return DualityPresentation{std::move(a), std::move(b), n, std::move(j_dims), std::move(extra), std::move(b_dims)};
}

Matrix pairing_matrix(const GradedQuotient& a, int n, int i) {
  if (a.dim(n) != 1) throw std::domain_error("top degree is not one-dimensional");
  Matrix m(a.dim(i), a.dim(n - i));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto coords = a.reduce_monomial(times(a.representative(i, r), a.representative(n - i, c)));
      m(r, c) = coords.empty() ? 0 : coords[0];
    }
  return m;
}

PairingRank pairing_rank(const GradedQuotient& a, int n, int i) {
  Matrix m = pairing_matrix(a, n, i);
  PairingRank p;
  p.rank = rank(a.field(), m);
  p.full = m.rows() == m.cols() && p.rank == m.rows();
  return p;
}

PdVerdict is_poincare_duality_algebra(const GradedQuotient& a, int n) {
  PdVerdict v;
  for (int i = 0; i <= n; ++i) v.dims.push_back(a.dim(i));
  bool vanish_above = a.finite() && a.vanishing_degree().value() <= n + 1;
  if (!vanish_above) {
    for (int i = n + 1; i <= a.top_computed(); ++i)
      if (a.dim(i) != 0) v.diagnostics.push_back("nonzero degree " + std::to_string(i) + " above the top");
    if (v.diagnostics.empty()) vanish_above = true;
  }
  v.pairing_route = vanish_above && a.dim(n) == 1;
  if (a.dim(n) != 1) v.diagnostics.push_back("top degree has dimension " + std::to_string(a.dim(n)));
  if (a.dim(n) == 1) {
    for (int i = 0; i <= n; ++i) {
      PairingRank p = pairing_rank(a, n, i);
      v.pairing_ranks[i] = p.rank;
      if (!p.full) {
        v.pairing_route = false;
        v.diagnostics.push_back("pairing in degree " + std::to_string(i) + " has rank " + std::to_string(p.rank));
      }
    }
  }
  v.socle = socle_dims(a.field(), a.algebra_data());
  v.socle_route = vanish_above;
  for (std::size_t i = 0; i < v.socle.size(); ++i)
    if (v.socle[i] != (static_cast<int>(i) == n ? 1u : 0u)) v.socle_route = false;
  if (static_cast<int>(v.socle.size()) <= n) v.socle_route = false;
  v.routes_agree = v.pairing_route == v.socle_route;
  if (!v.routes_agree) v.diagnostics.push_back("pairing and socle routes disagree");
  v.is_pd = v.pairing_route && v.socle_route;
  return v;
}

ConeLemmaVerdict cone_lemma_check(const PrimeField& F, const SimplicialComplex& delta, int v,
                                  const LinearFormSequence& theta) {
  if (!delta.contains(vertex_face(v))) throw InputError("cone lemma: not a vertex of the complex");
  const int d = delta.dim();
  RelativeComplex whole(delta);
  GradedQuotient st(F, relative_star(whole, vertex_face(v)), theta, d + 3);
  GradedQuotient open(F, open_star(whole, vertex_face(v)), theta, d + 3);
  ConeLemmaVerdict c;
  c.pass = true;
  for (int j = 0; j <= d + 1; ++j) {
    c.star_dims.push_back(st.dim(j));
    c.open_star_dims.push_back(open.dim(j + 1));
    Matrix m = vertex_multiplication_map(st, open, v, j);
    if (m.rows() != m.cols() || rank(F, m) != m.rows()) {
      c.pass = false;
      c.diagnostics.push_back("multiplication by the cone vertex is not bijective in degree " + std::to_string(j));
    }
  }
  return c;
}

InjectivityVerdict open_star_injectivity(const PrimeField& F, const SimplicialComplex& delta,
                                         const GradedQuotient& target, const LinearFormSequence& theta) {
  InjectivityVerdict out;
  const int d = delta.dim();
  RelativeComplex whole(delta);
  for (int v : face_vertices(delta.vertex_mask())) {
    GradedQuotient open(F, open_star(whole, vertex_face(v)), theta, d + 2);
    for (int j = 0; j <= d + 1; ++j) {
      Matrix m = induced_map(open, target, j);
      if (rank(F, m) != m.cols()) {
        out.injective = false;
        out.diagnostics.push_back("open star of " + delta.ground_set()[static_cast<std::size_t>(v)] +
                                  " is not injective in degree " + std::to_string(j));
      }
    }
  }
  return out;
}

bool j_annihilates_positive_degrees(const DualityPresentation& p) {
  const GradedQuotient& a = p.base;
  const FaceModule& mod = a.module();
  const auto verts = face_vertices(a.complex().delta().vertex_mask());
  for (const auto& [i, vecs] : p.j_basis) {
    if (a.dim(i + 1) == 0) continue;
    const MonomialBasis& src = mod.basis(i);
    const MonomialBasis& dst = mod.basis(i + 1);
    for (const auto& vec : vecs)
      for (int v : verts) {
        std::map<std::uint32_t, Residue> acc;
        for (const auto& e : vec) {
          const std::int64_t idx = dst.index_of(times_vertex(src[e.col], v));
          if (idx >= 0) acc[static_cast<std::uint32_t>(idx)] = a.field().add(acc[static_cast<std::uint32_t>(idx)], e.val);
        }
        SparseVector prod;
        for (auto [c, x] : acc)
          if (x) prod.push_back({c, x});
        for (Residue r : a.reduce(i + 1, prod))
          if (r) return false;
      }
  }
  return true;
}

}  // namespace srlab
