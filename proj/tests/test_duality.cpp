#include "doctest.h"
#include "srlab/duality.hpp"

using namespace srlab;

namespace {

using Dims = std::vector<std::size_t>;

LinearFormSequence lsop_of(const SimplicialComplex& delta, const PrimeField& F, std::uint64_t seed = 0) {
  RelativeComplex psi(delta);
  LsopSample s = sample_lsop(psi, psi.max_face_size(), seed, F);
  REQUIRE(s.found);
  return s.theta;
}

}  // namespace

TEST_CASE("manifold sanity") {
  PrimeField F;
  CHECK(manifold_sanity(F, builtin_complex("torus7").delta()).ok);
  CHECK(manifold_sanity(PrimeField(2), builtin_complex("rp2_6").delta()).ok);
  CHECK_FALSE(manifold_sanity(PrimeField(3), builtin_complex("rp2_6").delta()).ok);  // not orientable
  CHECK_FALSE(manifold_sanity(F, builtin_complex("moebius").delta()).ok);
  CHECK_FALSE(manifold_sanity(F, SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})).ok);
  CHECK(manifold_sanity(F, builtin_complex("boundary_simplex(1)").delta()).ok);  // S^0
}

TEST_CASE("B of the torus") {
  PrimeField F;
  DualityPresentation p = build_B(F, builtin_complex("torus7").delta(), lsop_of(builtin_complex("torus7").delta(), F));
  CHECK(p.fundamental_degree == 3);
  CHECK(p.j_dims == Dims{0, 0, 6, 0});
  CHECK(p.b_dims == Dims{1, 4, 4, 1});
  CHECK(j_annihilates_positive_degrees(p));
  PdVerdict b = is_poincare_duality_algebra(p.b, 3);
  CHECK(b.is_pd);
  CHECK(b.routes_agree);
  for (int i = 0; i <= 3; ++i) CHECK(b.pairing_ranks.at(i) == p.b_dims[static_cast<std::size_t>(i)]);
  PdVerdict a = is_poincare_duality_algebra(p.base, 3);
  CHECK_FALSE(a.is_pd);
  CHECK(a.routes_agree);
}

TEST_CASE("J is the kernel to the vertex stars") {
  PrimeField F;
  SimplicialComplex t = builtin_complex("torus7").delta();
  LinearFormSequence theta = lsop_of(t, F, 3);
  GradedQuotient a(F, RelativeComplex(t), theta);
  std::vector<GradedQuotient> stars;
  for (int v = 0; v < 7; ++v) stars.emplace_back(F, RelativeComplex(star(t, vertex_face(v))), theta);
  CHECK(star_restriction_kernel(F, a, stars, 2).size() == 6);
  CHECK(star_restriction_kernel(F, a, stars, 1).empty());
  CHECK(star_restriction_kernel(F, a, stars, 3).size() == 1);
}

TEST_CASE("B of rp2_6 over F_2") {
  PrimeField F(2);
  SimplicialComplex rp2 = builtin_complex("rp2_6").delta();
  DualityPresentation p = build_B(F, rp2, lsop_of(rp2, F));
  CHECK(p.j_dims == Dims{0, 0, 3, 0});
  CHECK(p.b_dims == Dims{1, 3, 3, 1});
  CHECK(is_poincare_duality_algebra(p.b, 3).is_pd);
  CHECK_THROWS_AS(build_B(PrimeField(3), rp2, lsop_of(rp2, PrimeField(3))), InputError);
}

TEST_CASE("B equals A on spheres") {
  PrimeField F;
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    SimplicialComplex s = builtin_complex("boundary_simplex(" + std::to_string(k) + ")").delta();
    DualityPresentation p = build_B(F, s, lsop_of(s, F));
    for (std::size_t j : p.j_dims) CHECK(j == 0);
    CHECK(p.b_dims == Dims(static_cast<std::size_t>(k + 1), 1));
    CHECK(is_poincare_duality_algebra(p.base, k).is_pd);
  }
}

TEST_CASE("pairing matrices of the octahedron") {
  PrimeField F;
  SimplicialComplex oct = builtin_complex("cross_polytope(3)").delta();
  GradedQuotient a(F, RelativeComplex(oct), lsop_of(oct, F));
  Matrix m = pairing_matrix(a, 3, 1);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  CHECK(rank(F, m) == 3);
  CHECK(pairing_rank(a, 3, 1).rank == 3);
}

TEST_CASE("cone lemma") {
  PrimeField F;
  SimplicialComplex t = builtin_complex("torus7").delta();
  LinearFormSequence theta = lsop_of(t, F);
  for (int v = 0; v < 7; ++v) CHECK(cone_lemma_check(F, t, v, theta).pass);
  SimplicialComplex point = builtin_complex("simplex(0)").delta();
  ConeLemmaVerdict pv = cone_lemma_check(F, point, 0, lsop_of(point, F));
  CHECK(pv.pass);
  CHECK(pv.star_dims.at(0) == 1);
  CHECK(pv.open_star_dims.at(0) == 1);
}

TEST_CASE("open star injectivity") {
  PrimeField F;
  SimplicialComplex t = builtin_complex("torus7").delta();
  LinearFormSequence theta = lsop_of(t, F);
  DualityPresentation p = build_B(F, t, theta);
  CHECK(open_star_injectivity(F, t, p.base, theta).injective);
  CHECK(open_star_injectivity(F, t, p.b, theta).injective);
}
