#include "doctest.h"
#include "srlab/koszul.hpp"

using namespace srlab;

namespace {

using I64 = std::vector<std::int64_t>;
using Dims = std::vector<std::size_t>;

GradedQuotient quotient_of(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed = 0) {
  LsopSample s = sample_lsop(psi, psi.max_face_size(), seed, F);
  REQUIRE(s.found);
  return GradedQuotient(F, psi, s.theta);
}

Dims prefix(const GradedQuotient& a, std::size_t n) {
  Dims out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(a.dim(static_cast<int>(j)));
  return out;
}

}  // namespace

TEST_CASE("Hilbert function of the face module") {
  CHECK(hilbert_series_coeffs(builtin_complex("torus7"), 4) == I64{1, 7, 28, 63, 112});
  CHECK(hilbert_series_coeffs(builtin_complex("rp2_6"), 4) == I64{1, 6, 21, 46, 81});
  CHECK(hilbert_series_coeffs(builtin_complex("moebius"), 4) == I64{1, 5, 15, 30, 50});
  CHECK(hilbert_series_coeffs(builtin_complex("boundary_simplex(3)"), 4) == I64{1, 4, 10, 20, 34});
  CHECK(hilbert_series_coeffs(builtin_complex("boundary_simplex(4)"), 4) == I64{1, 5, 15, 35, 70});
  CHECK(hilbert_series_coeffs(builtin_complex("cross_polytope(3)"), 4) == I64{1, 6, 18, 38, 66});
}

TEST_CASE("monomial bases count monomials supported on faces") {
  RelativeComplex t = builtin_complex("torus7");
  for (int j = 0; j <= 4; ++j) CHECK(static_cast<std::int64_t>(monomial_basis(t, j).size()) ==
                                     hilbert_series_coeffs(t, 4)[static_cast<std::size_t>(j)]);
  RelativeComplex disk = builtin_complex("disk_with_induced_boundary(2)");
  CHECK(monomial_basis(disk, 0).size() == 0);  // the empty face lies in Γ
  CHECK(monomial_basis(disk, 1).size() == 1);  // only the apex
}

TEST_CASE("quotients by an l.s.o.p. over a large field") {
  PrimeField F;
  CHECK(prefix(quotient_of(builtin_complex("torus7"), F), 5) == Dims{1, 4, 10, 1, 0});
  CHECK(prefix(quotient_of(builtin_complex("rp2_6"), F), 5) == Dims{1, 3, 6, 0, 0});
  CHECK(prefix(quotient_of(builtin_complex("moebius"), F), 5) == Dims{1, 2, 3, 0, 0});
  CHECK(prefix(quotient_of(builtin_complex("boundary_simplex(3)"), F), 5) == Dims{1, 1, 1, 1, 0});
  CHECK(prefix(quotient_of(builtin_complex("boundary_simplex(4)"), F), 6) == Dims{1, 1, 1, 1, 1, 0});
  CHECK(prefix(quotient_of(builtin_complex("cross_polytope(3)"), F), 5) == Dims{1, 3, 3, 1, 0});
  CHECK(prefix(quotient_of(builtin_complex("disk_with_induced_boundary(2)"), F), 5) == Dims{0, 1, 1, 1, 0});
}

TEST_CASE("quotient dims do not depend on the seed") {
  PrimeField F;
  RelativeComplex t = builtin_complex("torus7");
  for (std::uint64_t seed : {1u, 2u, 17u}) CHECK(prefix(quotient_of(t, F, seed), 5) == Dims{1, 4, 10, 1, 0});
}

TEST_CASE("l.s.o.p. detection") {
  PrimeField F;
  RelativeComplex bd = builtin_complex("boundary_simplex(2)");
  LinearFormSequence too_short;
  too_short.forms = {vertex_form(3, 0)};
  CHECK_FALSE(is_lsop(bd, too_short, F).is_lsop);
  LinearFormSequence degenerate;
  degenerate.forms = {vertex_form(3, 0), vertex_form(3, 0)};
  CHECK_FALSE(is_lsop(bd, degenerate, F).is_lsop);
  LinearFormSequence good;
  good.forms = {{1, 1, 0}, {0, 1, 1}};
  LsopVerdict v = is_lsop(bd, good, F);
  CHECK(v.is_lsop);
  CHECK(v.expected_length == 2);
  CHECK(restricts_to_bases(bd, good, F));
}

TEST_CASE("the random stream is reproducible") {
  PrimeField F(101);
  CHECK(random_linear_forms(5, 3, 42, F) == random_linear_forms(5, 3, 42, F));
  CHECK_FALSE(random_linear_forms(5, 3, 42, F) == random_linear_forms(5, 3, 43, F));
  for (const auto& form : random_linear_forms(5, 3, 42, F).forms)
    for (Residue c : form) CHECK(c < 101);
}

TEST_CASE("the quotient of the torus has a large socle in degree 2") {
  PrimeField F;
  GradedQuotient a = quotient_of(builtin_complex("torus7"), F);
  Dims socle = socle_dims(F, a.algebra_data());
  REQUIRE(socle.size() >= 4);
  CHECK(socle[2] >= 6);
  CHECK(socle[3] == 1);
  CHECK(socle[0] == 0);
}

TEST_CASE("multiplication in the quotient is commutative") {
  PrimeField F;
  GradedQuotient a = quotient_of(builtin_complex("cross_polytope(3)"), F);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      Matrix uv = multiply(F, a.multiplication_by_vertex(v, 1), a.multiplication_by_vertex(u, 0));
      Matrix vu = multiply(F, a.multiplication_by_vertex(u, 1), a.multiplication_by_vertex(v, 0));
      CHECK(uv == vu);
    }
}

TEST_CASE("Koszul wedge signs") {
  // ∂(e_S) adds e_i with sign (−1)^{#{k ∈ S : k < i}}; on the complement of
  // a single index i this is (−1)^i times θ_i.
  PrimeField F(101);
  RelativeComplex psi = builtin_complex("simplex(2)");
  LinearFormSequence theta;
  theta.forms = {vertex_form(3, 0), vertex_form(3, 1), vertex_form(3, 2)};
  KoszulComplex k(F, psi, theta, 2);
  Matrix d = k.differential(2, 0).to_dense();
  const auto& from = k.subsets(2);
  const MonomialBasis& deg1 = k.module().basis(1);
  for (std::size_t s = 0; s < from.size(); ++s) {
    const int i = std::countr_zero(~from[s] & 7u);
    Monomial x;
    x.vars = {static_cast<std::uint8_t>(i)};
    const auto row = static_cast<std::size_t>(deg1.index_of(x));
    CHECK(d(row, s) == (i % 2 == 0 ? 1u : 100u));
  }
  for (int t = 0; t <= 1; ++t)
    for (int i = 0; i + 1 <= 2; ++i)
      CHECK(multiply(F, k.differential(i + 1, t + 1), k.differential(i, t)).nonzeros() == 0);
}

TEST_CASE("depth from Koszul homology") {
  PrimeField F;
  RelativeComplex torus = builtin_complex("torus7");
  LsopSample s = sample_lsop(torus, 3, 0, F);
  REQUIRE(s.found);
  CHECK(depth(F, torus, s.theta) == 2);  // Buchsbaum but not CM
  CHECK(is_algebraically_cm(builtin_complex("boundary_simplex(3)"), F).cm);
  CHECK(is_algebraically_cm(builtin_complex("rp2_6"), F).cm);
  CHECK_FALSE(is_algebraically_cm(builtin_complex("rp2_6"), PrimeField(2)).cm);
  CHECK(is_algebraically_cm(builtin_complex("two_points"), F).cm);
  RelativeComplex edges(SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  CmVerdict two = is_algebraically_cm(edges, F);
  CHECK_FALSE(two.cm);
  CHECK(two.depth == 1);
  CHECK(two.expected == 2);
  CHECK(two.seeds_agree);
}

TEST_CASE("top Koszul homology is the quotient") {
  PrimeField F;
  RelativeComplex psi = builtin_complex("moebius");
  LsopSample s = sample_lsop(psi, 3, 5, F);
  REQUIRE(s.found);
  KoszulTable natural = koszul_homology_dims(F, psi, s.theta, KoszulGrading::natural, 4);
  GradedQuotient a(F, psi, s.theta);
  for (int t = 0; t <= 3; ++t) {
    CAPTURE(t);
    auto it = natural.find({3, t});
    CHECK((it == natural.end() ? 0 : it->second) == a.dim(t));
  }
}
