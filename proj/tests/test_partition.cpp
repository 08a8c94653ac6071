#include "doctest.h"
#include "srlab/io.hpp"

using namespace srlab;

namespace {

std::size_t at(const IndexDegreeTable& t, int i, int j) {
  auto it = t.find({i, j});
  return it == t.end() ? 0 : it->second;
}

LinearFormSequence lsop_of(const RelativeComplex& psi, const PrimeField& F) {
  LsopSample s = sample_lsop(psi, psi.max_face_size(), 0, F);
  REQUIRE(s.found);
  return s.theta;
}

}  // namespace

TEST_CASE("partition homology is relative cohomology in degree zero") {
  PrimeField F;
  for (const char* name : {"torus7", "moebius", "two_points", "disk_with_induced_boundary(2)", "path(3)"}) {
    CAPTURE(name);
    RelativeComplex psi = builtin_complex(name);
    BettiTable b = relative_cohomology_dims(psi, F);
    IndexDegreeTable h = partition_homology_dims(F, psi, 2);
    for (int i = -1; i <= psi.dim() + 1; ++i) {
      CHECK(at(h, i, 0) == betti(b, i));
      CHECK(at(h, i, 1) == 0);
      CHECK(at(h, i, 2) == 0);
    }
  }
}

TEST_CASE("every partition slice is a complex") {
  PrimeField F(3);
  PartitionComplex pc = PartitionComplex::full(builtin_complex("rp2_6"), 2);
  for (int t = 0; t <= 2; ++t) CHECK_NOTHROW(chain_homology_dims(F, pc.slice(F, t)));
  CHECK(pc.top_index() == 2);
  CHECK(pc.cover()[0].size() == 6);
}

TEST_CASE("fine degree pieces split the slices") {
  PrimeField F;
  RelativeComplex psi = builtin_complex("torus7");
  PartitionComplex pc = PartitionComplex::full(psi, 2);
  // The piece of α is the augmented cochain complex of the star of its
  // support, a cone.
  Monomial a;
  a.vars = {0, 0};
  auto h = chain_homology_dims(F, fine_degree_piece(F, pc, a));
  for (auto [i, v] : h) CHECK(v == 0);
  Monomial b;
  b.vars = {0, 1};
  ChainComplex piece = fine_degree_piece(F, pc, b);
  for (auto [i, v] : chain_homology_dims(F, piece)) CHECK(v == 0);
}

TEST_CASE("partition of unity on the torus") {
  PrimeField F;
  RelativeComplex torus = builtin_complex("torus7");
  IndexDegreeTable h = reduced_partition_homology(F, torus, lsop_of(torus, F), 3);
  CHECK(at(h, -1, 2) == 6);
  CHECK(at(h, -1, 3) == 1);
  CHECK(at(h, 0, 1) == 6);
  CHECK(at(h, 0, 2) == 3);
  CHECK(at(h, 1, 0) == 2);
  CHECK(at(h, 1, 1) == 3);
  CHECK(at(h, 2, 0) == 1);
  CHECK(at(h, -1, 0) == 0);
  CHECK(at(h, -1, 1) == 0);
  CHECK(at(h, 2, 1) == 0);
}

TEST_CASE("the total complex concentrates on the Betti numbers") {
  PrimeField F;
  for (const char* name : {"boundary_simplex(2)", "moebius"}) {
    CAPTURE(name);
    RelativeComplex psi = builtin_complex(name);
    const int d = psi.dim();
    IndexDegreeTable tot = total_complex_homology(F, psi, lsop_of(psi, F), d + 1);
    BettiTable b = relative_cohomology_dims(psi, F);
    for (auto [key, v] : tot) {
      auto [k, j] = key;
      const int m = k + j - d - 1;
      const std::size_t expected =
          static_cast<std::size_t>(binomial(d + 1, j)) * (m >= -1 && m <= d ? betti(b, m) : 0);
      CAPTURE(k);
      CAPTURE(j);
      CHECK(v == expected);
    }
  }
}

TEST_CASE("interior check on a subdivided triangle") {
  PrimeField F;
  RelativeComplex disk = subdivided_disk(2);
  InteriorVerdict v = interior_partition_check(F, disk, lsop_of(RelativeComplex(disk.delta()), F));
  CHECK(v.precondition_ok);
  CHECK(v.exact);
  CHECK(v.injective_below_top);
  CHECK(std::popcount(v.interior_vertices) == 1);
  for (auto [j, k] : v.kernel_dims) CHECK(k == 0);
}

TEST_CASE("interior check is skipped when the boundary is not induced") {
  PrimeField F;
  SimplicialComplex solid = builtin_complex("simplex(2)").delta();
  RelativeComplex psi(solid, pseudomanifold_boundary(solid));
  InteriorVerdict v = interior_partition_check(F, psi, lsop_of(RelativeComplex(solid), F));
  CHECK_FALSE(v.precondition_ok);
  CHECK_FALSE(v.diagnostics.empty());
  TheoremReport r = interior_report(psi, F, {});
  CHECK(r.verdict == Verdict::fails);
}

TEST_CASE("subdivision structures are validated") {
  SimplicialComplex seg = builtin_complex("path(2)").delta();  // vertices 1, 2, 3
  const Face v1 = seg.face_of({"1"}), v2 = seg.face_of({"2"}), v3 = seg.face_of({"3"});
  const Face e12 = seg.face_of({"1", "2"}), e23 = seg.face_of({"2", "3"});
  std::vector<CellSpec> ok = {{0, {v1}, {}}, {0, {v3}, {}}, {1, {e12, e23}, {v1, v3}}};
  SubdivisionStructure s = make_subdivision_structure(seg, ok);
  CHECK(s.cells.size() == 3);
  CHECK(s.incidence[2].size() == 2);
  CHECK(induced_boundary_violations(s).empty());

  SUBCASE("cells must cover Δ") {
    std::vector<CellSpec> missing = {{0, {v1}, {}}, {0, {v3}, {}}, {1, {e12}, {v1, v2}}};
    CHECK_THROWS_AS(make_subdivision_structure(seg, missing), InputError);
  }
  SUBCASE("a cell's boundary must be the subdivided boundary") {
    std::vector<CellSpec> wrong = {{0, {v1}, {}}, {0, {v3}, {}}, {1, {e12, e23}, {v1, v2}}};
    CHECK_THROWS_AS(make_subdivision_structure(seg, wrong), InputError);
  }
  SUBCASE("facets must be faces of Δ with the cell's dimension") {
    std::vector<CellSpec> bad = {{0, {v1}, {}}, {0, {v3}, {}}, {2, {e12, e23}, {v1, v3}}};
    CHECK_THROWS_AS(make_subdivision_structure(seg, bad), InputError);
  }
}

TEST_CASE("barycentric structures pass the subdivision check") {
  PrimeField F;
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    SubdivisionStructure s = builtin_structure("sd_simplex_" + std::to_string(k));
    CHECK(s.cells.size() == (std::size_t{1} << (k + 1)) - 1);
    LsopSample th = sample_lsop(RelativeComplex(s.delta), static_cast<std::size_t>(k + 1), 0, F);
    REQUIRE(th.found);
    SubdivisionVerdict v = subdivision_partition_check(F, s, th.theta);
    CHECK(v.precondition_ok);
    CHECK(v.pass);
  }
}
