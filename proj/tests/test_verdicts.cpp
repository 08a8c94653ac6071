#include "doctest.h"
#include "srlab/io.hpp"

using namespace srlab;

namespace {

std::int64_t cell(const TheoremReport& r, const std::string& table, std::size_t row, std::size_t col) {
  const Table* t = r.table(table);
  REQUIRE(t != nullptr);
  REQUIRE(row < t->rows.size());
  return t->rows[row].at(col);
}

}  // namespace

TEST_CASE("verdict names") {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::inconclusive})
    CHECK(verdict_from_name(verdict_name(v)) == v);
  CHECK_THROWS(verdict_from_name("maybe"));
  CHECK(lefschetz_mode_from_name("almost") == LefschetzMode::almost);
  CHECK_THROWS_AS(lefschetz_mode_from_name("weak"), InputError);
}

TEST_CASE("schenzel on the torus") {
  TheoremReport r = schenzel_report(builtin_complex("torus7"), PrimeField(), {});
  CHECK(r.verdict == Verdict::holds);
  const Table* q = r.table("quotient");
  REQUIRE(q);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(q->rows[j][0] == static_cast<std::int64_t>(j));
    CHECK(q->rows[j][1] == std::vector<std::int64_t>{1, 4, 10, 1}[j]);
    CHECK(q->rows[j][1] == q->rows[j][2]);
  }
  CHECK(r.seeds.size() >= 1);
  CHECK(r.prime == 2147483647u);
}

TEST_CASE("Reisner sides agree on small examples") {
  PrimeField F;
  struct Case {
    RelativeComplex psi;
    int cm;  // -1: only require agreement
  };
  const SimplicialComplex tri = builtin_complex("simplex(2)").delta();
  const SimplicialComplex two_tri = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}});
  const std::vector<Case> cases = {
      {builtin_complex("boundary_simplex(3)"), 1},
      {builtin_complex("disk_with_induced_boundary(2)"), 1},
      {builtin_complex("path(3)"), 1},
      {builtin_complex("two_points"), 1},
      {builtin_complex("torus7"), 0},
      {builtin_complex("moebius"), 0},
      {RelativeComplex(SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})), 0},
      {RelativeComplex(two_tri, induced_subcomplex(two_tri, two_tri.face_of({"a", "d"}))), -1},
      {RelativeComplex(tri, pseudomanifold_boundary(tri)), -1},
  };
  for (std::size_t k = 0; k < cases.size(); ++k) {
    CAPTURE(k);
    ReisnerSides s = reisner_sides(cases[k].psi, F, 0, 3);
    CHECK(s.topological == s.algebraic.cm);
    if (cases[k].cm >= 0) CHECK(s.algebraic.cm == (cases[k].cm == 1));
  }
  ReisnerSides rp2 = reisner_sides(builtin_complex("rp2_6"), PrimeField(2), 0, 3);
  CHECK_FALSE(rp2.topological);
  CHECK_FALSE(rp2.algebraic.cm);
  CHECK(reisner_sides(builtin_complex("rp2_6"), PrimeField(3), 0, 3).algebraic.cm);
}

TEST_CASE("Kühnel inequality") {
  TheoremReport t = kuhnel_report(builtin_complex("torus7").delta(), PrimeField(), {});
  CHECK(t.verdict == Verdict::holds);
  CHECK(cell(t, "kuhnel", 0, 1) == 1);
  CHECK(cell(t, "kuhnel", 0, 2) == 6);
  TheoremReport r = kuhnel_report(builtin_complex("rp2_6").delta(), PrimeField(2), {});
  CHECK(r.verdict == Verdict::holds);
  CHECK(cell(r, "kuhnel", 0, 2) == 5);
  CHECK(kuhnel_report(builtin_complex("moebius").delta(), PrimeField(), {}).verdict != Verdict::holds);
}

TEST_CASE("Lefschetz instances") {
  PrimeField F;
  CHECK(lefschetz_report(builtin_complex("boundary_simplex(3)").delta(), LefschetzMode::strong, F, {}).verdict ==
        Verdict::holds);
  CHECK(lefschetz_report(builtin_complex("torus7").delta(), LefschetzMode::almost, F, {}).verdict == Verdict::holds);
  // A(torus) has dims 1 4 10 1: ℓ² : A_0 → A_2 cannot be onto, ℓ : A_1 → A_2 is not bijective.
  CHECK(lefschetz_report(builtin_complex("torus7").delta(), LefschetzMode::strong, F, {}).verdict != Verdict::holds);
  CHECK(lefschetz_subdivision_report(builtin_structure("sd_simplex_3"), F, {}).verdict == Verdict::holds);
}

TEST_CASE("small fields are inconclusive rather than failing on generic claims") {
  RunOptions o;
  o.trials = 1;
  TheoremReport r = pd_report(builtin_complex("rp2_6").delta(), PrimeField(3), o);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("partition and duality reports hold on the torus") {
  PrimeField F;
  const RelativeComplex t = builtin_complex("torus7");
  CHECK(partition_homology_report(t, F, {}).verdict == Verdict::holds);
  CHECK(pou_report(t, F, {}).verdict == Verdict::holds);
  CHECK(total_complex_report(t, F, {}).verdict == Verdict::holds);
  CHECK(pd_report(t.delta(), F, {}).verdict == Verdict::holds);
  // B is palindromic but h is not: the classical symmetry is for spheres.
  CHECK(dehn_sommerville_report(t.delta(), F, {}).verdict == Verdict::fails);
  CHECK(dehn_sommerville_report(builtin_complex("cross_polytope(3)").delta(), F, {}).verdict == Verdict::holds);
  CHECK(injectivity_report(t.delta(), F, {}).verdict == Verdict::holds);
  CHECK(cone_lemma_report(t.delta(), F, {}).verdict == Verdict::holds);
  CHECK(koszul_top_report(t, F, {}).verdict == Verdict::holds);
}

TEST_CASE("random relative complexes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RelativeComplex a = random_relative_complex(seed);
    CHECK(a == random_relative_complex(seed));
    CHECK_FALSE(a.is_void());
    CHECK(a.ground_size() >= 3);
    CHECK(a.ground_size() <= 6);
  }
  CHECK_FALSE(random_relative_complex(1) == random_relative_complex(2));
}

TEST_CASE("text reports carry the verdict") {
  TheoremReport r = fvec_report(builtin_complex("moebius"), PrimeField(), {});
  const std::string text = report_text(r);
  CHECK(text.find("holds") != std::string::npos);
  CHECK(text.find(r.input_hash) != std::string::npos);
}
