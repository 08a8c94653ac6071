#include "doctest.h"
#include "srlab/complex.hpp"

using namespace srlab;

namespace {

using I64 = std::vector<std::int64_t>;

BettiTable nonzero(const BettiTable& b) {
  BettiTable out;
  for (auto [i, v] : b)
    if (v) out[i] = v;
  return out;
}

}  // namespace

TEST_CASE("void complex and {∅} are different") {
  SimplicialComplex v = SimplicialComplex::void_complex({"a"});
  SimplicialComplex e = SimplicialComplex::from_facets({"a"}, {});
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dim() == kVoidDim);
  CHECK(e.dim() == -1);
  PrimeField F;
  CHECK(nonzero(relative_cohomology_dims(RelativeComplex(e), F)) == BettiTable{{-1, 1}});
  CHECK(nonzero(relative_cohomology_dims(RelativeComplex(v), F)).empty());
}

TEST_CASE("a point") {
  FVector fv = f_h_vectors(builtin_complex("simplex(0)"));
  CHECK(fv.f == I64{1, 1});
  CHECK(fv.h == I64{1, 0});
}

TEST_CASE("f- and h-vectors of the fixed builtins") {
  struct Row {
    const char* name;
    I64 f, h;
  };
  const Row rows[] = {
      {"torus7", {1, 7, 21, 14}, {1, 4, 10, -1}},
      {"rp2_6", {1, 6, 15, 10}, {1, 3, 6, 0}},
      {"moebius", {1, 5, 10, 5}, {1, 2, 3, -1}},
      {"boundary_simplex(3)", {1, 4, 6, 4}, {1, 1, 1, 1}},
      {"boundary_simplex(4)", {1, 5, 10, 10, 5}, {1, 1, 1, 1, 1}},
      {"cross_polytope(3)", {1, 6, 12, 8}, {1, 3, 3, 1}},
      {"disk_with_induced_boundary(2)", {0, 1, 3, 3}, {0, 1, 1, 1}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    FVector fv = f_h_vectors(builtin_complex(r.name));
    CHECK(fv.f == r.f);
    CHECK(fv.h == r.h);
  }
}

TEST_CASE("cohomology depends on the field for rp2_6") {
  const RelativeComplex rp2 = builtin_complex("rp2_6");
  CHECK(nonzero(relative_cohomology_dims(rp2, PrimeField(2))) == BettiTable{{1, 1}, {2, 1}});
  CHECK(nonzero(relative_cohomology_dims(rp2, PrimeField(3))).empty());
  CHECK(nonzero(relative_cohomology_dims(rp2, PrimeField())).empty());
}

TEST_CASE("cohomology of the torus, Moebius strip and a relative disk") {
  for (std::uint64_t p : {2u, 3u, 2147483647u}) {
    PrimeField F(p);
    CHECK(nonzero(relative_cohomology_dims(builtin_complex("torus7"), F)) == BettiTable{{1, 2}, {2, 1}});
    CHECK(nonzero(relative_cohomology_dims(builtin_complex("moebius"), F)) == BettiTable{{1, 1}});
  }
  PrimeField F;
  CHECK(nonzero(relative_cohomology_dims(builtin_complex("disk_with_induced_boundary(2)"), F)) ==
        BettiTable{{2, 1}});
  CHECK(nonzero(relative_cohomology_dims(builtin_complex("boundary_simplex(3)"), F)) == BettiTable{{2, 1}});
}

TEST_CASE("relative Euler characteristic is a difference") {
  for (const char* name : {"disk_with_induced_boundary(2)", "disk_with_induced_boundary(3)"}) {
    RelativeComplex psi = builtin_complex(name);
    CHECK(reduced_euler_characteristic(psi) ==
          reduced_euler_characteristic(RelativeComplex(psi.delta())) -
              reduced_euler_characteristic(RelativeComplex(psi.gamma())));
  }
  CHECK(reduced_euler_characteristic(builtin_complex("torus7")) == -1);
}

TEST_CASE("barycentric subdivisions") {
  SimplicialComplex edge = builtin_complex("simplex(1)").delta();
  SimplicialComplex sd_edge = barycentric_subdivision(edge);
  CHECK(f_h_vectors(RelativeComplex(sd_edge)).f == f_h_vectors(builtin_complex("path(2)")).f);
  CHECK(sd_edge.is_pure());

  SimplicialComplex tri = builtin_complex("boundary_simplex(2)").delta();
  SimplicialComplex hexagon = barycentric_subdivision(tri);
  CHECK(f_h_vectors(RelativeComplex(hexagon)).f == I64{1, 6, 6});
  for (Face v : hexagon.faces_of_dim(0)) CHECK(link(hexagon, v).faces_of_dim(0).size() == 2);

  SimplicialComplex solid = builtin_complex("simplex(2)").delta();
  CHECK(f_h_vectors(RelativeComplex(barycentric_subdivision(solid))).f == I64{1, 7, 12, 6});
}

TEST_CASE("links, stars and deletions") {
  SimplicialComplex t = builtin_complex("torus7").delta();
  for (Face v : t.faces_of_dim(0)) {
    SimplicialComplex lk = link(t, v);
    CHECK(lk.facets().size() == 6);  // a hexagon
    CHECK(star(t, v).facets().size() == 6);
    CHECK((lk.vertex_mask() & v) == 0);
    CHECK(deletion(t, v).num_faces() + star(t, v).num_faces() - lk.num_faces() == t.num_faces());
  }
  SimplicialComplex bd = builtin_complex("boundary_simplex(3)").delta();
  Face edge = bd.faces_of_dim(1).front();
  CHECK(link(bd, edge).facets().size() == 2);
  CHECK(link(bd, bd.faces_of_dim(2).front()).dim() == -1);
}

TEST_CASE("open stars and relative links") {
  RelativeComplex t = builtin_complex("torus7");
  Face v = vertex_face(0);
  FaceNeighborhoods n = face_neighborhoods(t, v);
  CHECK(n.open_star.faces().size() == 1 + 6 + 6);
  CHECK(n.link.delta().facets().size() == 6);
  CHECK(open_star(t, v) == n.open_star);
  CHECK(relative_star(t, v) == n.star);
}

TEST_CASE("pseudomanifold boundary and induced subcomplexes") {
  SimplicialComplex d = builtin_complex("simplex(2)").delta();
  SimplicialComplex b = pseudomanifold_boundary(d);
  CHECK(b.facets().size() == 3);
  CHECK(induced_subcomplex(d, b.vertex_mask()) != b);  // the solid triangle's boundary is not induced
  CHECK(pseudomanifold_boundary(builtin_complex("torus7").delta()).is_void());
  SimplicialComplex disk = builtin_complex("disk_with_induced_boundary(2)").delta();
  SimplicialComplex bd = pseudomanifold_boundary(disk);
  CHECK(induced_subcomplex(disk, bd.vertex_mask()) == bd);
}

TEST_CASE("cone and join") {
  SimplicialComplex e = builtin_complex("simplex(1)").delta();
  SimplicialComplex c = cone(e, "apex");
  CHECK(f_h_vectors(RelativeComplex(c)).f == I64{1, 3, 3, 1});
  CHECK(c.ground_size() == 3);
}

TEST_CASE("input hashes are stable and label sensitive") {
  const RelativeComplex t = builtin_complex("torus7");
  CHECK(input_hash(t) == "425ab2d252d6ecfa");
  CHECK(input_hash(t) == input_hash(builtin_complex("torus7")));
  CHECK(input_hash(t) != input_hash(builtin_complex("rp2_6")));
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("builtin name errors") {
  CHECK_THROWS_AS(builtin_complex("klein_bottle"), InputError);
  CHECK_THROWS_AS(builtin_complex("simplex(99)"), InputError);
  CHECK(builtin_complex("boundary_simplex_3") == builtin_complex("boundary_simplex(3)"));
}
