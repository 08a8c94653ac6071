#pragma once
// Simplicial and relative simplicial complexes over an ordered ground set of at
// most 64 vertices. A face is a bitmask; bit i is the i-th ground vertex.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlab/linalg.hpp"

namespace srlab {

using Face = std::uint64_t;

inline constexpr int kVoidDim = -2;  // dim() of a complex with no faces at all
inline constexpr std::size_t kMaxVertices = 64;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int face_size(Face f) { return std::popcount(f); }
inline Face vertex_face(int v) { return Face{1} << v; }
std::vector<int> face_vertices(Face f);
// Number of vertices of f that precede v in the ground order.
inline int position_in(Face f, int v) { return std::popcount(f & (vertex_face(v) - 1)); }

class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex on an empty ground set

  static SimplicialComplex void_complex(std::vector<std::string> ground);
  // Downward closure of the generators; no generators gives the void complex.
  static SimplicialComplex from_generators(std::vector<std::string> ground,
                                           const std::vector<Face>& generators);
  // Label-based constructor. An empty facet list yields {∅} unless is_void.
  static SimplicialComplex from_facets(std::vector<std::string> ground,
                                       const std::vector<std::vector<std::string>>& facets,
                                       bool is_void = false);
  static SimplicialComplex from_face_set(std::vector<std::string> ground, std::vector<Face> faces);

  const std::vector<std::string>& ground_set() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  int vertex_index(const std::string& label) const;  // throws InputError
  Face face_of(const std::vector<std::string>& labels) const;
  std::string face_label(Face f) const;

  bool is_void() const { return sorted_.empty(); }
  bool contains(Face f) const;
  // All faces, ordered by size then by mask value.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Face> faces_of_dim(int k) const;
  std::vector<Face> facets() const;
  int dim() const;
  Face vertex_mask() const;
  bool is_pure() const;
  std::size_t num_faces() const { return faces_.size(); }

  bool operator==(const SimplicialComplex& o) const {
    return ground_ == o.ground_ && faces_ == o.faces_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<Face> faces_;
  std::vector<Face> sorted_;
};

SimplicialComplex link(const SimplicialComplex& d, Face tau);
SimplicialComplex star(const SimplicialComplex& d, Face tau);
// Δ − τ: the faces disjoint from τ.
SimplicialComplex deletion(const SimplicialComplex& d, Face tau);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, Face vertices);
SimplicialComplex join_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& d, const std::string& apex);
// Closure of the codimension-one faces lying in exactly one facet (pure input);
// void when there are none.
SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& d);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& d);

class RelativeComplex {
 public:
  RelativeComplex() = default;
  explicit RelativeComplex(SimplicialComplex delta);  // Γ void
  RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma);  // throws unless Γ ⊆ Δ

  const SimplicialComplex& delta() const { return delta_; }
  const SimplicialComplex& gamma() const { return gamma_; }
  const std::vector<std::string>& ground_set() const { return delta_.ground_set(); }
  std::size_t ground_size() const { return delta_.ground_size(); }

  bool contains(Face f) const { return delta_.contains(f) && !gamma_.contains(f); }
  // Faces of Δ not in Γ, ordered by size then mask value.
  std::vector<Face> faces() const;
  bool is_void() const;
  bool is_absolute() const { return gamma_.is_void(); }
  int dim() const;
  // Maximum cardinality of a face of Δ not in Γ: the expected l.s.o.p. length.
  std::size_t max_face_size() const;
  std::vector<Face> maximal_faces() const;
  std::vector<Face> minimal_faces() const;
  bool is_pure() const;

  bool operator==(const RelativeComplex&) const = default;

 private:
  SimplicialComplex delta_;
  SimplicialComplex gamma_;
};

struct FaceNeighborhoods {
  RelativeComplex link;
  RelativeComplex star;
  RelativeComplex open_star;
  SimplicialComplex deletion;
};

FaceNeighborhoods face_neighborhoods(const RelativeComplex& psi, Face tau);
RelativeComplex relative_link(const RelativeComplex& psi, Face tau);
RelativeComplex relative_star(const RelativeComplex& psi, Face tau);
RelativeComplex open_star(const RelativeComplex& psi, Face tau);

struct FVector {
  int dim = -1;
  std::vector<std::int64_t> f;  // f[0] = f_{-1}, ..., f[dim+1] = f_dim
  std::vector<std::int64_t> h;  // h_0 .. h_{dim+1}

  std::int64_t f_at(int i) const { return f.at(static_cast<std::size_t>(i + 1)); }
};

FVector f_h_vectors(const RelativeComplex& psi);

using BettiTable = std::map<int, std::size_t>;

// Reduced relative cochain complex: index i is spanned by the i-dimensional
// faces of Ψ, the empty face sits at index −1.
ChainComplex cochain_complex(const RelativeComplex& psi, const PrimeField& F);
BettiTable relative_cohomology_dims(const RelativeComplex& psi, const PrimeField& F);
inline std::size_t betti(const BettiTable& b, int i) {
  auto it = b.find(i);
  return it == b.end() ? 0 : it->second;
}
std::int64_t reduced_euler_characteristic(const RelativeComplex& psi);

// Builtins. Names: simplex(k), boundary_simplex(k), cross_polytope(k) (the
// boundary complex), torus7, rp2_6, moebius, disk_with_induced_boundary(k),
// two_points, path(k). "name_k" is accepted for "name(k)".
RelativeComplex builtin_complex(const std::string& name);
std::vector<std::string> builtin_names();

// Frozen facet lists of the fixed builtins, 1-based vertex labels.
const std::vector<std::vector<int>>& torus7_facets();
const std::vector<std::vector<int>>& rp2_6_facets();
const std::vector<std::vector<int>>& moebius_facets();

// Stable 64-bit FNV-1a digest of the canonical text of Ψ, as 16 hex digits.
std::string canonical_text(const RelativeComplex& psi);
std::string input_hash(const RelativeComplex& psi);
std::string fnv1a_hex(const std::string& text);

}  // namespace srlab
