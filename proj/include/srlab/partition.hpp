#pragma once
// Partition complexes P*(Ψ) and their variants, assembled degree by degree:
//   P^{-1} = k[Ψ],  P^i = ⊕_{τ ∈ Δ^(i)} k[st_τ Ψ],
// with d(α·e_ρ) = Σ (−1)^{pos(v, ρ∪v)} α·e_{ρ∪v}. Also the reduced complex
// P*/⟨Θ⟩, the total complex of P*⊗K*(Θ), and the interior and subdivision
// checks for balls.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srlab/facering.hpp"
#include "srlab/koszul.hpp"

namespace srlab {

using IndexDegreeTable = std::map<std::pair<int, int>, std::size_t>;  // (i, j) -> dim

inline std::size_t table_at(const IndexDegreeTable& t, int i, int j) {
  auto it = t.find({i, j});
  return it == t.end() ? 0 : it->second;
}

// A Čech-type complex over a star cover: the base column k[base] at index −1
// and, at index i ≥ 0, one column k[st_τ base] per listed face τ of size i+1.
class PartitionComplex {
 public:
  PartitionComplex(RelativeComplex base, std::vector<std::vector<Face>> cover, int max_degree);

  // All faces of Δ as the cover.
  static PartitionComplex full(const RelativeComplex& psi, int max_degree);
  // Strongly interior faces of Δ (all vertices in `interior`) as the cover,
  // over the absolute face ring k[Δ].
  static PartitionComplex interior(const SimplicialComplex& delta, Face interior, int max_degree);

  const FaceModule& base() const { return base_; }
  const std::vector<std::vector<Face>>& cover() const { return cover_; }
  int top_index() const { return static_cast<int>(cover_.size()) - 1; }
  const FaceModule& column(int i, std::size_t k) const;
  // Position of τ among the columns of index |τ|−1, or −1.
  std::int64_t column_of(Face tau) const;
  int max_degree() const { return base_.max_degree(); }

  // The complex in coarse degree t; chain index i sits at position i+1.
  ChainComplex slice(const PrimeField& F, int t) const;
  // Offset of column (i, k) inside the degree-t slice at index i.
  std::size_t offset(int i, std::size_t k, int t) const;

 private:
  FaceModule base_;
  std::vector<std::vector<Face>> cover_;
  std::vector<std::vector<FaceModule>> columns_;
  std::map<Face, std::size_t> position_;
};

// dim H^i(P*)_j for i ∈ [−1, top], j ∈ [0, max_degree].
IndexDegreeTable partition_homology_dims(const PrimeField& F, const RelativeComplex& psi, int max_degree);

// The sub-complex of the degree-|α| slice spanned by the monomial α in every
// column, extracted from the assembled slice matrices.
ChainComplex fine_degree_piece(const PrimeField& F, const PartitionComplex& pc, const Monomial& alpha);

// Columns A(st_τΨ) = k[st_τΨ]/⟨Θ⟩ with the induced Čech maps.
IndexDegreeTable reduced_partition_homology(const PrimeField& F, const RelativeComplex& psi,
                                            const LinearFormSequence& theta, int max_degree);

// Tot(P*⊗K*(Θ)) with the shifted Koszul grading; the total index of
// P^i⊗K^s is i+s and d = d^h + (−1)^{i+s} d^v. Keys are (total index, j).
ChainComplex total_complex_slice(const PrimeField& F, const PartitionComplex& pc,
                                 const LinearFormSequence& theta, int j);
IndexDegreeTable total_complex_homology(const PrimeField& F, const RelativeComplex& psi,
                                        const LinearFormSequence& theta, int max_degree);

struct InteriorVerdict {
  bool precondition_ok = false;
  bool exact = false;
  bool injective_below_top = false;
  Face interior_vertices = 0;
  IndexDegreeTable homology;                  // of P*_int
  std::map<int, std::size_t> kernel_dims;     // of A(Δ)_j -> ⊕ A(st_v Δ)_j, j ≤ d
  std::vector<std::string> diagnostics;
};

// Ψ = (Δ, ∂Δ). Sanity checks: H̃*(Δ) = 0, H̃*(∂Δ) is that of a (d−1)-sphere,
// and ∂Δ is an induced subcomplex. When they fail the check is skipped.
InteriorVerdict interior_partition_check(const PrimeField& F, const RelativeComplex& disk,
                                         const LinearFormSequence& theta);

struct SubdivisionCell {
  int dim = 0;
  SimplicialComplex subdivision;  // the subdivision of the cell inside Δ
  SimplicialComplex boundary;     // the subdivision of its boundary
};

struct SubdivisionStructure {
  SimplicialComplex delta;
  std::vector<SubdivisionCell> cells;
  // incidence[c]: cells of dimension dim−1 whose subdivision lies in the
  // boundary of cell c.
  std::vector<std::vector<std::size_t>> incidence;
};

struct CellSpec {
  int dim = 0;
  std::vector<Face> facets;
  std::vector<Face> boundary_facets;  // empty: the boundary is {∅}
};

// Validates and builds the structure; throws InputError naming the cell.
SubdivisionStructure make_subdivision_structure(const SimplicialComplex& delta,
                                                const std::vector<CellSpec>& cells);
// Δ = sd(Σ) with one cell per nonempty face of the simplicial complex Σ.
SubdivisionStructure barycentric_structure(const SimplicialComplex& sigma);
// Cells of dimension ≥ d/2 whose declared boundary is not induced in Δ.
std::vector<std::string> induced_boundary_violations(const SubdivisionStructure& s);

struct SubdivisionVerdict {
  bool precondition_ok = false;
  bool pass = false;
  std::map<int, std::size_t> kernel_dims;  // j -> dim H^{-1}(P̃*/⟨Θ⟩)_j
  // j -> dim ker(A(Δ)_j -> ⊕_v A(st_v Δ)_j), v interior to a top cell
  std::map<int, std::size_t> star_kernel_dims;
  std::vector<std::string> diagnostics;
};

SubdivisionVerdict subdivision_partition_check(const PrimeField& F, const SubdivisionStructure& s,
                                               const LinearFormSequence& theta);

}  // namespace srlab
