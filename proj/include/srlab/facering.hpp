#pragma once
// Graded pieces of face modules k[Ψ] as explicit monomial bases, linear forms,
// and graded quotients A = k[Ψ]/⟨Θ⟩.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/linalg.hpp"

namespace srlab {

// A monomial as the sorted multiset of its vertex indices.
struct Monomial {
  std::vector<std::uint8_t> vars;

  Face support() const;
  int degree() const { return static_cast<int>(vars.size()); }
  auto operator<=>(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial times(const Monomial& a, const Monomial& b);
Monomial times_vertex(const Monomial& m, int v);
std::string monomial_text(const Monomial& m, const std::vector<std::string>& ground);

class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(const RelativeComplex& psi, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  // Index of m in this basis, or -1.
  std::int64_t index_of(const Monomial& m) const;

 private:
  int degree_ = 0;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

MonomialBasis monomial_basis(const RelativeComplex& psi, int j);

// k[Ψ] with bases for degrees 0..max_degree.
class FaceModule {
 public:
  FaceModule() = default;
  FaceModule(RelativeComplex psi, int max_degree);

  const RelativeComplex& complex() const { return psi_; }
  int max_degree() const { return static_cast<int>(bases_.size()) - 1; }
  const MonomialBasis& basis(int j) const;
  std::size_t dim(int j) const { return basis(j).size(); }
  bool contains(const Monomial& m) const { return psi_.contains(m.support()); }
  void extend_to(int j);  // only for use while the owner is being built

 private:
  RelativeComplex psi_;
  std::vector<MonomialBasis> bases_;
};

using LinearForm = std::vector<Residue>;  // one coefficient per ground vertex

struct LinearFormSequence {
  std::vector<LinearForm> forms;
  std::uint64_t seed = 0;

  std::size_t size() const { return forms.size(); }
  const LinearForm& operator[](std::size_t i) const { return forms[i]; }
  bool operator==(const LinearFormSequence&) const = default;
};

// Deterministic stream of uniform residues. Rejection sampling on raw 64-bit
// draws keeps the stream identical across standard libraries.
class ResidueStream {
 public:
  ResidueStream(std::uint64_t seed, const PrimeField& F);
  Residue next();
  LinearForm next_form(std::size_t n_vertices);

 private:
  std::mt19937_64 rng_;
  std::uint64_t p_;
  std::uint64_t limit_;
};

LinearFormSequence random_linear_forms(std::size_t n_vertices, std::size_t count, std::uint64_t seed,
                                       const PrimeField& F);
LinearFormSequence random_linear_forms(const SimplicialComplex& delta, std::size_t count,
                                       std::uint64_t seed, const PrimeField& F);
LinearForm vertex_form(std::size_t n_vertices, int v);

// Facet-minor test: every maximal face σ of Ψ sees Θ restricted to its
// coordinates with rank |σ|. For |Θ| = max face size this characterizes an
// l.s.o.p. of k[Ψ].
bool restricts_to_bases(const RelativeComplex& psi, const LinearFormSequence& theta,
                        const PrimeField& F);

struct LsopSample {
  LinearFormSequence theta;
  std::size_t attempts = 0;
  bool found = false;
};

// Draws candidates from one stream seeded by `seed` until the facet-minor
// test passes. The first candidate equals random_linear_forms(seed).
LsopSample sample_lsop(const RelativeComplex& psi, std::size_t count, std::uint64_t seed,
                       const PrimeField& F, std::size_t max_attempts = 200000);

SparseMatrix multiplication_sparse(const PrimeField& F, const MonomialBasis& src,
                                   const MonomialBasis& dst, const LinearForm& form);
Matrix multiplication_matrix(const RelativeComplex& psi, const LinearForm& form, int j,
                             const PrimeField& F);

std::vector<std::int64_t> hilbert_series_coeffs(const RelativeComplex& psi, int up_to);

// Dimensions and generator multiplication maps of a graded algebra, enough to
// compute socles. gen_mult[i] holds one matrix A_i -> A_{i+1} per generator.
struct GradedAlgebraData {
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> gen_mult;
};

std::vector<std::size_t> socle_dims(const PrimeField& F, const GradedAlgebraData& a);

class GradedQuotient {
 public:
  using ExtraRelations = std::map<int, std::vector<SparseVector>>;

  // cap < 0 selects dim(Ψ)+3. Computation stops at the first zero degree at
  // or above the largest minimal-face size of Ψ, beyond which the quotient
  // stays zero. Extra relations are vectors in monomial coordinates.
  GradedQuotient(const PrimeField& F, RelativeComplex psi, LinearFormSequence theta, int cap = -1,
                 const ExtraRelations& extra = {});

  const PrimeField& field() const { return F_; }
  const RelativeComplex& complex() const { return module_.complex(); }
  const LinearFormSequence& theta() const { return theta_; }
  const FaceModule& module() const { return module_; }
  int cap() const { return cap_; }
  int top_computed() const { return static_cast<int>(dims_.size()) - 1; }
  bool finite() const { return vanishing_.has_value(); }
  std::optional<int> vanishing_degree() const { return vanishing_; }

  // 0 above the computed range once the quotient has vanished; throws
  // std::out_of_range for degrees that were never computed otherwise.
  std::size_t dim(int j) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  // Monomial-basis indices of the coset representatives in degree j.
  const std::vector<std::uint32_t>& representatives(int j) const;
  const Monomial& representative(int j, std::size_t k) const;
  // The relation rank in degree j (|basis| − dim).
  std::size_t relation_rank(int j) const;

  std::vector<Residue> reduce(int j, const SparseVector& monomial_coords) const;
  std::vector<Residue> reduce_monomial(const Monomial& m) const;
  Matrix multiplication(const LinearForm& form, int j) const;
  Matrix multiplication_by_vertex(int v, int j) const;
  // Lifts quotient coordinates to monomial coordinates via the representatives.
  SparseVector lift(int j, const std::vector<Residue>& coords) const;
  GradedAlgebraData algebra_data() const;

 private:
  PrimeField F_;
  LinearFormSequence theta_;
  FaceModule module_;
  int cap_;
  std::optional<int> vanishing_;
  std::vector<std::size_t> dims_;
  std::vector<RowEchelon> relations_;
  std::vector<std::vector<std::uint32_t>> reps_;
  std::vector<std::vector<std::int64_t>> coord_of_monomial_;
};

// The map induced by the identity on monomials (restriction or inclusion)
// from src_j to dst_j, in quotient coordinates (dst.dim(j) x src.dim(j)).
Matrix induced_map(const GradedQuotient& src, const GradedQuotient& dst, int j);
// m ↦ x_v·m from src_j to dst_{j+1}.
Matrix vertex_multiplication_map(const GradedQuotient& src, const GradedQuotient& dst, int v, int j);
// ℓ^power as a map A_j -> A_{j+power}.
Matrix power_map(const GradedQuotient& a, const LinearForm& form, int j, int power);

struct LsopVerdict {
  bool is_lsop = false;
  std::size_t expected_length = 0;
  std::optional<int> vanishing_degree;
};

LsopVerdict is_lsop(const RelativeComplex& psi, const LinearFormSequence& theta, const PrimeField& F);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace srlab
