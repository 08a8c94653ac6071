#pragma once
// A(Δ) = k[Δ]/⟨Θ⟩ for closed manifolds, the ideal J of classes dying on every
// vertex star, the quotient B(Δ) = A(Δ)/J, and Poincaré duality checks.

#include <map>
#include <string>
#include <vector>

#include "srlab/facering.hpp"

namespace srlab {

struct ManifoldCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

// Purity, sphere cohomology of every link of a nonempty face, and a
// one-dimensional top cohomology group.
ManifoldCheck manifold_sanity(const PrimeField& F, const SimplicialComplex& delta);

struct DualityPresentation {
  GradedQuotient base;                         // A(Δ)
  GradedQuotient b;                            // B(Δ)
  int fundamental_degree = 0;                  // d+1
  std::vector<std::size_t> j_dims;             // degrees 0..d+1
  std::map<int, std::vector<SparseVector>> j_basis;  // monomial coordinates
  std::vector<std::size_t> b_dims;             // degrees 0..d+1
};

// Throws InputError naming the offending face when the sanity check fails.
DualityPresentation build_B(const PrimeField& F, const SimplicialComplex& delta, const LinearFormSequence& theta);

// dim ker(A_j -> ⊕_v A(st_v Δ)_j) together with a basis in A coordinates.
std::vector<std::vector<Residue>> star_restriction_kernel(const PrimeField& F, const GradedQuotient& a,
                                                          const std::vector<GradedQuotient>& stars, int j);

struct PairingRank {
  std::size_t rank = 0;
  bool full = false;
};

// Rank of (a, b) ↦ coefficient of the top class in a·b on A_i × A_{n−i}.
// Throws std::domain_error unless dim A_n = 1.
PairingRank pairing_rank(const GradedQuotient& a, int n, int i);
Matrix pairing_matrix(const GradedQuotient& a, int n, int i);

struct PdVerdict {
  bool is_pd = false;
  bool pairing_route = false;
  bool socle_route = false;
  bool routes_agree = false;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> socle;
  std::map<int, std::size_t> pairing_ranks;
  std::vector<std::string> diagnostics;
};

// Pairing route: dims vanish above n, dim A_n = 1, every pairing is perfect.
// Socle route: the socle is A_n and one-dimensional.
PdVerdict is_poincare_duality_algebra(const GradedQuotient& a, int n);

struct ConeLemmaVerdict {
  bool pass = false;
  std::vector<std::size_t> star_dims;       // A(st_v Δ)_j
  std::vector<std::size_t> open_star_dims;  // A(st°_v Δ)_{j+1}
  std::vector<std::string> diagnostics;
};

// x_v : A(st_v Δ)_j -> A(st°_v Δ)_{j+1} is square and invertible for j ∈ [0, d+1].
ConeLemmaVerdict cone_lemma_check(const PrimeField& F, const SimplicialComplex& delta, int v,
                                  const LinearFormSequence& theta);

struct InjectivityVerdict {
  bool injective = true;
  std::vector<std::string> diagnostics;
};

// A(st°_v Δ)_j -> target_j has full column rank for every vertex v and j ≤ d+1.
InjectivityVerdict open_star_injectivity(const PrimeField& F, const SimplicialComplex& delta,
                                         const GradedQuotient& target, const LinearFormSequence& theta);

// Every J basis element times every x_v vanishes in A.
bool j_annihilates_positive_degrees(const DualityPresentation& p);

}  // namespace srlab
