#pragma once
// Graded Koszul complexes K*(Θ)⊗k[Ψ], their homology, and depth.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srlab/facering.hpp"

namespace srlab {

enum class KoszulGrading {
  natural,  // deg(α·e_S) = deg α
  shifted,  // deg(α·e_S) = deg α + n − |S|
};

// K^i is spanned by α·e_S with |S| = i; the differential multiplies by
// Σ θ_k e_k from the left: e_S ↦ (−1)^{#{s∈S : s<k}} θ_k e_{S∪k}.
class KoszulComplex {
 public:
  // Builds monomial bases of k[Ψ] up to α-degree max_alpha_degree + 1.
  KoszulComplex(const PrimeField& F, RelativeComplex psi, LinearFormSequence theta, int max_alpha_degree);

  std::size_t length() const { return theta_.size(); }
  int max_alpha_degree() const { return max_t_; }
  const FaceModule& module() const { return module_; }
  // Wedge subsets of size i as bitmasks over {0..n-1}, in lexicographic order.
  const std::vector<std::uint32_t>& subsets(int i) const;
  std::size_t dim(int i, int t) const;
  // ∂: K^i_t -> K^{i+1}_{t+1}; rows index K^{i+1}_{t+1}.
  SparseMatrix differential(int i, int t) const;
  // Natural-grading homology dimension at (i, t).
  std::size_t homology(int i, int t) const;
  std::size_t differential_rank(int i, int t) const;

 private:
  PrimeField F_;
  LinearFormSequence theta_;
  int max_t_;
  FaceModule module_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::map<std::uint32_t, std::uint32_t> subset_index_;
};

// Subsets of {0..n-1} of the given size as bitmasks, lexicographic in their
// sorted index tuples.
std::vector<std::uint32_t> wedge_subsets(std::size_t n, int size);

using KoszulTable = std::map<std::pair<int, int>, std::size_t>;  // (i, degree) -> dim

// Degrees run over [0, cap]; cap < 0 selects dim(Ψ)+3.
KoszulTable koszul_homology_dims(const PrimeField& F, const RelativeComplex& psi,
                                 const LinearFormSequence& theta, KoszulGrading mode, int cap = -1);

// Minimal i with H^i ≠ 0. Koszul homology of a squarefree module with respect
// to a linear system of parameters sits in α-degrees ≤ reg ≤ dim(Ψ)+1, so
// that window is searched. Throws for the zero module.
std::size_t depth(const PrimeField& F, const RelativeComplex& psi, const LinearFormSequence& theta);

struct CmVerdict {
  bool cm = false;
  std::size_t depth = 0;
  std::size_t expected = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> trial_depths;
  std::vector<std::string> methods;  // "lsop" or "all-variables" per trial
  bool seeds_agree = true;
};

// Depth is computed with a sampled l.s.o.p.; if the facet-minor test finds
// none within the attempt budget (small fields), the sequence of all vertex
// variables is used instead, which computes the same depth.
CmVerdict is_algebraically_cm(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed = 0,
                              int trials = 3, std::size_t lsop_attempts = 2000);

}  // namespace srlab
