#pragma once
// Named, reproducible theorem checks. Each report carries its input identity,
// prime, seeds, the tables behind the verdict, and diagnostics.

#include <cstdint>
#include <string>
#include <vector>

#include "srlab/duality.hpp"
#include "srlab/koszul.hpp"
#include "srlab/partition.hpp"

namespace srlab {

enum class Verdict { holds, fails, inconclusive };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);  // throws std::invalid_argument

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::int64_t>> rows;
  bool operator==(const Table&) const = default;
};

struct TheoremReport {
  std::string theorem;
  std::string input;
  std::string input_hash;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> seeds;
  int trials = 0;
  std::vector<Table> tables;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> diagnostics;
  bool operator==(const TheoremReport&) const = default;

  const Table* table(const std::string& name) const;
};

struct RunOptions {
  std::string input_name;
  std::uint64_t seed = 0;
  int trials = 3;
  int max_degree = -1;  // < 0: dim+2
};

// Failures over primes below this are reported inconclusive where the claim
// depends on genericity.
inline constexpr std::uint64_t kSmallPrime = 65536;

// Plain computations, verdict holds unless noted.
TheoremReport fvec_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport cohomology_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport hilbert_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
// holds iff an l.s.o.p. was found.
TheoremReport lsop_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport depth_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
// holds iff algebraically Cohen–Macaulay.
TheoremReport cm_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);

// Topological criterion with the strong bound i < dim Ψ − |τ| for every
// τ ∈ Δ, against the algebraic one; holds iff they agree.
struct ReisnerSides {
  bool topological = false;
  bool weak_topological = false;  // bound i < dim lk_τΨ instead
  CmVerdict algebraic;
};
ReisnerSides reisner_sides(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed, int trials);
TheoremReport reisner_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);

TheoremReport partition_homology_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
// Buchsbaum: pure and every nonempty-face star algebraically CM.
struct BuchsbaumCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};
BuchsbaumCheck buchsbaum_check(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed);
TheoremReport pou_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport total_complex_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport schenzel_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);
TheoremReport koszul_top_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o);

TheoremReport pd_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o);
TheoremReport dehn_sommerville_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o);
TheoremReport cone_lemma_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o);
TheoremReport injectivity_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o);

enum class LefschetzMode { strong, almost, subdivision };
LefschetzMode lefschetz_mode_from_name(const std::string& s);  // throws InputError
std::string lefschetz_mode_name(LefschetzMode m);
TheoremReport lefschetz_report(const SimplicialComplex& delta, LefschetzMode mode, const PrimeField& F,
                               const RunOptions& o);
TheoremReport lefschetz_subdivision_report(const SubdivisionStructure& s, const PrimeField& F, const RunOptions& o);

TheoremReport kuhnel_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o);

// Ψ = (Δ, ∂Δ) for a disk with induced boundary.
TheoremReport interior_report(const RelativeComplex& disk, const PrimeField& F, const RunOptions& o);
TheoremReport subdivision_report(const SubdivisionStructure& s, const PrimeField& F, const RunOptions& o);

// A random relative complex: 3–6 vertices, 1–5 generating faces of size ≤ 4,
// Γ generated by a random subset of faces of Δ, never void as a pair.
RelativeComplex random_relative_complex(std::uint64_t seed);

std::string report_text(const TheoremReport& r);

}  // namespace srlab
