#include "srlab/acceptance.hpp"

#include <chrono>
#include <cstdio>

#include "srlab/io.hpp"
#include "srlab/verdicts.hpp"

namespace srlab {

namespace {

const PrimeField& big() {
  static const PrimeField f;
  return f;
}

struct Named {
  std::string name;
  RelativeComplex psi;
  std::uint64_t p;
};

RelativeComplex from_labels(std::vector<std::string> ground, std::vector<std::vector<std::string>> facets,
                            std::vector<std::vector<std::string>> gamma = {}, bool relative = false) {
  SimplicialComplex d = SimplicialComplex::from_facets(ground, facets);
  if (!relative) return RelativeComplex(d);
  return RelativeComplex(d, SimplicialComplex::from_facets(ground, gamma));
}

// The relative two-triangle complex: pure only in the weak sense.
RelativeComplex two_triangle_example() {
  return from_labels({"v1", "v2", "v3", "v4", "v5"}, {{"v1", "v2", "v3"}, {"v1", "v2", "v4"}, {"v4", "v5"}},
                     {{"v1", "v2", "v4"}}, true);
}

std::uint64_t corpus_prime(int k) {
  static const std::uint64_t primes[] = {2, 3, 2147483647};
  return primes[k % 3];
}

std::string fail_at(const std::string& what, const TheoremReport& r) {
  std::string s = what + ": " + verdict_name(r.verdict);
  if (!r.diagnostics.empty()) s += " (" + r.diagnostics.front() + ")";
  return s;
}

RunOptions opts(const std::string& name, const AcceptanceOptions& o) {
  RunOptions r;
  r.input_name = name;
  r.seed = o.seed;
  return r;
}

std::vector<std::int64_t> column(const Table* t, std::size_t c) {
  std::vector<std::int64_t> out;
  if (t)
    for (const auto& row : t->rows) out.push_back(row.at(c));
  return out;
}

std::string torus_regression(const AcceptanceOptions& o) {
  TheoremReport r = schenzel_report(builtin_complex("torus7"), big(), opts("builtin:torus7", o));
  if (r.verdict != Verdict::holds) return fail_at("schenzel torus7", r);
  if (column(r.table("h"), 1) != std::vector<std::int64_t>{1, 4, 10, -1}) return "h-vector differs from (1,4,10,-1)";
  auto dims = column(r.table("quotient"), 1);
  if (dims.size() < 4 || std::vector<std::int64_t>(dims.begin(), dims.begin() + 4) != std::vector<std::int64_t>{1, 4, 10, 1})
    return "quotient dims differ from (1,4,10,1)";
  for (std::size_t j = 4; j < dims.size(); ++j)
    if (dims[j]) return "quotient nonzero above degree 3";
  return "";
}

std::string partition_oracle(const AcceptanceOptions& o) {
  for (int k = 0; k < o.corpus_size; ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    PrimeField F(corpus_prime(k));
    TheoremReport r = partition_homology_report(random_relative_complex(seed), F, opts("random", o));
    if (r.verdict != Verdict::holds) return fail_at("random complex " + std::to_string(seed), r);
  }
  return "";
}

std::vector<Named> reisner_named() {
  std::vector<Named> out;
  const std::uint64_t P = 2147483647;
  for (int k = 1; k <= 4; ++k) out.push_back({"boundary_simplex(" + std::to_string(k) + ")", builtin_complex("boundary_simplex(" + std::to_string(k) + ")"), P});
  for (int k = 1; k <= 3; ++k) out.push_back({"simplex(" + std::to_string(k) + ")", builtin_complex("simplex(" + std::to_string(k) + ")"), P});
  out.push_back({"cross_polytope(3)", builtin_complex("cross_polytope(3)"), P});
  out.push_back({"disk_with_induced_boundary(2)", builtin_complex("disk_with_induced_boundary(2)"), P});
  out.push_back({"disk_with_induced_boundary(2) absolute", RelativeComplex(builtin_complex("disk_with_induced_boundary(2)").delta()), P});
  out.push_back({"rp2_6 F2", builtin_complex("rp2_6"), 2});
  out.push_back({"rp2_6 F3", builtin_complex("rp2_6"), 3});
  out.push_back({"torus7", builtin_complex("torus7"), P});
  out.push_back({"moebius", builtin_complex("moebius"), P});
  out.push_back({"path(1)", builtin_complex("path(1)"), P});
  out.push_back({"path(3)", builtin_complex("path(3)"), P});
  out.push_back({"two_points", builtin_complex("two_points"), P});
  out.push_back({"two disjoint edges", from_labels({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}}), P});
  out.push_back({"triangle and edge", from_labels({"1", "2", "3", "4", "5"}, {{"1", "2", "3"}, {"4", "5"}}), P});
  out.push_back({"point and triangle", from_labels({"1", "2", "3", "4"}, {{"1"}, {"2", "3", "4"}}), 2});
  out.push_back({"relative two-triangle", two_triangle_example(), P});
  return out;
}

std::string reisner_agreement(const AcceptanceOptions& o) {
  for (const auto& n : reisner_named()) {
    TheoremReport r = reisner_report(n.psi, PrimeField(n.p), opts(n.name, o));
    if (r.verdict != Verdict::holds) return fail_at(n.name, r);
  }
  for (int k = 0; k < o.corpus_size; ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    TheoremReport r = reisner_report(random_relative_complex(seed), PrimeField(corpus_prime(k)), opts("random", o));
    if (r.verdict != Verdict::holds) return fail_at("random complex " + std::to_string(seed), r);
  }
  return "";
}

std::vector<Named> pou_corpus() {
  std::vector<Named> out{{"torus7", builtin_complex("torus7"), 2147483647},
                         {"rp2_6 F2", builtin_complex("rp2_6"), 2},
                         {"rp2_6 F3", builtin_complex("rp2_6"), 3}};
  for (int k = 1; k <= 4; ++k)
    out.push_back({"boundary_simplex(" + std::to_string(k) + ")", builtin_complex("boundary_simplex(" + std::to_string(k) + ")"), 2147483647});
  return out;
}

std::string partition_of_unity(const AcceptanceOptions& o) {
  for (const auto& n : pou_corpus()) {
    TheoremReport r = pou_report(n.psi, PrimeField(n.p), opts(n.name, o));
    if (r.verdict != Verdict::holds) return fail_at(n.name, r);
  }
  return "";
}

std::string total_complex(const AcceptanceOptions& o) {
  for (const auto& n : pou_corpus()) {
    TheoremReport r = total_complex_report(n.psi, PrimeField(n.p), opts(n.name, o));
    if (r.verdict != Verdict::holds) return fail_at(n.name, r);
  }
  return "";
}

std::string poincare_duality(const AcceptanceOptions& o) {
  const SimplicialComplex torus = builtin_complex("torus7").delta();
  TheoremReport r = pd_report(torus, big(), opts("builtin:torus7", o));
  if (r.verdict != Verdict::holds) return fail_at("B(torus7)", r);
  if (column(r.table("dims"), 3) != std::vector<std::int64_t>{1, 4, 4, 1}) return "B(torus7) dims differ from (1,4,4,1)";
  if (column(r.table("dims"), 1) != std::vector<std::int64_t>{1, 4, 10, 1}) return "A(torus7) dims differ from (1,4,10,1)";
  if (r.table("routes")->rows.at(0).at(3) != 0) return "A(torus7) was accepted as a duality algebra";
  for (int k = 1; k <= 5; ++k) {
    const std::string name = "boundary_simplex(" + std::to_string(k) + ")";
    TheoremReport s = pd_report(builtin_complex(name).delta(), big(), opts(name, o));
    if (s.verdict != Verdict::holds) return fail_at(name, s);
    auto a = column(s.table("dims"), 1), b = column(s.table("dims"), 3);
    if (a != b) return name + ": B differs from A";
    if (std::vector<std::int64_t>(b.rbegin(), b.rend()) != b) return name + ": B is not palindromic";
  }
  return "";
}

std::string injectivity(const AcceptanceOptions& o) {
  for (const char* name : {"torus7", "boundary_simplex(3)"}) {
    TheoremReport r = injectivity_report(builtin_complex(name).delta(), big(), opts(name, o));
    if (r.verdict != Verdict::holds) return fail_at(name, r);
  }
  return "";
}

std::string koszul_consistency(const AcceptanceOptions& o) {
  for (int k = 0; k < o.koszul_corpus_size; ++k) {
    const std::uint64_t seed = o.seed + 100000 + static_cast<std::uint64_t>(k);
    RunOptions ro = opts("random", o);
    ro.seed = seed;
    TheoremReport r = koszul_top_report(random_relative_complex(seed), PrimeField(corpus_prime(k)), ro);
    if (r.verdict != Verdict::holds) return fail_at("random complex " + std::to_string(seed), r);
  }
  return "";
}

std::string lefschetz(const AcceptanceOptions& o) {
  for (int k = 1; k <= 4; ++k) {
    const std::string name = "boundary_simplex(" + std::to_string(k) + ")";
    TheoremReport r = lefschetz_report(builtin_complex(name).delta(), LefschetzMode::strong, big(), opts(name, o));
    if (r.verdict != Verdict::holds) return fail_at(name + " strong", r);
  }
  for (int k = 2; k <= 3; ++k) {
    const std::string name = "cross_polytope(" + std::to_string(k) + ")";
    TheoremReport r = lefschetz_report(builtin_complex(name).delta(), LefschetzMode::strong, big(), opts(name, o));
    if (r.verdict != Verdict::holds) return fail_at(name + " strong", r);
  }
  TheoremReport t = lefschetz_report(builtin_complex("torus7").delta(), LefschetzMode::almost, big(), opts("torus7", o));
  if (t.verdict != Verdict::holds) return fail_at("torus7 almost", t);
  TheoremReport s = lefschetz_subdivision_report(builtin_structure("sd_simplex_3"), big(), opts("sd_simplex_3", o));
  if (s.verdict != Verdict::holds) return fail_at("sd_simplex_3 subdivision", s);
  return "";
}

std::string kuhnel(const AcceptanceOptions& o) {
  TheoremReport t = kuhnel_report(builtin_complex("torus7").delta(), big(), opts("torus7", o));
  if (t.verdict != Verdict::holds) return fail_at("torus7", t);
  const Table* kt = t.table("kuhnel");
  if (!kt || kt->rows.empty() || kt->rows[0][1] != 1 || kt->rows[0][2] != 6) return "torus7 j=1 row differs from 1 <= 6";
  TheoremReport r = kuhnel_report(builtin_complex("rp2_6").delta(), PrimeField(2), opts("rp2_6", o));
  if (r.verdict != Verdict::holds) return fail_at("rp2_6 F2", r);
  const Table* rt = r.table("kuhnel");
  if (!rt || rt->rows.empty() || rt->rows[0][1] != 1 || rt->rows[0][2] != 5) return "rp2_6 j=1 row differs from 1 <= 5";
  return "";
}

std::string interior(const AcceptanceOptions& o) {
  for (int k = 2; k <= 3; ++k) {
    const std::string name = "sd_disk_" + std::to_string(k);
    TheoremReport r = interior_report(subdivided_disk(k), big(), opts(name, o));
    if (r.verdict != Verdict::holds) return fail_at(name, r);
  }
  return "";
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "torus regression: h = (1,4,10,-1), quotient dims (1,4,10,1)", 5, torus_regression},
      {2, "partition homology equals relative cohomology on the random corpus", 90, partition_oracle},
      {3, "topological and algebraic Cohen-Macaulay verdicts agree", 120, reisner_agreement},
      {4, "partition of unity dimension formula", 60, partition_of_unity},
      {5, "total complex homology formula", 60, total_complex},
      {6, "Poincare duality of B, negative control A(torus7)", 30, poincare_duality},
      {7, "open star injectivity into A and B", 30, injectivity},
      {8, "top Koszul homology equals the quotient, depth seed-independent", 60, koszul_consistency},
      {9, "Lefschetz instances (strong, almost, subdivision)", 60, lefschetz},
      {10, "Kuhnel inequality for torus7 and rp2_6 over F_2", 5, kuhnel},
      {11, "interior star restriction injective on subdivided simplices", 30, interior},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = c.run(o);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (failure.empty() && r.seconds > r.budget_seconds) failure = "over the time budget";
  r.pass = failure.empty();
  r.detail = failure;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(run_criterion(c, o));
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.budget_seconds);
  std::string line = std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing + ")";
  if (!r.pass) line += ": " + r.detail;
  return line;
}

}  // namespace srlab
