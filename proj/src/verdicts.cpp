#include "srlab/verdicts.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace srlab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

const Table* TheoremReport::table(const std::string& name) const {
  for (const auto& t : tables)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

std::int64_t I(std::size_t x) { return static_cast<std::int64_t>(x); }

TheoremReport start(const std::string& theorem, const std::string& hash, const PrimeField& F, const RunOptions& o) {
  TheoremReport r;
  r.theorem = theorem;
  r.input = o.input_name;
  r.input_hash = hash;
  r.prime = F.modulus();
  r.trials = std::max(o.trials, 1);
  return r;
}

TheoremReport start(const std::string& theorem, const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  return start(theorem, input_hash(psi), F, o);
}

std::string structure_hash(const SubdivisionStructure& s) {
  std::string text = canonical_text(RelativeComplex(s.delta));
  for (const auto& c : s.cells) {
    text += "|" + std::to_string(c.dim) + ":";
    for (Face f : c.subdivision.facets()) text += s.delta.face_label(f);
    text += "/";
    for (Face f : c.boundary.facets()) text += s.delta.face_label(f);
  }
  return fnv1a_hex(text);
}

int window(const RelativeComplex& psi, const RunOptions& o) {
  return o.max_degree >= 0 ? o.max_degree : std::max(psi.dim(), 0) + 2;
}

Table betti_table(const BettiTable& b) {
  Table t{"betti", {"i", "dim"}, {}};
  for (auto [i, x] : b) t.rows.push_back({i, I(x)});
  return t;
}

Table dims_table(const std::string& name, const std::vector<std::size_t>& dims) {
  Table t{name, {"j", "dim"}, {}};
  for (std::size_t j = 0; j < dims.size(); ++j) t.rows.push_back({I(j), I(dims[j])});
  return t;
}

Verdict generic_failure(const PrimeField& F) {
  return F.modulus() < kSmallPrime ? Verdict::inconclusive : Verdict::fails;
}

LinearForm random_form(std::size_t n, std::uint64_t seed, const PrimeField& F) {
  // A stream distinct from the one used for Θ with the same seed.
  return random_linear_forms(n, 1, seed ^ 0x9e3779b97f4a7c15ULL, F)[0];
}

}  // namespace

TheoremReport fvec_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("fvec", psi, F, o);
  FVector v = f_h_vectors(psi);
  Table f{"f", {"i", "f_i"}, {}}, h{"h", {"i", "h_i"}, {}};
  for (int i = -1; i <= v.dim; ++i) f.rows.push_back({i, v.f_at(i)});
  for (std::size_t i = 0; i < v.h.size(); ++i) h.rows.push_back({I(i), v.h[i]});
  r.tables = {f, h};
  r.verdict = Verdict::holds;
  return r;
}

TheoremReport cohomology_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("cohomology", psi, F, o);
  r.tables.push_back(betti_table(relative_cohomology_dims(psi, F)));
  r.verdict = Verdict::holds;
  return r;
}

TheoremReport hilbert_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("hilbert", psi, F, o);
  const int w = window(psi, o);
  auto coeffs = hilbert_series_coeffs(psi, w);
  FaceModule m(psi, w);
  Table t{"hilbert", {"j", "series", "monomials"}, {}};
  bool agree = true;
  for (int j = 0; j <= w; ++j) {
    t.rows.push_back({j, coeffs[static_cast<std::size_t>(j)], I(m.dim(j))});
    agree &= coeffs[static_cast<std::size_t>(j)] == I(m.dim(j));
  }
  r.tables.push_back(t);
  r.verdict = agree ? Verdict::holds : Verdict::fails;
  if (!agree) r.diagnostics.push_back("series from the f-vector differs from the monomial count");
  return r;
}

TheoremReport lsop_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("lsop", psi, F, o);
  const std::size_t n = psi.max_face_size();
  Table t{"lsop", {"trial", "found", "attempts", "quotient_top"}, {}};
  r.verdict = generic_failure(F);
  for (int k = 0; k < r.trials; ++k) {
    const std::uint64_t s = o.seed + static_cast<std::uint64_t>(k);
    r.seeds.push_back(s);
    LsopSample sample = sample_lsop(psi, n, s, F);
    std::int64_t top = -1;
    if (sample.found) {
      LsopVerdict v = is_lsop(psi, sample.theta, F);
      if (!v.is_lsop) r.diagnostics.push_back("facet-minor test and quotient disagree");
      top = v.vanishing_degree ? *v.vanishing_degree : -1;
    }
    t.rows.push_back({k, sample.found ? 1 : 0, I(sample.attempts), top});
    if (sample.found) {
      Table forms{"theta", {"form", "vertex", "coefficient"}, {}};
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t x = 0; x < psi.ground_size(); ++x)
          forms.rows.push_back({I(q), I(x), static_cast<std::int64_t>(sample.theta[q][x])});
      r.tables.push_back(t);
      r.tables.push_back(forms);
      r.verdict = Verdict::holds;
      return r;
    }
  }
  r.tables.push_back(t);
  r.diagnostics.push_back("no linear system of parameters found");
  return r;
}

namespace {

TheoremReport depth_report_from(const char* name, const CmVerdict& v, const RelativeComplex& psi, const PrimeField& F,
                                const RunOptions& o) {
  TheoremReport r = start(name, psi, F, o);
  r.seeds = v.seeds;
  Table t{"depth", {"trial", "depth", "expected", "lsop"}, {}};
  for (std::size_t k = 0; k < v.trial_depths.size(); ++k)
    t.rows.push_back({I(k), I(v.trial_depths[k]), I(v.expected), v.methods[k] == "lsop" ? 1 : 0});
  r.tables.push_back(t);
  r.verdict = v.seeds_agree ? Verdict::holds : Verdict::inconclusive;
  if (!v.seeds_agree) r.diagnostics.push_back("depth differs between seeds");
  return r;
}

}  // namespace

TheoremReport depth_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  return depth_report_from("depth", is_algebraically_cm(psi, F, o.seed, std::max(o.trials, 1)), psi, F, o);
}

TheoremReport cm_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  CmVerdict v = is_algebraically_cm(psi, F, o.seed, std::max(o.trials, 1));
  TheoremReport r = depth_report_from("cm", v, psi, F, o);
  if (v.seeds_agree) r.verdict = v.cm ? Verdict::holds : Verdict::fails;
  return r;
}

ReisnerSides reisner_sides(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed, int trials) {
  ReisnerSides s;
  s.topological = s.weak_topological = true;
  const int d = psi.dim();
  for (Face tau : psi.delta().faces()) {
    RelativeComplex lk = relative_link(psi, tau);
    const int strong = d - face_size(tau);
    const int weak = lk.dim();
    for (auto [i, x] : relative_cohomology_dims(lk, F)) {
      if (!x || i < -1) continue;
      if (i < strong) s.topological = false;
      if (i < weak) s.weak_topological = false;
    }
  }
  s.algebraic = is_algebraically_cm(psi, F, seed, trials);
  return s;
}

TheoremReport reisner_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("reisner", psi, F, o);
  ReisnerSides s = reisner_sides(psi, F, o.seed, r.trials);
  r.seeds = s.algebraic.seeds;
  r.tables.push_back({"sides",
                      {"topological", "weak_topological", "algebraic", "depth", "expected"},
                      {{s.topological, s.weak_topological, s.algebraic.cm, I(s.algebraic.depth), I(s.algebraic.expected)}}});
  if (s.topological != s.weak_topological)
    r.diagnostics.push_back("the weak link condition differs from the strong one; the strong one is used");
  if (!s.algebraic.seeds_agree) r.diagnostics.push_back("depth differs between seeds");
  r.verdict = s.topological == s.algebraic.cm ? Verdict::holds : Verdict::fails;
  return r;
}

TheoremReport partition_homology_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("partition-homology", psi, F, o);
  const int w = window(psi, o);
  IndexDegreeTable h = partition_homology_dims(F, psi, w);
  BettiTable b = relative_cohomology_dims(psi, F);
  const int top = std::max(psi.delta().dim(), -1);
  Table t{"partition", {"i", "j", "partition", "expected"}, {}};
  bool ok = true;
  for (int i = -1; i <= top + 1; ++i)
    for (int j = 0; j <= w; ++j) {
      const std::size_t lhs = table_at(h, i, j);
      const std::size_t rhs = j == 0 ? betti(b, i) : 0;
      t.rows.push_back({i, j, I(lhs), I(rhs)});
      if (lhs != rhs) {
        ok = false;
        r.diagnostics.push_back("mismatch at (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
      }
    }
  r.tables = {betti_table(b), t};
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  return r;
}

BuchsbaumCheck buchsbaum_check(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed) {
  BuchsbaumCheck c;
  if (!psi.is_pure()) {
    c.ok = false;
    c.diagnostics.push_back("complex is not pure");
  }
  for (Face tau : psi.delta().faces()) {
    if (!tau) continue;
    if (!is_algebraically_cm(relative_star(psi, tau), F, seed, 1).cm) {
      c.ok = false;
      c.diagnostics.push_back("star of " + psi.delta().face_label(tau) + " is not Cohen-Macaulay");
    }
  }
  return c;
}

namespace {

// Runs `attempt(seed, report)` for up to `trials` seeds until it returns true.
template <class Fn>
bool run_trials(TheoremReport& r, std::uint64_t seed, Fn attempt) {
  for (int k = 0; k < r.trials; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    r.seeds.push_back(s);
    if (attempt(s)) return true;
  }
  return false;
}

std::int64_t betti_at(const BettiTable& b, int i) { return I(betti(b, i)); }

}  // namespace

TheoremReport pou_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("pou", psi, F, o);
  BuchsbaumCheck pre = buchsbaum_check(psi, F, o.seed);
  if (!pre.ok) {
    r.diagnostics = pre.diagnostics;
    r.verdict = Verdict::inconclusive;
    return r;
  }
  const int d = psi.dim();
  const int w = o.max_degree >= 0 ? o.max_degree : d + 2;
  BettiTable b = relative_cohomology_dims(psi, F);
  r.tables.push_back(betti_table(b));
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(psi, psi.max_face_size(), s, F);
    if (!th.found) {
      r.diagnostics.push_back("seed " + std::to_string(s) + ": no l.s.o.p. found");
      return false;
    }
    IndexDegreeTable h = reduced_partition_homology(F, psi, th.theta, w);
    Table t{"pou", {"i", "j", "homology", "formula"}, {}};
    bool pass = true;
    for (int i = -1; i <= d + 1; ++i)
      for (int j = 0; j <= w; ++j) {
        const std::int64_t lhs = I(table_at(h, i, j));
        const std::int64_t rhs = binomial(d + 1, j) * betti_at(b, i + j);
        t.rows.push_back({i, j, lhs, rhs});
        pass &= lhs == rhs;
      }
    r.tables.push_back(t);
    if (!pass) r.diagnostics.push_back("seed " + std::to_string(s) + ": table differs from the formula");
    return pass;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport total_complex_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("total-complex", psi, F, o);
  const int d = psi.dim();
  const int w = o.max_degree >= 0 ? o.max_degree : d + 2;
  const int n = static_cast<int>(psi.max_face_size());
  const int top = std::max(psi.delta().dim(), -1);
  BettiTable b = relative_cohomology_dims(psi, F);
  r.tables.push_back(betti_table(b));
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(psi, psi.max_face_size(), s, F);
    IndexDegreeTable h = total_complex_homology(F, psi, th.theta, w);
    Table t{"total", {"k", "j", "homology", "formula"}, {}};
    bool pass = true;
    for (int k = -1; k <= top + n; ++k)
      for (int j = 0; j <= w; ++j) {
        const std::int64_t lhs = I(table_at(h, k, j));
        const std::int64_t rhs = binomial(d + 1, j) * betti_at(b, k + j - d - 1);
        t.rows.push_back({k, j, lhs, rhs});
        pass &= lhs == rhs;
      }
    r.tables.push_back(t);
    return pass;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport schenzel_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("schenzel", psi, F, o);
  FVector fv = f_h_vectors(psi);
  BettiTable b = relative_cohomology_dims(psi, F);
  Table h{"h", {"i", "h_i"}, {}};
  for (std::size_t i = 0; i < fv.h.size(); ++i) h.rows.push_back({I(i), fv.h[i]});
  r.tables = {h, betti_table(b)};
  BuchsbaumCheck pre = buchsbaum_check(psi, F, o.seed);
  if (!pre.ok) {
    r.diagnostics = pre.diagnostics;
    r.verdict = Verdict::inconclusive;
    return r;
  }
  const int d = fv.dim;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(psi, psi.max_face_size(), s, F);
    if (!th.found) return false;
    GradedQuotient q(F, psi, th.theta, d + 3);
    Table t{"quotient", {"j", "dim", "formula"}, {}};
    bool pass = true;
    for (int j = 0; j <= d + 2; ++j) {
      std::int64_t rhs = j < static_cast<int>(fv.h.size()) ? fv.h[static_cast<std::size_t>(j)] : 0;
      std::int64_t sum = 0;
      for (int i = 0; i <= j - 2; ++i) sum += ((i + j) % 2 ? -1 : 1) * betti_at(b, i);
      rhs += binomial(d + 1, j) * sum;
      const std::int64_t lhs = I(q.dim(j));
      t.rows.push_back({j, lhs, rhs});
      pass &= lhs == rhs;
    }
    r.tables.push_back(t);
    return pass;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport koszul_top_report(const RelativeComplex& psi, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("koszul-top", psi, F, o);
  const int w = window(psi, o);
  const int n = static_cast<int>(psi.max_face_size());
  const std::uint64_t s = o.seed;
  r.seeds.push_back(s);
  LinearFormSequence theta = random_linear_forms(psi.ground_size(), static_cast<std::size_t>(n), s, F);
  KoszulTable k = koszul_homology_dims(F, psi, theta, KoszulGrading::natural, w);
  GradedQuotient q(F, psi, theta, w);
  Table t{"top", {"j", "koszul", "quotient"}, {}};
  bool ok = true;
  for (int j = 0; j <= w; ++j) {
    const std::size_t lhs = k.at({n, j});
    const std::size_t rhs = j <= q.top_computed() || q.finite() ? q.dim(j) : lhs;
    t.rows.push_back({j, I(lhs), I(rhs)});
    ok &= lhs == rhs;
  }
  r.tables.push_back(t);
  if (!psi.is_void()) {
    CmVerdict v = is_algebraically_cm(psi, F, o.seed, r.trials);
    Table dt{"depth", {"seed", "depth"}, {}};
    for (std::size_t i = 0; i < v.seeds.size(); ++i) dt.rows.push_back({I(v.seeds[i]), I(v.trial_depths[i])});
    r.tables.push_back(dt);
    if (!v.seeds_agree) {
      ok = false;
      r.diagnostics.push_back("depth differs between seeds");
    }
  }
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  return r;
}

namespace {

bool palindromic(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

// Runs the manifold sanity check; on failure fills the report as inconclusive.
bool manifold_precondition(TheoremReport& r, const SimplicialComplex& delta, const PrimeField& F) {
  ManifoldCheck c = manifold_sanity(F, delta);
  if (c.ok) return true;
  r.diagnostics = c.diagnostics;
  r.verdict = Verdict::inconclusive;
  return false;
}

}  // namespace

TheoremReport pd_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("pd", RelativeComplex(delta), F, o);
  if (!manifold_precondition(r, delta, F)) return r;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(delta.dim() + 1), s, F);
    if (!th.found) return false;
    DualityPresentation p = build_B(F, delta, th.theta);
    const int n = p.fundamental_degree;
    PdVerdict vb = is_poincare_duality_algebra(p.b, n);
    PdVerdict va = is_poincare_duality_algebra(p.base, n);
    Table dims{"dims", {"j", "A", "J", "B", "socle_B"}, {}};
    for (int j = 0; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      dims.rows.push_back({j, I(p.base.dim(j)), I(p.j_dims[uj]), I(p.b_dims[uj]),
                           uj < vb.socle.size() ? I(vb.socle[uj]) : 0});
    }
    Table ranks{"pairing", {"i", "rank"}, {}};
    for (auto [i, rk] : vb.pairing_ranks) ranks.rows.push_back({i, I(rk)});
    Table routes{"routes", {"algebra", "pairing", "socle", "pd"},
                 {{0, va.pairing_route, va.socle_route, va.is_pd}, {1, vb.pairing_route, vb.socle_route, vb.is_pd}}};
    r.tables = {dims, ranks, routes};
    for (const auto& d : vb.diagnostics) r.diagnostics.push_back("B: " + d);
    if (!va.routes_agree || !vb.routes_agree) r.diagnostics.push_back("pairing and socle routes disagree");
    return vb.is_pd && vb.routes_agree && va.routes_agree;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport dehn_sommerville_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("dehn-sommerville", RelativeComplex(delta), F, o);
  if (!manifold_precondition(r, delta, F)) return r;
  FVector fv = f_h_vectors(RelativeComplex(delta));
  const bool h_ok = palindromic(fv.h);
  bool b_ok = false, pairing_ok = false;
  std::vector<std::int64_t> bd;
  run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(delta.dim() + 1), s, F);
    if (!th.found) return false;
    DualityPresentation p = build_B(F, delta, th.theta);
    bd.assign(p.b_dims.begin(), p.b_dims.end());
    b_ok = palindromic(bd);
    pairing_ok = is_poincare_duality_algebra(p.b, p.fundamental_degree).pairing_route;
    return b_ok && pairing_ok;
  });
  Table h{"h", {"i", "h_i"}, {}};
  for (std::size_t i = 0; i < fv.h.size(); ++i) h.rows.push_back({I(i), fv.h[i]});
  r.tables = {h, dims_table("B", std::vector<std::size_t>(bd.begin(), bd.end())),
              {"checks", {"h_palindromic", "b_palindromic", "pairing_full"}, {{h_ok, b_ok, pairing_ok}}}};
  if (!h_ok) r.diagnostics.push_back("h-vector is not palindromic");
  if (!b_ok) r.diagnostics.push_back("B dimensions are not palindromic");
  if (!pairing_ok) r.diagnostics.push_back("pairing is not perfect");
  r.verdict = h_ok && b_ok && pairing_ok ? Verdict::holds : Verdict::fails;
  if (h_ok && !(b_ok && pairing_ok)) r.verdict = generic_failure(F);
  return r;
}

TheoremReport cone_lemma_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("cone-lemma", RelativeComplex(delta), F, o);
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(std::max(delta.dim() + 1, 0)), s, F);
    if (!th.found) return false;
    Table t{"cone", {"vertex", "j", "star", "open_star_shifted", "pass"}, {}};
    bool pass = true;
    for (int v : face_vertices(delta.vertex_mask())) {
      ConeLemmaVerdict c = cone_lemma_check(F, delta, v, th.theta);
      for (std::size_t j = 0; j < c.star_dims.size(); ++j)
        t.rows.push_back({v, I(j), I(c.star_dims[j]), I(c.open_star_dims[j]), c.pass});
      pass &= c.pass;
      for (const auto& d : c.diagnostics) r.diagnostics.push_back(delta.ground_set()[static_cast<std::size_t>(v)] + ": " + d);
    }
    r.tables = {t};
    return pass;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport injectivity_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("injectivity", RelativeComplex(delta), F, o);
  if (!manifold_precondition(r, delta, F)) return r;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(delta.dim() + 1), s, F);
    if (!th.found) return false;
    DualityPresentation p = build_B(F, delta, th.theta);
    InjectivityVerdict into_a = open_star_injectivity(F, delta, p.base, th.theta);
    InjectivityVerdict into_b = open_star_injectivity(F, delta, p.b, th.theta);
    const bool ideal = j_annihilates_positive_degrees(p);
    IndexDegreeTable pou = reduced_partition_homology(F, RelativeComplex(delta), th.theta, delta.dim() + 1);
    Table j{"J", {"i", "J", "partition_kernel"}, {}};
    bool j_ok = true;
    for (int i = 0; i <= delta.dim(); ++i) {
      j.rows.push_back({i, I(p.j_dims[static_cast<std::size_t>(i)]), I(table_at(pou, -1, i))});
      j_ok &= p.j_dims[static_cast<std::size_t>(i)] == table_at(pou, -1, i);
    }
    r.tables = {{"injective", {"into_A", "into_B", "J_ideal", "J_matches"},
                 {{into_a.injective, into_b.injective, ideal, j_ok}}},
                j};
    for (const auto& d : into_a.diagnostics) r.diagnostics.push_back("A: " + d);
    for (const auto& d : into_b.diagnostics) r.diagnostics.push_back("B: " + d);
    return into_a.injective && into_b.injective && ideal && j_ok;
  });
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

LefschetzMode lefschetz_mode_from_name(const std::string& s) {
  if (s == "strong") return LefschetzMode::strong;
  if (s == "almost") return LefschetzMode::almost;
  if (s == "subdivision") return LefschetzMode::subdivision;
  throw InputError("unknown Lefschetz mode '" + s + "' (strong, almost, subdivision)");
}

std::string lefschetz_mode_name(LefschetzMode m) {
  switch (m) {
    case LefschetzMode::strong: return "strong";
    case LefschetzMode::almost: return "almost";
    case LefschetzMode::subdivision: return "subdivision";
  }
  return "strong";
}

namespace {

// One Lefschetz trial: power ℓ^{base − 2j} out of degree j for each j in
// [0, jmax]; appends rows (trial, j, power, source, target, rank, injective).
bool lefschetz_trial(const GradedQuotient& a, const LinearForm& l, int base, int jmax, int trial, Table& t) {
  bool pass = true;
  for (int j = 0; j <= jmax; ++j) {
    const int power = base - 2 * j;
    if (power < 0) continue;
    Matrix m = power_map(a, l, j, power);
    const std::size_t rk = rank(a.field(), m);
    const bool inj = rk == m.cols();
    t.rows.push_back({trial, j, power, I(m.cols()), I(m.rows()), I(rk), inj});
    pass &= inj;
  }
  return pass;
}

Table lefschetz_table() { return {"trials", {"trial", "j", "power", "source", "target", "rank", "injective"}, {}}; }

}  // namespace

TheoremReport lefschetz_report(const SimplicialComplex& delta, LefschetzMode mode, const PrimeField& F,
                               const RunOptions& o) {
  TheoremReport r = start("lefschetz-" + lefschetz_mode_name(mode), RelativeComplex(delta), F, o);
  const int d = delta.dim();
  if (mode == LefschetzMode::subdivision) {
    r.diagnostics.push_back("subdivision mode needs a subdivision structure");
    r.verdict = Verdict::inconclusive;
    return r;
  }
  if (mode == LefschetzMode::strong) {
    CmVerdict cm = is_algebraically_cm(RelativeComplex(delta), F, o.seed, 1);
    if (!cm.cm) {
      r.diagnostics.push_back("complex is not Cohen-Macaulay");
      r.verdict = Verdict::inconclusive;
      return r;
    }
  } else if (!manifold_precondition(r, delta, F)) {
    return r;
  }
  Table t = lefschetz_table();
  int trial = 0;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    const int k = trial++;
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(d + 1), s, F);
    if (!th.found) return false;
    const LinearForm l = random_form(delta.ground_size(), s, F);
    if (mode == LefschetzMode::strong) {
      GradedQuotient a(F, RelativeComplex(delta), th.theta, d + 2);
      return lefschetz_trial(a, l, d + 1, d / 2, k, t);
    }
    DualityPresentation p = build_B(F, delta, th.theta);
    return lefschetz_trial(p.b, l, d, d / 2, k, t);
  });
  r.tables.push_back(t);
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport lefschetz_subdivision_report(const SubdivisionStructure& s, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("lefschetz-subdivision", structure_hash(s), F, o);
  const int d = s.delta.dim();
  auto violations = induced_boundary_violations(s);
  Table t = lefschetz_table();
  int trial = 0;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t seed) {
    const int k = trial++;
    LsopSample th = sample_lsop(RelativeComplex(s.delta), static_cast<std::size_t>(d + 1), seed, F);
    if (!th.found) return false;
    GradedQuotient a(F, RelativeComplex(s.delta), th.theta, d + 2);
    const LinearForm w = random_form(s.delta.ground_size(), seed, F);
    // i < d/2, ω^{d−2i−1}
    return lefschetz_trial(a, w, d - 1, (d - 1) / 2, k, t);
  });
  r.tables.push_back(t);
  r.diagnostics = violations;
  if (!violations.empty()) {
    r.verdict = ok ? Verdict::holds : Verdict::inconclusive;
    r.diagnostics.push_back("induced-boundary hypothesis fails; a failure is not a counterexample");
    return r;
  }
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport kuhnel_report(const SimplicialComplex& delta, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("kuhnel", RelativeComplex(delta), F, o);
  if (!manifold_precondition(r, delta, F)) return r;
  const int d = delta.dim();
  const std::int64_t n = I(face_vertices(delta.vertex_mask()).size());
  BettiTable b = relative_cohomology_dims(RelativeComplex(delta), F);
  r.tables.push_back(betti_table(b));
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(delta), static_cast<std::size_t>(d + 1), s, F);
    if (!th.found) return false;
    GradedQuotient a(F, RelativeComplex(delta), th.theta, d + 2);
    const std::int64_t g = I(a.dim(1));
    Table t{"kuhnel", {"j", "lhs", "rhs", "dim_A", "macaulay"}, {}};
    bool pass = true;
    for (int j = 1; 2 * j <= d + 1; ++j) {
      const std::int64_t lhs = binomial(d + 1, j) * betti_at(b, j - 1) + binomial(d + 1, j - 1) * betti_at(b, d - j + 1);
      const std::int64_t rhs = binomial(n - d + j, j);
      const std::int64_t dim = I(a.dim(j));
      const std::int64_t mac = binomial(g + j - 1, j);
      t.rows.push_back({j, lhs, rhs, dim, mac});
      if (lhs > rhs) r.diagnostics.push_back("inequality fails at j=" + std::to_string(j));
      if (dim < lhs) r.diagnostics.push_back("dim A_" + std::to_string(j) + " is below the lower bound");
      if (dim > mac) r.diagnostics.push_back("dim A_" + std::to_string(j) + " exceeds the Macaulay bound");
      pass &= lhs <= rhs && dim >= lhs && dim <= mac;
    }
    r.tables.push_back(t);
    return pass;
  });
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  return r;
}

TheoremReport interior_report(const RelativeComplex& disk, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("interior", disk, F, o);
  const int d = disk.delta().dim();
  bool pre = true;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t s) {
    LsopSample th = sample_lsop(RelativeComplex(disk.delta()), static_cast<std::size_t>(d + 1), s, F);
    if (!th.found) return false;
    InteriorVerdict v = interior_partition_check(F, disk, th.theta);
    r.diagnostics = v.diagnostics;
    pre = v.precondition_ok;
    if (!pre) return false;
    Table k{"kernel", {"j", "dim"}, {}};
    for (auto [j, x] : v.kernel_dims) k.rows.push_back({j, I(x)});
    Table h{"interior_homology", {"i", "t", "dim"}, {}};
    for (auto [key, x] : v.homology)
      if (x) h.rows.push_back({key.first, key.second, I(x)});
    r.tables = {{"summary", {"interior_vertices", "exact", "injective"},
                 {{face_size(v.interior_vertices), v.exact, v.injective_below_top}}},
                k, h};
    return v.exact && v.injective_below_top;
  });
  if (!pre) {
    r.verdict = Verdict::fails;
    return r;
  }
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

TheoremReport subdivision_report(const SubdivisionStructure& s, const PrimeField& F, const RunOptions& o) {
  TheoremReport r = start("subdivision", structure_hash(s), F, o);
  const int d = s.delta.dim();
  bool pre = true;
  bool ok = run_trials(r, o.seed, [&](std::uint64_t seed) {
    LsopSample th = sample_lsop(RelativeComplex(s.delta), static_cast<std::size_t>(d + 1), seed, F);
    if (!th.found) return false;
    SubdivisionVerdict v = subdivision_partition_check(F, s, th.theta);
    r.diagnostics = v.diagnostics;
    pre = v.precondition_ok;
    Table k{"kernel", {"j", "top_cells", "interior_stars"}, {}};
    for (auto [j, x] : v.kernel_dims) k.rows.push_back({j, I(x), I(v.star_kernel_dims.at(j))});
    r.tables = {{"cells", {"cells", "top_cells"},
                 {{I(s.cells.size()), I(std::count_if(s.cells.begin(), s.cells.end(),
                                                      [&](const SubdivisionCell& c) { return c.dim == d; }))}}},
                k};
    return v.pass;
  });
  if (!pre) {
    r.verdict = ok ? Verdict::holds : Verdict::inconclusive;
    r.diagnostics.push_back("induced-boundary hypothesis fails; a failure is not a counterexample");
    return r;
  }
  r.verdict = ok ? Verdict::holds : generic_failure(F);
  return r;
}

RelativeComplex random_relative_complex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    const int n = uniform(3, 6);
    std::vector<std::string> ground;
    for (int v = 0; v < n; ++v) ground.push_back(std::to_string(v + 1));
    std::vector<Face> gens;
    const int count = uniform(1, 5);
    for (int k = 0; k < count; ++k) {
      const int size = uniform(1, std::min(4, n));
      std::vector<int> verts(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
      std::shuffle(verts.begin(), verts.end(), rng);
      Face f = 0;
      for (int i = 0; i < size; ++i) f |= vertex_face(verts[static_cast<std::size_t>(i)]);
      gens.push_back(f);
    }
    SimplicialComplex delta = SimplicialComplex::from_generators(ground, gens);
    // Γ: void, {∅}, or generated by a few random faces of Δ.
    SimplicialComplex gamma;
    const int mode = uniform(0, 3);
    if (mode == 0) {
      gamma = SimplicialComplex::void_complex(ground);
    } else if (mode == 1) {
      gamma = SimplicialComplex::from_generators(ground, {Face{0}});
    } else {
      const auto& faces = delta.faces();
      std::vector<Face> ggens;
      const int gcount = uniform(1, 3);
      for (int k = 0; k < gcount; ++k)
        ggens.push_back(faces[static_cast<std::size_t>(uniform(0, static_cast<int>(faces.size()) - 1))]);
      gamma = SimplicialComplex::from_generators(ground, ggens);
    }
    RelativeComplex psi(delta, gamma);
    if (!psi.is_void()) return psi;
  }
}

std::string report_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "theorem: " << r.theorem << "\n";
  out << "input: " << r.input << " (" << r.input_hash << ")\n";
  out << "prime: " << r.prime << "\n";
  out << "seeds:";
  for (auto s : r.seeds) out << " " << s;
  out << "\n";
  for (const auto& t : r.tables) {
    out << "[" << t.name << "]\n";
    std::vector<std::size_t> width;
    for (const auto& c : t.columns) width.push_back(std::max<std::size_t>(c.size(), 4));
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], std::to_string(row[c]).size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      out << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? " " : "") << std::setw(c < width.size() ? static_cast<int>(width[c]) : 0) << row[c];
      out << "\n";
    }
  }
  for (const auto& d : r.diagnostics) out << "note: " << d << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  return out.str();
}

}  // namespace srlab
