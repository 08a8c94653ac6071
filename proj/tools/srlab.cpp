// srlab: command-line front end for the sr-lab toolkit.
//
// Exit codes: 0 holds, 1 fails, 2 input error, 3 inconclusive.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "srlab/acceptance.hpp"
#include "srlab/io.hpp"

using namespace srlab;

namespace {

struct Config {
  std::string input;
  std::uint64_t prime = PrimeField::kDefaultModulus;
  std::uint64_t seed = 0;
  int trials = 3;
  int max_degree = -1;
  std::string format = "text";
  std::string mode = "strong";
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::fails: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 3;
}

const RelativeComplex& need_complex(const LoadedInput& in) {
  if (!in.complex) throw InputError("this command needs a complex, not a subdivision structure");
  return *in.complex;
}

const SimplicialComplex& need_absolute(const LoadedInput& in) {
  const RelativeComplex& psi = need_complex(in);
  if (!psi.is_absolute()) throw InputError("this command needs an absolute complex (no gamma_facets)");
  return psi.delta();
}

TheoremReport dispatch(const std::string& cmd, const Config& c, const LoadedInput& in, const PrimeField& F) {
  RunOptions o;
  o.input_name = c.input;
  o.seed = c.seed;
  o.trials = c.trials;
  o.max_degree = c.max_degree;
  if (cmd == "fvec") return fvec_report(need_complex(in), F, o);
  if (cmd == "cohomology") return cohomology_report(need_complex(in), F, o);
  if (cmd == "hilbert") return hilbert_report(need_complex(in), F, o);
  if (cmd == "lsop") return lsop_report(need_complex(in), F, o);
  if (cmd == "depth") return depth_report(need_complex(in), F, o);
  if (cmd == "cm") return cm_report(need_complex(in), F, o);
  if (cmd == "reisner") return reisner_report(need_complex(in), F, o);
  if (cmd == "partition-homology") return partition_homology_report(need_complex(in), F, o);
  if (cmd == "pou") return pou_report(need_complex(in), F, o);
  if (cmd == "total-complex") return total_complex_report(need_complex(in), F, o);
  if (cmd == "schenzel") return schenzel_report(need_complex(in), F, o);
  if (cmd == "pd") return pd_report(need_absolute(in), F, o);
  if (cmd == "dehn-sommerville") return dehn_sommerville_report(need_absolute(in), F, o);
  if (cmd == "injectivity") return injectivity_report(need_absolute(in), F, o);
  if (cmd == "kuhnel") return kuhnel_report(need_absolute(in), F, o);
  if (cmd == "cone-lemma") return cone_lemma_report(need_absolute(in), F, o);
  if (cmd == "lefschetz") {
    LefschetzMode m = lefschetz_mode_from_name(c.mode);
    if (m == LefschetzMode::subdivision) {
      if (!in.structure) throw InputError("subdivision mode needs a subdivision structure");
      return lefschetz_subdivision_report(*in.structure, F, o);
    }
    return lefschetz_report(need_absolute(in), m, F, o);
  }
  if (cmd == "subdiv-check") {
    if (in.structure) return subdivision_report(*in.structure, F, o);
    return interior_report(need_complex(in), F, o);
  }
  throw InputError("unknown command '" + cmd + "'");
}

int run_corpus(const Config& c) {
  AcceptanceOptions o;
  o.seed = c.seed;
  TheoremReport r;
  r.theorem = "corpus";
  r.input = "acceptance";
  r.prime = c.prime;
  r.seeds = {c.seed};
  r.trials = c.trials;
  Table t{"criteria", {"id", "pass", "millis", "budget_millis"}, {}};
  bool all = true;
  for (const auto& crit : acceptance_criteria()) {
    CriterionResult res = run_criterion(crit, o);
    all &= res.pass;
    if (c.format == "text") std::cout << criterion_line(res) << std::endl;
    t.rows.push_back({res.id, res.pass, static_cast<std::int64_t>(res.seconds * 1000),
                      static_cast<std::int64_t>(res.budget_seconds * 1000)});
    if (!res.pass) r.diagnostics.push_back("criterion " + std::to_string(res.id) + ": " + res.detail);
  }
  r.tables.push_back(t);
  r.verdict = all ? Verdict::holds : Verdict::fails;
  if (c.format == "json") std::cout << report_to_json(r);
  return exit_code(r.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sr-lab: face rings, partition complexes and their theorems, checked by exact rank computations"};
  app.require_subcommand(1);
  Config c;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"fvec", "f- and h-vectors"},
      {"cohomology", "reduced relative cohomology dimensions"},
      {"hilbert", "Hilbert function of the face module"},
      {"lsop", "sample a linear system of parameters"},
      {"depth", "depth via Koszul homology"},
      {"cm", "algebraic Cohen-Macaulay test"},
      {"reisner", "topological vs algebraic Cohen-Macaulay"},
      {"partition-homology", "homology of the partition complex"},
      {"pou", "partition of unity table"},
      {"total-complex", "homology of the partition-Koszul total complex"},
      {"schenzel", "quotient dimensions vs the Buchsbaum formula"},
      {"pd", "Poincare duality of B"},
      {"dehn-sommerville", "h, B and pairing symmetry"},
      {"injectivity", "open star injectivity into A and B"},
      {"lefschetz", "Lefschetz instance check (--mode strong|almost|subdivision)"},
      {"kuhnel", "vertex-count inequality for manifolds"},
      {"subdiv-check", "subdivision structure or interior partition check"},
      {"cone-lemma", "multiplication by a cone vertex"},
      {"corpus", "run the acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "corpus") sub->add_option("--input", c.input, "builtin:<name> or a JSON file")->required();
    sub->add_option("--prime", c.prime, "field characteristic")->capture_default_str();
    sub->add_option("--seed", c.seed, "base seed")->capture_default_str();
    sub->add_option("--trials", c.trials, "generic trials")->capture_default_str()->check(CLI::Range(1, 100));
    sub->add_option("--max-degree", c.max_degree, "degree window (default dim+2)");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    if (name == "lefschetz")
      sub->add_option("--mode", c.mode, "strong, almost or subdivision")
          ->check(CLI::IsMember({"strong", "almost", "subdivision"}))
          ->capture_default_str();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (c.prime >= (std::uint64_t{1} << 32) || !is_prime(c.prime)) {
    std::cerr << "error: --prime " << c.prime << " is not a prime below 2^32\n";
    return 2;
  }
  try {
    if (cmd == "corpus") return run_corpus(c);
    PrimeField F(c.prime);
    LoadedInput in = load_input(c.input);
    TheoremReport r = dispatch(cmd, c, in, F);
    std::cout << (c.format == "json" ? report_to_json(r) : report_text(r));
    return exit_code(r.verdict);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
