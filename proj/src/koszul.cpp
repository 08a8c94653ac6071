#include "srlab/koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace srlab {

std::vector<std::uint32_t> wedge_subsets(std::size_t n, int size) {
  std::vector<std::uint32_t> out;
  if (size < 0 || static_cast<std::size_t>(size) > n) return out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
    if (std::popcount(s) == size) out.push_back(s);
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return out;
}

KoszulComplex::KoszulComplex(const PrimeField& F, RelativeComplex psi, LinearFormSequence theta,
                             int max_alpha_degree)
    : F_(F), theta_(std::move(theta)), max_t_(max_alpha_degree),
      module_(std::move(psi), std::max(max_alpha_degree + 1, 0)) {
  const std::size_t n = theta_.size();
  if (n > 20) throw InputError("Koszul complex on more than 20 forms");
  for (const auto& f : theta_.forms)
    if (f.size() != module_.complex().ground_size())
      throw InputError("linear form length differs from the vertex count");
  subsets_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    subsets_[i] = wedge_subsets(n, static_cast<int>(i));
    for (std::size_t k = 0; k < subsets_[i].size(); ++k) subset_index_[subsets_[i][k]] = static_cast<std::uint32_t>(k);
  }
}

const std::vector<std::uint32_t>& KoszulComplex::subsets(int i) const {
  static const std::vector<std::uint32_t> kNone;
  if (i < 0 || i > static_cast<int>(length())) return kNone;
  return subsets_[static_cast<std::size_t>(i)];
}

std::size_t KoszulComplex::dim(int i, int t) const {
  if (t < 0 || i < 0 || i > static_cast<int>(length())) return 0;
  return subsets(i).size() * module_.dim(t);
}

SparseMatrix KoszulComplex::differential(int i, int t) const {
  SparseMatrix d(dim(i + 1, t + 1), dim(i, t));
  if (d.rows() == 0 || d.cols() == 0) return d;
  const MonomialBasis& src = module_.basis(t);
  const MonomialBasis& dst = module_.basis(t + 1);
  std::vector<SparseMatrix> mult;
  for (const auto& form : theta_.forms) mult.push_back(multiplication_sparse(F_, src, dst, form));
  const std::size_t ms = src.size(), mt = dst.size();
  const auto& from = subsets(i);
  for (std::size_t si = 0; si < from.size(); ++si) {
    const std::uint32_t S = from[si];
    for (std::size_t k = 0; k < length(); ++k) {
      const std::uint32_t bit = std::uint32_t{1} << k;
      if (S & bit) continue;
      const bool negative = std::popcount(S & (bit - 1)) % 2 == 1;
      const std::size_t ti = subset_index_.at(S | bit);
      const SparseMatrix& m = mult[k];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r))
          d.add(ti * mt + r, si * ms + e.col, negative ? F_.neg(e.val) : e.val);
    }
  }
  d.compress(F_);
  return d;
}

std::size_t KoszulComplex::differential_rank(int i, int t) const {
  if (t < 0 || t > max_t_) {
    if (t < 0) return 0;
    throw std::out_of_range("Koszul degree beyond the built window");
  }
  return rank(F_, differential(i, t));
}

std::size_t KoszulComplex::homology(int i, int t) const {
  if (t < 0 || i < 0 || i > static_cast<int>(length())) return 0;
  return dim(i, t) - differential_rank(i, t) - differential_rank(i - 1, t - 1);
}

KoszulTable koszul_homology_dims(const PrimeField& F, const RelativeComplex& psi,
                                 const LinearFormSequence& theta, KoszulGrading mode, int cap) {
  if (cap < 0) cap = std::max(psi.dim(), -1) + 3;
  const int n = static_cast<int>(theta.size());
  KoszulComplex k(F, psi, theta, cap);
  std::map<std::pair<int, int>, std::size_t> ranks;
  auto rk = [&](int i, int t) -> std::size_t {
    if (t < 0 || i < 0 || i >= n) return 0;
    auto key = std::make_pair(i, t);
    auto it = ranks.find(key);
    if (it != ranks.end()) return it->second;
    return ranks[key] = k.differential_rank(i, t);
  };
  KoszulTable out;
  for (int i = 0; i <= n; ++i)
    for (int deg = 0; deg <= cap; ++deg) {
      const int t = mode == KoszulGrading::natural ? deg : deg - n + i;
      std::size_t h = 0;
      if (t >= 0 && t <= cap) h = k.dim(i, t) - rk(i, t) - rk(i - 1, t - 1);
      out[{i, deg}] = h;
    }
  return out;
}

std::size_t depth(const PrimeField& F, const RelativeComplex& psi, const LinearFormSequence& theta) {
  if (psi.is_void()) throw std::logic_error("depth of the zero module is undefined");
  const int top = std::max(psi.dim(), -1) + 1;
  const int n = static_cast<int>(theta.size());
  KoszulComplex k(F, psi, theta, top);
  std::vector<std::size_t> prev(static_cast<std::size_t>(top + 2), 0);  // ranks of ∂^{i-1}_t
  for (int i = 0; i <= n; ++i) {
    std::vector<std::size_t> cur(static_cast<std::size_t>(top + 2), 0);
    bool nonzero = false;
    for (int t = 0; t <= top; ++t) {
      cur[static_cast<std::size_t>(t)] = i < n ? k.differential_rank(i, t) : 0;
      const std::size_t in = t > 0 ? prev[static_cast<std::size_t>(t - 1)] : 0;
      if (k.dim(i, t) - cur[static_cast<std::size_t>(t)] - in != 0) nonzero = true;
    }
    if (nonzero) return static_cast<std::size_t>(i);
    prev = std::move(cur);
  }
  throw std::logic_error("all Koszul homology vanishes; ⟨Θ⟩M = M is impossible here");
}

CmVerdict is_algebraically_cm(const RelativeComplex& psi, const PrimeField& F, std::uint64_t seed, int trials,
                              std::size_t lsop_attempts) {
  CmVerdict v;
  v.expected = psi.max_face_size();
  if (psi.is_void()) {
    // The zero module: treated as Cohen–Macaulay of depth 0.
    v.cm = true;
    return v;
  }
  for (int k = 0; k < std::max(trials, 1); ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    LsopSample sample = sample_lsop(psi, v.expected, s, F, lsop_attempts);
    std::size_t d;
    if (sample.found) {
      d = depth(F, psi, sample.theta);
      v.methods.push_back("lsop");
    } else {
      LinearFormSequence vars;
      vars.seed = s;
      for (int x : face_vertices(psi.delta().vertex_mask()))
        vars.forms.push_back(vertex_form(psi.ground_size(), x));
      d = depth(F, psi, vars);
      v.methods.push_back("all-variables");
    }
    v.seeds.push_back(s);
    v.trial_depths.push_back(d);
  }
  v.depth = *std::max_element(v.trial_depths.begin(), v.trial_depths.end());
  v.seeds_agree = std::all_of(v.trial_depths.begin(), v.trial_depths.end(),
                              [&](std::size_t d) { return d == v.depth; });
  v.cm = v.depth == v.expected;
  return v;
}

}  // namespace srlab
