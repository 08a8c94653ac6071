#include "srlab/facering.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace srlab {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Face Monomial::support() const {
  Face f = 0;
  for (auto v : vars) f |= vertex_face(v);
  return f;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : m.vars) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h ^ m.vars.size();
}

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.vars.resize(a.vars.size() + b.vars.size());
  std::merge(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), out.vars.begin());
  return out;
}

Monomial times_vertex(const Monomial& m, int v) {
  Monomial out = m;
  out.vars.insert(std::upper_bound(out.vars.begin(), out.vars.end(), static_cast<std::uint8_t>(v)),
                  static_cast<std::uint8_t>(v));
  return out;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& ground) {
  if (m.vars.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.vars.size();) {
    std::size_t j = i;
    while (j < m.vars.size() && m.vars[j] == m.vars[i]) ++j;
    if (!s.empty()) s += "*";
    s += "x" + ground.at(m.vars[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

MonomialBasis::MonomialBasis(const RelativeComplex& psi, int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  for (Face f : psi.faces()) {
    const int s = face_size(f);
    if (s > degree) break;  // faces come ordered by size
    if (s == 0) {
      if (degree == 0) monos_.push_back({});
      continue;
    }
    const std::vector<int> verts = face_vertices(f);
    std::vector<std::uint8_t> base(verts.begin(), verts.end());
    // Distribute the remaining degree among the vertices of f.
    std::vector<int> extra(verts.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t at, int left) {
      if (at + 1 == verts.size()) {
        extra[at] = left;
        Monomial m;
        for (std::size_t k = 0; k < verts.size(); ++k)
          m.vars.insert(m.vars.end(), static_cast<std::size_t>(1 + extra[k]), base[k]);
        monos_.push_back(std::move(m));
        return;
      }
      for (int e = 0; e <= left; ++e) {
        extra[at] = e;
        rec(at + 1, left - e);
      }
    };
    rec(0, degree - s);
  }
  std::sort(monos_.begin(), monos_.end());
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<std::uint32_t>(i));
}

std::int64_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

MonomialBasis monomial_basis(const RelativeComplex& psi, int j) { return MonomialBasis(psi, j); }

FaceModule::FaceModule(RelativeComplex psi, int max_degree) : psi_(std::move(psi)) {
  extend_to(max_degree);
}

const MonomialBasis& FaceModule::basis(int j) const {
  if (j < 0 || j > max_degree())
    throw std::out_of_range("face module degree " + std::to_string(j) + " not built");
  return bases_[static_cast<std::size_t>(j)];
}

void FaceModule::extend_to(int j) {
  while (max_degree() < j) bases_.emplace_back(psi_, max_degree() + 1);
}

ResidueStream::ResidueStream(std::uint64_t seed, const PrimeField& F)
    : rng_(seed), p_(F.modulus()), limit_(std::numeric_limits<std::uint64_t>::max() / p_ * p_) {}

Residue ResidueStream::next() {
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit_);
  return static_cast<Residue>(x % p_);
}

LinearForm ResidueStream::next_form(std::size_t n_vertices) {
  LinearForm f(n_vertices);
  for (auto& c : f) c = next();
  return f;
}

LinearFormSequence random_linear_forms(std::size_t n_vertices, std::size_t count, std::uint64_t seed,
                                       const PrimeField& F) {
  ResidueStream stream(seed, F);
  LinearFormSequence out;
  out.seed = seed;
  for (std::size_t i = 0; i < count; ++i) out.forms.push_back(stream.next_form(n_vertices));
  return out;
}

LinearFormSequence random_linear_forms(const SimplicialComplex& delta, std::size_t count,
                                       std::uint64_t seed, const PrimeField& F) {
  return random_linear_forms(delta.ground_size(), count, seed, F);
}

LinearForm vertex_form(std::size_t n_vertices, int v) {
  LinearForm f(n_vertices, 0);
  f.at(static_cast<std::size_t>(v)) = 1;
  return f;
}

bool restricts_to_bases(const RelativeComplex& psi, const LinearFormSequence& theta,
                        const PrimeField& F) {
  for (Face sigma : psi.maximal_faces()) {
    const auto verts = face_vertices(sigma);
    if (theta.size() < verts.size()) return false;
    Matrix m(theta.size(), verts.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
      for (std::size_t k = 0; k < verts.size(); ++k) m(i, k) = theta[i][static_cast<std::size_t>(verts[k])];
    if (rank(F, m) != verts.size()) return false;
  }
  return true;
}

LsopSample sample_lsop(const RelativeComplex& psi, std::size_t count, std::uint64_t seed,
                       const PrimeField& F, std::size_t max_attempts) {
  ResidueStream stream(seed, F);
  LsopSample out;
  out.theta.seed = seed;
  for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
    out.theta.forms.clear();
    for (std::size_t i = 0; i < count; ++i) out.theta.forms.push_back(stream.next_form(psi.ground_size()));
    if (restricts_to_bases(psi, out.theta, F)) {
      out.found = true;
      return out;
    }
  }
  out.attempts = max_attempts;
  return out;
}

namespace {

// θ·m for every monomial m of src, as sparse vectors over dst.
std::vector<SparseVector> images(const PrimeField& F, const MonomialBasis& src, const MonomialBasis& dst,
                                 const LinearForm& form) {
  std::vector<SparseVector> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t v = 0; v < form.size(); ++v) {
      if (form[v] == 0) continue;
      std::int64_t k = dst.index_of(times_vertex(src[i], static_cast<int>(v)));
      if (k >= 0) out[i].push_back({static_cast<std::uint32_t>(k), form[v]});
    }
    std::sort(out[i].begin(), out[i].end(), [](auto& a, auto& b) { return a.col < b.col; });
  }
  (void)F;
  return out;
}

}  // namespace

SparseMatrix multiplication_sparse(const PrimeField& F, const MonomialBasis& src, const MonomialBasis& dst,
                                   const LinearForm& form) {
  SparseMatrix m(dst.size(), src.size());
  auto cols = images(F, src, dst, form);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& e : cols[c]) m.add(e.col, c, e.val);
  m.compress(F);
  return m;
}

Matrix multiplication_matrix(const RelativeComplex& psi, const LinearForm& form, int j, const PrimeField& F) {
  return multiplication_sparse(F, MonomialBasis(psi, j), MonomialBasis(psi, j + 1), form).to_dense();
}

std::vector<std::int64_t> hilbert_series_coeffs(const RelativeComplex& psi, int up_to) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(up_to + 1), 0);
  if (psi.is_void()) return out;
  const FVector fv = f_h_vectors(psi);
  const int n = fv.dim + 1;  // common denominator (1-t)^n
  // numerator Σ_i f_{i-1} t^i (1-t)^{n-i}
  std::vector<std::int64_t> num(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n - i; ++k)
      num[static_cast<std::size_t>(i + k)] += fv.f_at(i - 1) * binomial(n - i, k) * (k % 2 ? -1 : 1);
  for (int j = 0; j <= up_to; ++j) {
    std::int64_t c = 0;
    for (int i = 0; i <= std::min(j, n); ++i) {
      const std::int64_t series = n == 0 ? (j == i ? 1 : 0) : binomial(n - 1 + j - i, j - i);
      c += num[static_cast<std::size_t>(i)] * series;
    }
    out[static_cast<std::size_t>(j)] = c;
  }
  return out;
}

std::vector<std::size_t> socle_dims(const PrimeField& F, const GradedAlgebraData& a) {
  std::vector<std::size_t> out(a.dims.size(), 0);
  for (std::size_t i = 0; i < a.dims.size(); ++i) {
    const bool top = i + 1 >= a.dims.size() || a.dims[i + 1] == 0 || i >= a.gen_mult.size();
    if (top || a.gen_mult[i].empty()) {
      out[i] = a.dims[i];
      continue;
    }
    Matrix stacked = vstack(a.gen_mult[i], a.dims[i]);
    out[i] = a.dims[i] - rank(F, stacked);
  }
  return out;
}

GradedQuotient::GradedQuotient(const PrimeField& F, RelativeComplex psi, LinearFormSequence theta, int cap,
                               const ExtraRelations& extra)
    : F_(F), theta_(std::move(theta)), module_(std::move(psi), 0) {
  const RelativeComplex& cx = module_.complex();
  for (const auto& f : theta_.forms)
    if (f.size() != cx.ground_size()) throw InputError("linear form length differs from the vertex count");
  cap_ = cap < 0 ? std::max(cx.dim(), -1) + 3 : cap;
  int gen_degree = 0;
  for (Face f : cx.minimal_faces()) gen_degree = std::max(gen_degree, face_size(f));
  for (int j = 0; j <= cap_; ++j) {
    module_.extend_to(j);
    const MonomialBasis& basis = module_.basis(j);
    RowEchelon ech(F_, basis.size());
    if (j > 0)
      for (const auto& form : theta_.forms)
        for (const auto& v : images(F_, module_.basis(j - 1), basis, form)) ech.insert(v);
    if (auto it = extra.find(j); it != extra.end())
      for (const auto& v : it->second) ech.insert(v);
    std::vector<std::uint32_t> reps;
    std::vector<std::int64_t> coord(basis.size(), -1);
    for (auto c : ech.free_columns()) {
      coord[c] = static_cast<std::int64_t>(reps.size());
      reps.push_back(static_cast<std::uint32_t>(c));
    }
    dims_.push_back(reps.size());
    reps_.push_back(std::move(reps));
    coord_of_monomial_.push_back(std::move(coord));
    relations_.push_back(std::move(ech));
    if (dims_.back() == 0 && j >= gen_degree) {
      vanishing_ = j;
      break;
    }
  }
}

std::size_t GradedQuotient::dim(int j) const {
  if (j < 0) return 0;
  if (j <= top_computed()) return dims_[static_cast<std::size_t>(j)];
  if (finite()) return 0;
  throw std::out_of_range("quotient degree " + std::to_string(j) + " beyond the cap");
}

const std::vector<std::uint32_t>& GradedQuotient::representatives(int j) const {
  static const std::vector<std::uint32_t> kNone;
  if (j < 0 || (j > top_computed() && finite())) return kNone;
  if (j > top_computed()) throw std::out_of_range("quotient degree beyond the cap");
  return reps_[static_cast<std::size_t>(j)];
}

const Monomial& GradedQuotient::representative(int j, std::size_t k) const {
  return module_.basis(j)[representatives(j).at(k)];
}

std::size_t GradedQuotient::relation_rank(int j) const {
  return relations_.at(static_cast<std::size_t>(j)).rank();
}

std::vector<Residue> GradedQuotient::reduce(int j, const SparseVector& v) const {
  if (dim(j) == 0) return {};
  const auto& reps = reps_[static_cast<std::size_t>(j)];
  auto dense = relations_[static_cast<std::size_t>(j)].reduce_dense(v);
  std::vector<Residue> out(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) out[k] = dense[reps[k]];
  return out;
}

std::vector<Residue> GradedQuotient::reduce_monomial(const Monomial& m) const {
  const int j = m.degree();
  const std::size_t n = dim(j);
  if (n == 0) return {};
  std::vector<Residue> out(n, 0);
  std::int64_t idx = module_.basis(j).index_of(m);
  if (idx < 0) return out;
  std::int64_t c = coord_of_monomial_[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx)];
  if (c >= 0) {
    out[static_cast<std::size_t>(c)] = 1;
    return out;
  }
  return reduce(j, {{static_cast<std::uint32_t>(idx), 1}});
}

Matrix GradedQuotient::multiplication(const LinearForm& form, int j) const {
  const std::size_t src = dim(j), dst = dim(j + 1);
  Matrix m(dst, src);
  if (src == 0 || dst == 0) return m;
  const MonomialBasis& target = module_.basis(j + 1);
  for (std::size_t k = 0; k < src; ++k) {
    const Monomial& mono = representative(j, k);
    SparseVector v;
    for (std::size_t x = 0; x < form.size(); ++x) {
      if (form[x] == 0) continue;
      std::int64_t idx = target.index_of(times_vertex(mono, static_cast<int>(x)));
      if (idx >= 0) v.push_back({static_cast<std::uint32_t>(idx), form[x]});
    }
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.col < b.col; });
    auto col = reduce(j + 1, v);
    for (std::size_t r = 0; r < dst; ++r) m(r, k) = col[r];
  }
  return m;
}

Matrix GradedQuotient::multiplication_by_vertex(int v, int j) const {
  return multiplication(vertex_form(complex().ground_size(), v), j);
}

SparseVector GradedQuotient::lift(int j, const std::vector<Residue>& coords) const {
  const auto& reps = representatives(j);
  if (coords.size() != reps.size()) throw std::invalid_argument("lift: coordinate length mismatch");
  SparseVector out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (coords[k] != 0) out.push_back({reps[k], coords[k]});
  return out;
}

GradedAlgebraData GradedQuotient::algebra_data() const {
  GradedAlgebraData a;
  a.dims = dims_;
  const auto verts = face_vertices(complex().delta().vertex_mask());
  for (std::size_t i = 0; i + 1 < dims_.size(); ++i) {
    std::vector<Matrix> maps;
    for (int v : verts) maps.push_back(multiplication_by_vertex(v, static_cast<int>(i)));
    a.gen_mult.push_back(std::move(maps));
  }
  return a;
}

Matrix induced_map(const GradedQuotient& src, const GradedQuotient& dst, int j) {
  Matrix m(dst.dim(j), src.dim(j));
  if (m.rows() == 0 || m.cols() == 0) return m;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    auto col = dst.reduce_monomial(src.representative(j, k));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, k) = col[r];
  }
  return m;
}

Matrix vertex_multiplication_map(const GradedQuotient& src, const GradedQuotient& dst, int v, int j) {
  Matrix m(dst.dim(j + 1), src.dim(j));
  if (m.rows() == 0 || m.cols() == 0) return m;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    auto col = dst.reduce_monomial(times_vertex(src.representative(j, k), v));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, k) = col[r];
  }
  return m;
}

Matrix power_map(const GradedQuotient& a, const LinearForm& form, int j, int power) {
  Matrix acc = Matrix::identity(a.dim(j));
  for (int k = 0; k < power; ++k) acc = multiply(a.field(), a.multiplication(form, j + k), acc);
  return acc;
}

LsopVerdict is_lsop(const RelativeComplex& psi, const LinearFormSequence& theta, const PrimeField& F) {
  LsopVerdict v;
  v.expected_length = psi.max_face_size();
  GradedQuotient q(F, psi, theta);
  v.vanishing_degree = q.vanishing_degree();
  v.is_lsop = theta.size() == v.expected_length && q.finite();
  return v;
}

}  // namespace srlab
