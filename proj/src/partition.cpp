#include "srlab/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace srlab {

PartitionComplex::PartitionComplex(RelativeComplex base, std::vector<std::vector<Face>> cover, int max_degree)
    : base_(base, max_degree), cover_(std::move(cover)) {
  for (std::size_t i = 0; i < cover_.size(); ++i) {
    std::vector<FaceModule> cols;
    for (std::size_t k = 0; k < cover_[i].size(); ++k) {
      const Face tau = cover_[i][k];
      if (face_size(tau) != static_cast<int>(i) + 1) throw std::invalid_argument("cover face in the wrong index");
      position_[tau] = k;
      cols.emplace_back(relative_star(base, tau), max_degree);
    }
    columns_.push_back(std::move(cols));
  }
}

PartitionComplex PartitionComplex::full(const RelativeComplex& psi, int max_degree) {
  std::vector<std::vector<Face>> cover(static_cast<std::size_t>(std::max(psi.delta().dim() + 1, 0)));
  for (Face f : psi.delta().faces())
    if (f) cover[static_cast<std::size_t>(face_size(f) - 1)].push_back(f);
  return PartitionComplex(psi, std::move(cover), max_degree);
}

PartitionComplex PartitionComplex::interior(const SimplicialComplex& delta, Face interior, int max_degree) {
  std::vector<std::vector<Face>> cover;
  for (Face f : delta.faces()) {
    if (!f || (f & ~interior)) continue;
    const std::size_t i = static_cast<std::size_t>(face_size(f) - 1);
    if (cover.size() <= i) cover.resize(i + 1);
    cover[i].push_back(f);
  }
  return PartitionComplex(RelativeComplex(delta), std::move(cover), max_degree);
}

const FaceModule& PartitionComplex::column(int i, std::size_t k) const {
  if (i < 0) return base_;
  return columns_.at(static_cast<std::size_t>(i)).at(k);
}

std::int64_t PartitionComplex::column_of(Face tau) const {
  auto it = position_.find(tau);
  return it == position_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::size_t PartitionComplex::offset(int i, std::size_t k, int t) const {
  std::size_t off = 0;
  for (std::size_t c = 0; c < k; ++c) off += column(i, c).dim(t);
  return off;
}

namespace {

std::size_t columns_at(const PartitionComplex& pc, int i) {
  return i < 0 ? 1 : pc.cover()[static_cast<std::size_t>(i)].size();
}

Face face_at(const PartitionComplex& pc, int i, std::size_t k) {
  return i < 0 ? Face{0} : pc.cover()[static_cast<std::size_t>(i)][k];
}

// Offsets of every column in index i for degree t, plus the total.
std::vector<std::size_t> offsets(const PartitionComplex& pc, int i, int t) {
  std::vector<std::size_t> off{0};
  for (std::size_t k = 0; k < columns_at(pc, i); ++k) off.push_back(off.back() + pc.column(i, k).dim(t));
  return off;
}

Residue cech_sign(const PrimeField& F, Face tau, int v) { return position_in(tau, v) % 2 ? F.neg(1) : 1; }

SparseMatrix restrict_rows_cols(const PrimeField& F, const SparseMatrix& m, const std::vector<std::int64_t>& row_map,
                                std::size_t nrows, const std::vector<std::int64_t>& col_map, std::size_t ncols) {
  SparseMatrix out(nrows, ncols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row_map[r] < 0) continue;
    for (const auto& e : m.row(r))
      if (col_map[e.col] >= 0) out.add(static_cast<std::size_t>(row_map[r]), static_cast<std::size_t>(col_map[e.col]), e.val);
  }
  out.compress(F);
  return out;
}

}  // namespace

ChainComplex PartitionComplex::slice(const PrimeField& F, int t) const {
  ChainComplex cx;
  cx.lo = -1;
  const int top = top_index();
  std::vector<std::vector<std::size_t>> off;
  for (int i = -1; i <= top; ++i) {
    off.push_back(offsets(*this, i, t));
    cx.dims.push_back(off.back().back());
  }
  const int n = static_cast<int>(base_.complex().ground_size());
  for (int i = -1; i < top; ++i) {
    SparseMatrix d(cx.dims[static_cast<std::size_t>(i + 2)], cx.dims[static_cast<std::size_t>(i + 1)]);
    for (std::size_t k = 0; k < columns_at(*this, i); ++k) {
      const Face tau = face_at(*this, i, k);
      const MonomialBasis& src = column(i, k).basis(t);
      const std::size_t so = off[static_cast<std::size_t>(i + 1)][k];
      for (int v = 0; v < n; ++v) {
        if (tau & vertex_face(v)) continue;
        const std::int64_t k2 = column_of(tau | vertex_face(v));
        if (k2 < 0) continue;
        const MonomialBasis& dst = column(i + 1, static_cast<std::size_t>(k2)).basis(t);
        const std::size_t to = off[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(k2)];
        const Residue s = cech_sign(F, tau, v);
        for (std::size_t a = 0; a < src.size(); ++a) {
          const std::int64_t b = dst.index_of(src[a]);
          if (b >= 0) d.add(to + static_cast<std::size_t>(b), so + a, s);
        }
      }
    }
    d.compress(F);
    cx.differentials.push_back(std::move(d));
  }
  return cx;
}

IndexDegreeTable partition_homology_dims(const PrimeField& F, const RelativeComplex& psi, int max_degree) {
  PartitionComplex pc = PartitionComplex::full(psi, max_degree);
  IndexDegreeTable out;
  for (int t = 0; t <= max_degree; ++t) {
    auto h = chain_homology_dims(F, pc.slice(F, t), false);
    for (int i = -1; i <= pc.top_index() + 1; ++i) out[{i, t}] = h.count(i) ? h[i] : 0;
  }
  return out;
}

ChainComplex fine_degree_piece(const PrimeField& F, const PartitionComplex& pc, const Monomial& alpha) {
  const int t = alpha.degree();
  ChainComplex full = pc.slice(F, t);
  ChainComplex out;
  out.lo = -1;
  std::vector<std::vector<std::int64_t>> maps;
  for (int i = -1; i <= pc.top_index(); ++i) {
    const std::size_t total = full.dims[static_cast<std::size_t>(i + 1)];
    std::vector<std::int64_t> map(total, -1);
    std::size_t count = 0, off = 0;
    for (std::size_t k = 0; k < columns_at(pc, i); ++k) {
      const MonomialBasis& b = pc.column(i, k).basis(t);
      const std::int64_t idx = b.index_of(alpha);
      if (idx >= 0) map[off + static_cast<std::size_t>(idx)] = static_cast<std::int64_t>(count++);
      off += b.size();
    }
    out.dims.push_back(count);
    maps.push_back(std::move(map));
  }
  for (std::size_t k = 0; k < full.differentials.size(); ++k)
    out.differentials.push_back(restrict_rows_cols(F, full.differentials[k], maps[k + 1], out.dims[k + 1], maps[k],
                                                   out.dims[k]));
  return out;
}

IndexDegreeTable reduced_partition_homology(const PrimeField& F, const RelativeComplex& psi,
                                            const LinearFormSequence& theta, int max_degree) {
  const int top = std::max(psi.delta().dim(), -1);
  GradedQuotient base(F, psi, theta, max_degree);
  std::vector<std::vector<Face>> cover(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<GradedQuotient>> cols(static_cast<std::size_t>(top + 1));
  std::map<Face, std::size_t> pos;
  for (Face f : psi.delta().faces()) {
    if (!f) continue;
    const std::size_t i = static_cast<std::size_t>(face_size(f) - 1);
    pos[f] = cover[i].size();
    cover[i].push_back(f);
    cols[i].emplace_back(F, relative_star(psi, f), theta, max_degree);
  }
  auto quotient = [&](int i, std::size_t k) -> const GradedQuotient& {
    return i < 0 ? base : cols[static_cast<std::size_t>(i)][k];
  };
  auto count = [&](int i) { return i < 0 ? std::size_t{1} : cover[static_cast<std::size_t>(i)].size(); };
  const int n = static_cast<int>(psi.ground_size());
  IndexDegreeTable out;
  for (int j = 0; j <= max_degree; ++j) {
    ChainComplex cx;
    cx.lo = -1;
    std::vector<std::vector<std::size_t>> off;
    for (int i = -1; i <= top; ++i) {
      std::vector<std::size_t> o{0};
      for (std::size_t k = 0; k < count(i); ++k) o.push_back(o.back() + quotient(i, k).dim(j));
      cx.dims.push_back(o.back());
      off.push_back(std::move(o));
    }
    for (int i = -1; i < top; ++i) {
      SparseMatrix d(cx.dims[static_cast<std::size_t>(i + 2)], cx.dims[static_cast<std::size_t>(i + 1)]);
      for (std::size_t k = 0; k < count(i); ++k) {
        const Face tau = i < 0 ? Face{0} : cover[static_cast<std::size_t>(i)][k];
        for (int v = 0; v < n; ++v) {
          if (tau & vertex_face(v)) continue;
          auto it = pos.find(tau | vertex_face(v));
          if (it == pos.end()) continue;
          Matrix m = induced_map(quotient(i, k), quotient(i + 1, it->second), j);
          const bool negative = position_in(tau, v) % 2 == 1;
          const std::size_t ro = off[static_cast<std::size_t>(i + 2)][it->second];
          const std::size_t co = off[static_cast<std::size_t>(i + 1)][k];
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
              if (m(r, c)) d.add(ro + r, co + c, negative ? F.neg(m(r, c)) : m(r, c));
        }
      }
      d.compress(F);
      cx.differentials.push_back(std::move(d));
    }
    auto h = chain_homology_dims(F, cx, false);
    for (int i = -1; i <= top + 1; ++i) out[{i, j}] = h.count(i) ? h[i] : 0;
  }
  return out;
}

ChainComplex total_complex_slice(const PrimeField& F, const PartitionComplex& pc, const LinearFormSequence& theta,
                                 int j) {
  const int n = static_cast<int>(theta.size());
  const int top = pc.top_index();
  const int nv = static_cast<int>(pc.base().complex().ground_size());
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> subset_pos(static_cast<std::size_t>(n + 1));
  for (int s = 0; s <= n; ++s) {
    subsets.push_back(wedge_subsets(static_cast<std::size_t>(n), s));
    for (std::size_t q = 0; q < subsets.back().size(); ++q) subset_pos[static_cast<std::size_t>(s)][subsets.back()[q]] = q;
  }
  struct Block {
    int i;
    std::uint32_t S;
    std::size_t col;
    int t;
    std::size_t offset;
  };
  auto key = [](int i, std::uint32_t S, std::size_t col) {
    return (static_cast<std::uint64_t>(i + 1) << 56) | (static_cast<std::uint64_t>(S) << 32) | col;
  };
  const int lo = -1, hi = top + n;
  std::vector<std::vector<Block>> blocks(static_cast<std::size_t>(hi - lo + 1));
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> where(blocks.size());
  ChainComplex cx;
  cx.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    std::size_t off = 0;
    auto& bk = blocks[static_cast<std::size_t>(k - lo)];
    for (int i = -1; i <= top; ++i) {
      const int s = k - i;
      if (s < 0 || s > n) continue;
      const int t = j + s - n;
      if (t < 0) continue;
      for (std::uint32_t S : subsets[static_cast<std::size_t>(s)])
        for (std::size_t c = 0; c < columns_at(pc, i); ++c) {
          const std::size_t size = pc.column(i, c).dim(t);
          where[static_cast<std::size_t>(k - lo)][key(i, S, c)] = bk.size();
          bk.push_back({i, S, c, t, off});
          off += size;
        }
    }
    cx.dims.push_back(off);
  }
  for (int k = lo; k < hi; ++k) {
    SparseMatrix d(cx.dims[static_cast<std::size_t>(k + 1 - lo)], cx.dims[static_cast<std::size_t>(k - lo)]);
    const auto& next = blocks[static_cast<std::size_t>(k + 1 - lo)];
    const auto& next_where = where[static_cast<std::size_t>(k + 1 - lo)];
    const bool vertical_negative = ((k % 2) + 2) % 2 == 1;
    for (const Block& b : blocks[static_cast<std::size_t>(k - lo)]) {
      const FaceModule& mod = pc.column(b.i, b.col);
      const MonomialBasis& src = mod.basis(b.t);
      if (src.size() == 0) continue;
      const Face tau = face_at(pc, b.i, b.col);
      // d^h: Čech restriction, same S and α-degree.
      for (int v = 0; v < nv; ++v) {
        if (tau & vertex_face(v)) continue;
        const std::int64_t c2 = pc.column_of(tau | vertex_face(v));
        if (c2 < 0) continue;
        const Block& tb = next[next_where.at(key(b.i + 1, b.S, static_cast<std::size_t>(c2)))];
        const MonomialBasis& dst = pc.column(b.i + 1, tb.col).basis(b.t);
        const Residue s = cech_sign(F, tau, v);
        for (std::size_t a = 0; a < src.size(); ++a) {
          const std::int64_t idx = dst.index_of(src[a]);
          if (idx >= 0) d.add(tb.offset + static_cast<std::size_t>(idx), b.offset + a, s);
        }
      }
      // (−1)^k d^v: Koszul multiplication within the same column.
      for (int q = 0; q < n; ++q) {
        const std::uint32_t bit = std::uint32_t{1} << q;
        if (b.S & bit) continue;
        const Block& tb = next[next_where.at(key(b.i, b.S | bit, b.col))];
        const MonomialBasis& dst = mod.basis(b.t + 1);
        const bool negative = vertical_negative != (std::popcount(b.S & (bit - 1)) % 2 == 1);
        const LinearForm& form = theta[static_cast<std::size_t>(q)];
        for (std::size_t a = 0; a < src.size(); ++a)
          for (int x = 0; x < nv; ++x) {
            if (form[static_cast<std::size_t>(x)] == 0) continue;
            const std::int64_t idx = dst.index_of(times_vertex(src[a], x));
            if (idx < 0) continue;
            const Residue val = form[static_cast<std::size_t>(x)];
            d.add(tb.offset + static_cast<std::size_t>(idx), b.offset + a, negative ? F.neg(val) : val);
          }
      }
    }
    d.compress(F);
    cx.differentials.push_back(std::move(d));
  }
  return cx;
}

IndexDegreeTable total_complex_homology(const PrimeField& F, const RelativeComplex& psi,
                                        const LinearFormSequence& theta, int max_degree) {
  PartitionComplex pc = PartitionComplex::full(psi, max_degree + 1);
  IndexDegreeTable out;
  for (int j = 0; j <= max_degree; ++j) {
    ChainComplex cx = total_complex_slice(F, pc, theta, j);
    auto h = chain_homology_dims(F, cx, false);
    for (auto [k, dim] : h) out[{k, j}] = dim;
  }
  return out;
}

namespace {

bool is_sphere_cohomology(const BettiTable& b, int dim) {
  for (auto [i, x] : b)
    if (x != (i == dim ? 1u : 0u)) return false;
  return b.count(dim) == 1;
}

bool is_acyclic(const BettiTable& b) {
  return std::all_of(b.begin(), b.end(), [](auto& e) { return e.second == 0; });
}

// dim ker(A_j -> ⊕ targets_j)
std::size_t restriction_kernel(const PrimeField& F, const GradedQuotient& a, const std::vector<GradedQuotient>& targets,
                               int j) {
  const std::size_t n = a.dim(j);
  if (n == 0) return 0;
  std::vector<Matrix> blocks;
  for (const auto& t : targets) blocks.push_back(induced_map(a, t, j));
  if (blocks.empty()) return n;
  return n - rank(F, vstack(blocks, n));
}

}  // namespace

InteriorVerdict interior_partition_check(const PrimeField& F, const RelativeComplex& disk,
                                         const LinearFormSequence& theta) {
  InteriorVerdict v;
  const SimplicialComplex& delta = disk.delta();
  const SimplicialComplex& bd = disk.gamma();
  const int d = delta.dim();
  if (delta.is_void() || d < 0) throw InputError("interior check needs a nonvoid disk");
  bool ok = true;
  if (!is_acyclic(relative_cohomology_dims(RelativeComplex(delta), F))) {
    ok = false;
    v.diagnostics.push_back("delta has nonzero reduced cohomology");
  }
  if (!is_sphere_cohomology(relative_cohomology_dims(RelativeComplex(bd), F), d - 1)) {
    ok = false;
    v.diagnostics.push_back("boundary does not have the cohomology of a " + std::to_string(d - 1) + "-sphere");
  }
  if (!(induced_subcomplex(delta, bd.vertex_mask()) == bd)) {
    ok = false;
    v.diagnostics.push_back("boundary is not an induced subcomplex of delta");
  }
  v.precondition_ok = ok;
  if (!ok) {
    v.diagnostics.push_back("check skipped");
    return v;
  }
  v.interior_vertices = delta.vertex_mask() & ~bd.vertex_mask();
  if (!v.interior_vertices) v.diagnostics.push_back("no interior vertices");
  PartitionComplex pc = PartitionComplex::interior(delta, v.interior_vertices, d + 2);
  v.exact = true;
  for (int t = 0; t <= d + 2; ++t) {
    auto h = chain_homology_dims(F, pc.slice(F, t), false);
    for (auto [i, x] : h) {
      v.homology[{i, t}] = x;
      if (x) {
        v.exact = false;
        v.diagnostics.push_back("P_int has homology at (i=" + std::to_string(i) + ", t=" + std::to_string(t) + ")");
      }
    }
  }
  GradedQuotient a(F, RelativeComplex(delta), theta, d + 2);
  std::vector<GradedQuotient> stars;
  for (int x : face_vertices(v.interior_vertices))
    stars.emplace_back(F, RelativeComplex(star(delta, vertex_face(x))), theta, d + 2);
  v.injective_below_top = true;
  for (int j = 0; j <= d; ++j) {
    v.kernel_dims[j] = restriction_kernel(F, a, stars, j);
    if (v.kernel_dims[j]) v.injective_below_top = false;
  }
  return v;
}

SubdivisionStructure make_subdivision_structure(const SimplicialComplex& delta, const std::vector<CellSpec>& cells) {
  if (delta.is_void()) throw InputError("subdivision structure over a void complex");
  const int d = delta.dim();
  SubdivisionStructure s;
  s.delta = delta;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const CellSpec& spec = cells[c];
    const std::string name = "cell " + std::to_string(c);
    if (spec.dim < 0 || spec.dim > d) throw InputError(name + ": dimension out of range");
    if (spec.facets.empty()) throw InputError(name + ": no facets");
    for (Face f : spec.facets)
      if (!delta.contains(f)) throw InputError(name + ": facet " + delta.face_label(f) + " is not a face of delta");
    for (Face f : spec.boundary_facets)
      if (!delta.contains(f))
        throw InputError(name + ": boundary facet " + delta.face_label(f) + " is not a face of delta");
    SubdivisionCell cell;
    cell.dim = spec.dim;
    cell.subdivision = SimplicialComplex::from_generators(delta.ground_set(), spec.facets);
    std::vector<Face> bgens = spec.boundary_facets;
    if (bgens.empty()) bgens.push_back(0);
    cell.boundary = SimplicialComplex::from_generators(delta.ground_set(), bgens);
    for (Face f : cell.boundary.faces())
      if (!cell.subdivision.contains(f))
        throw InputError(name + ": boundary face " + delta.face_label(f) + " is outside the cell");
    if (cell.subdivision.dim() != spec.dim) throw InputError(name + ": subdivision dimension differs from the cell");
    // A cell is a ball, so its boundary is the set of free codimension-one faces.
    if (spec.dim > 0 && (!cell.subdivision.is_pure() || pseudomanifold_boundary(cell.subdivision) != cell.boundary))
      throw InputError(name + ": declared boundary is not the boundary of the subdivided cell");
    s.cells.push_back(std::move(cell));
  }
  bool any_top = false;
  for (const auto& cell : s.cells) any_top |= cell.dim == d;
  if (!any_top) throw InputError("no top-dimensional cell");
  for (Face f : delta.facets()) {
    bool covered = false;
    for (const auto& cell : s.cells)
      if (cell.dim == d && cell.subdivision.contains(f)) covered = true;
    if (!covered) throw InputError("facet " + delta.face_label(f) + " of delta is not covered by a top-dimensional cell");
  }
  s.incidence.resize(s.cells.size());
  for (std::size_t c = 0; c < s.cells.size(); ++c)
    for (std::size_t e = 0; e < s.cells.size(); ++e) {
      if (s.cells[e].dim + 1 != s.cells[c].dim) continue;
      const auto& faces = s.cells[e].subdivision.faces();
      if (std::all_of(faces.begin(), faces.end(), [&](Face f) { return s.cells[c].boundary.contains(f); }))
        s.incidence[c].push_back(e);
    }
  return s;
}

SubdivisionStructure barycentric_structure(const SimplicialComplex& sigma) {
  SimplicialComplex delta = barycentric_subdivision(sigma);
  std::vector<Face> cells;
  for (Face f : sigma.faces())
    if (f) cells.push_back(f);
  std::vector<CellSpec> specs;
  for (Face f : cells) {
    Face inside = 0, proper = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if ((cells[k] & ~f) != 0) continue;
      inside |= vertex_face(static_cast<int>(k));
      if (cells[k] != f) proper |= vertex_face(static_cast<int>(k));
    }
    CellSpec spec;
    spec.dim = face_size(f) - 1;
    spec.facets = induced_subcomplex(delta, inside).facets();
    SimplicialComplex bd = induced_subcomplex(delta, proper);
    if (bd.dim() >= 0) spec.boundary_facets = bd.facets();
    specs.push_back(std::move(spec));
  }
  return make_subdivision_structure(delta, specs);
}

std::vector<std::string> induced_boundary_violations(const SubdivisionStructure& s) {
  std::vector<std::string> out;
  const int d = s.delta.dim();
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const auto& cell = s.cells[c];
    if (2 * cell.dim < d) continue;
    if (!(induced_subcomplex(s.delta, cell.boundary.vertex_mask()) == cell.boundary))
      out.push_back("cell " + std::to_string(c) + " (dim " + std::to_string(cell.dim) +
                    "): boundary is not an induced subcomplex");
  }
  return out;
}

SubdivisionVerdict subdivision_partition_check(const PrimeField& F, const SubdivisionStructure& s,
                                               const LinearFormSequence& theta) {
  SubdivisionVerdict v;
  v.diagnostics = induced_boundary_violations(s);
  v.precondition_ok = v.diagnostics.empty();
  const int d = s.delta.dim();
  GradedQuotient a(F, RelativeComplex(s.delta), theta, d + 2);
  std::vector<GradedQuotient> tops;
  for (const auto& cell : s.cells)
    if (cell.dim == d) tops.emplace_back(F, RelativeComplex(cell.subdivision), theta, d + 2);
  Face interior = 0;
  for (const auto& cell : s.cells)
    if (cell.dim == d) interior |= cell.subdivision.vertex_mask() & ~cell.boundary.vertex_mask();
  std::vector<GradedQuotient> stars;
  for (int x : face_vertices(interior))
    stars.emplace_back(F, RelativeComplex(star(s.delta, vertex_face(x))), theta, d + 2);
  v.pass = true;
  for (int j = 0; j <= d + 1; ++j) {
    v.kernel_dims[j] = restriction_kernel(F, a, tops, j);
    v.star_kernel_dims[j] = restriction_kernel(F, a, stars, j);
    if (2 * j <= d && (v.kernel_dims[j] || v.star_kernel_dims[j])) v.pass = false;
  }
  return v;
}

}  // namespace srlab
