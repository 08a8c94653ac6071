#include "srlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace srlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("zero has no inverse mod " + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

Residue PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return static_cast<Residue>(m);
}

std::int64_t PrimeField::to_signed(Residue a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                    : static_cast<std::int64_t>(a);
}

Residue field_inverse(Residue a, const PrimeField& F) { return F.inv(a); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Residue>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  Matrix c(a.rows(), b.cols());
  const std::uint64_t p = F.modulus();
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t f = a(i, k);
      if (f == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + f * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Residue>(acc[j]);
  }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      std::copy(b.row(r).begin(), b.row(r).end(), m.row(at).begin());
  return m;
}

std::vector<Residue> apply(const PrimeField& F, const Matrix& m, std::span<const Residue> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: length mismatch");
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s = (s + std::uint64_t{m(r, c)} * v[c]) % F.modulus();
    out[r] = static_cast<Residue>(s);
  }
  return out;
}

std::size_t rank(const PrimeField& F, const Matrix& m) {
  return rank(F, SparseMatrix::from_dense(m));
}

std::vector<std::size_t> rref(const PrimeField& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::uint64_t p = F.modulus();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    Residue inv = F.inv(m(r, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = F.mul(m(r, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::uint64_t f = p - m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(i, k) = static_cast<Residue>((m(i, k) + f * m(r, k)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Residue>> kernel_basis(const PrimeField& F, const Matrix& m) {
  Matrix e = m;
  auto pivots = rref(F, e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(e(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.rows_[r].push_back({static_cast<std::uint32_t>(c), m(r, c)});
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, Residue v) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("sparse entry out of range");
  if (v != 0) rows_[r].push_back({static_cast<std::uint32_t>(c), v});
}

void SparseMatrix::compress(const PrimeField& F) {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.col < b.col; });
    SparseVector merged;
    merged.reserve(row.size());
    for (const auto& e : row) {
      if (!merged.empty() && merged.back().col == e.col)
        merged.back().val = F.add(merged.back().val, e.val);
      else
        merged.push_back(e);
    }
    std::erase_if(merged, [](const SparseEntry& e) { return e.val == 0; });
    row = std::move(merged);
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r]) m(r, e.col) = e.val;
  return m;
}

SparseMatrix multiply(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse shapes do not compose");
  SparseMatrix c(a.rows(), b.cols());
  const std::uint64_t p = F.modulus();
  std::vector<std::uint64_t> acc(b.cols(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    touched.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        if (acc[eb.col] == 0) touched.push_back(eb.col);
        acc[eb.col] = (acc[eb.col] + std::uint64_t{ea.val} * eb.val) % p;
        if (acc[eb.col] == 0) acc[eb.col] = p;  // keep "touched" marker distinct from 0
      }
    }
    for (auto col : touched) {
      std::uint64_t v = acc[col] % p;
      if (v != 0) c.add(r, col, static_cast<Residue>(v));
      acc[col] = 0;
    }
  }
  c.compress(F);
  return c;
}

std::size_t rank(const PrimeField& F, const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  RowEchelon ech(F, m.cols());
  for (auto r : order) {
    if (m.row(r).empty()) continue;
    ech.insert(m.row(r));
    if (ech.rank() == m.cols()) break;
  }
  return ech.rank();
}

RowEchelon::RowEchelon(const PrimeField& F, std::size_t ncols)
    : F_(F), ncols_(ncols), pivot_of_col_(ncols, -1) {}

bool RowEchelon::insert(const SparseVector& v) {
  if (v.empty()) return false;
  const std::uint64_t p = F_.modulus();
  std::vector<std::uint64_t> acc(ncols_, 0);
  for (const auto& e : v) acc[e.col] = e.val;
  std::size_t c = v.front().col;
  for (; c < ncols_; ++c) {
    if (acc[c] == 0) continue;
    std::int32_t pr = pivot_of_col_[c];
    if (pr < 0) break;
    std::uint64_t f = p - acc[c];
    for (const auto& e : rows_[pr]) acc[e.col] = (acc[e.col] + f * e.val) % p;
  }
  if (c == ncols_) return false;
  std::uint64_t inv = F_.inv(static_cast<Residue>(acc[c]));
  SparseVector row;
  for (std::size_t k = c; k < ncols_; ++k)
    if (acc[k] != 0) row.push_back({static_cast<std::uint32_t>(k), static_cast<Residue>(acc[k] * inv % p)});
  pivot_of_col_[c] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<Residue> RowEchelon::reduce_dense(const SparseVector& v) const {
  std::vector<Residue> dense(ncols_, 0);
  for (const auto& e : v) dense[e.col] = e.val;
  return reduce_dense(std::move(dense));
}

std::vector<Residue> RowEchelon::reduce_dense(std::vector<Residue> dense) const {
  if (dense.size() != ncols_) throw std::invalid_argument("reduce: length mismatch");
  const std::uint64_t p = F_.modulus();
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (dense[c] == 0 || pivot_of_col_[c] < 0) continue;
    std::uint64_t f = p - dense[c];
    for (const auto& e : rows_[pivot_of_col_[c]])
      dense[e.col] = static_cast<Residue>((dense[e.col] + f * e.val) % p);
  }
  return dense;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_of_col_[c] < 0) out.push_back(c);
  return out;
}

std::map<int, std::size_t> chain_homology_dims(const PrimeField& F, const ChainComplex& cx,
                                               bool validate) {
  const std::size_t n = cx.dims.size();
  auto is_zero_map = [](const SparseMatrix& m) { return m.nonzeros() == 0; };
  if (cx.differentials.size() > n) {
    for (std::size_t k = n; k < cx.differentials.size(); ++k)
      if (!is_zero_map(cx.differentials[k])) throw InvalidComplex("differential past the top index");
  }
  std::vector<std::size_t> ranks(n, 0);
  for (std::size_t k = 0; k < n && k < cx.differentials.size(); ++k) {
    const auto& d = cx.differentials[k];
    if (is_zero_map(d)) continue;
    std::size_t target = k + 1 < n ? cx.dims[k + 1] : 0;
    if (d.cols() != cx.dims[k] || d.rows() != target)
      throw InvalidComplex("differential at index " + std::to_string(cx.lo + static_cast<int>(k)) +
                           " has the wrong shape");
    ranks[k] = rank(F, d);
  }
  if (validate) {
    for (std::size_t k = 0; k + 1 < n && k + 1 < cx.differentials.size(); ++k) {
      const auto& a = cx.differentials[k];
      const auto& b = cx.differentials[k + 1];
      if (is_zero_map(a) || is_zero_map(b)) continue;
      if (multiply(F, b, a).nonzeros() != 0)
        throw InvalidComplex("d∘d != 0 at index " + std::to_string(cx.lo + static_cast<int>(k)));
    }
  }
  std::map<int, std::size_t> h;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t in = k > 0 ? ranks[k - 1] : 0;
    h[cx.lo + static_cast<int>(k)] = cx.dims[k] - ranks[k] - in;
  }
  return h;
}

}  // namespace srlab
