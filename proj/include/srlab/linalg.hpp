#pragma once
// Exact linear algebra over a prime field F_p and homology of finite cochain
// complexes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace srlab {

using Residue = std::uint32_t;

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidComplex : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2147483647;  // 2^31 - 1

  // Throws std::invalid_argument unless p is a prime below 2^32.
  explicit PrimeField(std::uint64_t p = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const {
    return static_cast<Residue>(a >= b ? a - b : p_ - (b - a));
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : static_cast<Residue>(p_ - a); }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue inv(Residue a) const;  // throws DivisionByZero on 0
  Residue from_int(std::int64_t v) const;
  // Symmetric lift to (-p/2, p/2], handy for printing small signed values.
  std::int64_t to_signed(Residue a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

Residue field_inverse(Residue a, const PrimeField& F);

// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Residue>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
// Stacks blocks vertically; all blocks must share the column count.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
std::vector<Residue> apply(const PrimeField& F, const Matrix& m, std::span<const Residue> v);

std::size_t rank(const PrimeField& F, const Matrix& m);
// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, Matrix& m);
std::vector<std::vector<Residue>> kernel_basis(const PrimeField& F, const Matrix& m);

struct SparseEntry {
  std::uint32_t col;
  Residue val;
  bool operator==(const SparseEntry&) const = default;
};
using SparseVector = std::vector<SparseEntry>;  // sorted by col, no zeros

// Row-oriented sparse matrix. Fill with add(), then call compress().
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  void add(std::size_t r, std::size_t c, Residue v);
  void compress(const PrimeField& F);  // sort, merge duplicates, drop zeros
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;
  Matrix to_dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

SparseMatrix multiply(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b);
std::size_t rank(const PrimeField& F, const SparseMatrix& m);

// Row echelon basis of a growing subspace of F_p^ncols. Each stored row has a
// distinct leading column with coefficient 1.
class RowEchelon {
 public:
  RowEchelon(const PrimeField& F, std::size_t ncols);

  // Returns true if v was independent of the rows so far (and is now stored).
  bool insert(const SparseVector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }
  // Fully reduces v; the result is supported on non-pivot columns only.
  std::vector<Residue> reduce_dense(const SparseVector& v) const;
  std::vector<Residue> reduce_dense(std::vector<Residue> dense) const;
  std::vector<std::size_t> free_columns() const;

 private:
  PrimeField F_;
  std::size_t ncols_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<SparseVector> rows_;
};

// Cohomologically graded: differentials[k] maps index lo+k to lo+k+1 and has
// shape dims[k+1] x dims[k]. A missing or empty differential is the zero map.
struct ChainComplex {
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> differentials;

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
};

// Throws InvalidComplex on shape mismatch or d∘d != 0 (when validate is set).
std::map<int, std::size_t> chain_homology_dims(const PrimeField& F, const ChainComplex& c,
                                               bool validate = true);

}  // namespace srlab
