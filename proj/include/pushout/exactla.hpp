#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pushout {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized; all constructors below do so.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (rationals, JSON documents). CLI exit code 2.
struct ParseError : Error {
  using Error::Error;
};

/// A document parsed but violates an algebraic axiom. CLI exit code 1.
struct ValidationError : Error {
  using Error::Error;
};

/// An operation was called outside its precondition. CLI exit code 1.
struct PreconditionError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Parses "p" or "p/q" (optional sign on p, q > 0 after reduction).
Scalar parse_scalar(std::string_view text);

/// Lowest-terms text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense rational matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  /// Column-major flattening: entry (r, c) lands at index c * rows + r.
  Vector vec() const;
  static Matrix unvec(std::size_t rows, std::size_t cols, const Vector& v);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Stacks blocks vertically; all blocks need the same column count.
Matrix vstack(const std::vector<Matrix>& blocks);
/// Concatenates blocks horizontally; all blocks need the same row count.
Matrix hstack(const std::vector<Matrix>& blocks);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                    // rank x cols, fully reduced rows
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row-echelon form. Zero rows are dropped.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n held as its reduced row-echelon basis, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the stored basis. v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates(): the ambient vector with given coefficients.
  Vector embed(const Vector& coords) const;
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {v | <v, w> = 0 for all w in s} under the coordinate pairing.
Subspace orthogonal_complement(const Subspace& s);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// All x with m x = target, or nullopt when target is not in image(m).
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& target);

/// Realizes Q^n / sub. The complement coordinates are the non-pivot
/// columns of sub's echelon basis, in increasing order.
struct Quotient {
  Matrix projection;  // (n - dim sub) x n, surjective, kernel exactly sub
  Matrix section;     // n x (n - dim sub), projection * section = identity
  std::size_t dim() const { return projection.rows(); }
};

Quotient quotient_basis(std::size_t ambient_dim, const Subspace& sub);

/// Matrix of a map restricted to invariant subspaces: the columns are
/// target.coordinates(m * v) for v in source's basis. Throws
/// PreconditionError if m does not carry source into target.
Matrix restrict_map(const Matrix& m, const Subspace& source, const Subspace& target);

/// Left inverse of an injective matrix on its image: for y in image(m)
/// returns the unique x with m x = y.
Vector preimage(const Matrix& m, const Vector& y);

}  // namespace pushout
