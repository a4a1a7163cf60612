#include "pushout/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pushout {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << what << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
        << b.cols();
    throw DimensionMismatch(msg.str());
  }
}

// Incremental reduced row-echelon basis. Rows stay sorted by pivot and
// every pivot column is zero outside its own row.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of the rows seen so far.
  bool insert(Vector row) {
    reduce(row);
    std::size_t p = 0;
    while (p < cols_ && sgn(row[p]) == 0) ++p;
    if (p == cols_) return false;
    Scalar inv = 1 / row[p];
    for (std::size_t j = p; j < cols_; ++j) {
      if (sgn(row[j]) != 0) row[j] *= inv;
    }
    for (auto& b : rows_) {
      if (sgn(b[p]) == 0) continue;
      Scalar f = b[p];
      for (std::size_t j = p; j < cols_; ++j) {
        if (sgn(row[j]) != 0) b[j] -= f * row[j];
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
  }

  void reduce(Vector& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t p = pivots_[k];
      if (sgn(row[p]) == 0) continue;
      Scalar f = row[p];
      const Vector& b = rows_[k];
      for (std::size_t j = p; j < cols_; ++j) {
        if (sgn(b[j]) != 0) row[j] -= f * b[j];
      }
    }
  }

  bool full() const { return rows_.size() == cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<Vector>& rows() { return rows_; }
  std::vector<std::size_t>& pivots() { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length != cols");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (sgn(e) != 0 && sgn(v[c]) != 0) acc += e * v[c];
    }
    out[r] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector Matrix::vec() const {
  Vector v(rows_ * cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v[c * rows_ + r] = (*this)(r, c);
  return v;
}

Matrix Matrix::unvec(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw DimensionMismatch("unvec: length mismatch");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  check_same_shape(*this, other, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  check_same_shape(*this, other, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream msg;
    msg << "matrix product: inner dimensions " << a.cols_ << " and " << b.rows_;
    throw DimensionMismatch(msg.str());
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& e = a(i, k);
      if (sgn(e) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& f = b(k, j);
        if (sgn(f) != 0) out(i, j) += e * f;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& e : m.data_) e *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column count mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack: row count mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Echelon rref(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows() && !builder.full(); ++r) builder.insert(m.row(r));
  return Echelon{Matrix::from_rows(m.cols(), builder.rows()), builder.pivots()};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  EchelonBuilder builder(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length != ambient dim");
    if (builder.full()) break;
    builder.insert(v);
  }
  Subspace s(ambient_dim);
  s.basis_ = std::move(builder.rows());
  s.pivots_ = std::move(builder.pivots());
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = rref(m);
  Subspace s(m.cols());
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("contains: vector length != ambient dim");
  // The echelon basis is fully reduced, so v lies in the span iff
  // v - sum v[pivot_k] * basis_k vanishes.
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_[k][j]) != 0) r[j] -= f * basis_[k][j];
  }
  return pushout::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient dims differ");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("coordinates: vector not in subspace");
  Vector c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Vector Subspace::embed(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("embed: coordinate length != dim");
  Vector v(ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[k] * basis_[k][j];
  }
  return v;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(ambient_, basis_); }

Subspace kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace orthogonal_complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(Matrix::from_rows(s.ambient_dim(), s.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dims differ");
  Subspace ca = orthogonal_complement(a);
  Subspace cb = orthogonal_complement(b);
  std::vector<Vector> rows = ca.basis();
  rows.insert(rows.end(), cb.basis().begin(), cb.basis().end());
  if (rows.empty()) return Subspace::full(a.ambient_dim());
  return kernel(Matrix::from_rows(a.ambient_dim(), rows));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dims differ");
  std::vector<Vector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& target) {
  if (target.size() != m.rows()) throw DimensionMismatch("solve_affine: target length != rows");
  Matrix augmented = hstack({m, Matrix::from_columns(m.rows(), {target})});
  Echelon e = rref(augmented);
  std::size_t n = m.cols();
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector particular(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) particular[e.pivots[k]] = e.reduced(k, n);
  return AffineSolution{std::move(particular), kernel(m)};
}

Quotient quotient_basis(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient_basis: ambient mismatch");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> slot(ambient_dim, 0);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) {
      slot[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  Matrix projection(free_cols.size(), ambient_dim);
  Matrix section(ambient_dim, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    projection(k, free_cols[k]) = 1;
    section(free_cols[k], k) = 1;
  }
  // e_p = basis_k - (basis_k - e_p), and basis_k - e_p only involves free
  // columns, so e_p projects to minus that remainder.
  for (std::size_t k = 0; k < sub.dim(); ++k) {
    const Vector& b = sub.basis()[k];
    std::size_t p = sub.pivots()[k];
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      if (is_pivot[c] || sgn(b[c]) == 0) continue;
      projection(slot[c], p) = -b[c];
    }
  }
  return Quotient{std::move(projection), std::move(section)};
}

Matrix restrict_map(const Matrix& m, const Subspace& source, const Subspace& target) {
  if (m.cols() != source.ambient_dim() || m.rows() != target.ambient_dim())
    throw DimensionMismatch("restrict_map: shape does not match subspaces");
  Matrix out(target.dim(), source.dim());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    Vector image_vec = m.apply(source.basis()[k]);
    if (!target.contains(image_vec))
      throw PreconditionError("restrict_map: image leaves the target subspace");
    out.set_column(k, target.coordinates(image_vec));
  }
  return out;
}

Vector preimage(const Matrix& m, const Vector& y) {
  auto sol = solve_affine(m, y);
  if (!sol) throw PreconditionError("preimage: vector not in image");
  if (sol->homogeneous.dim() != 0) throw PreconditionError("preimage: map is not injective");
  return sol->particular;
}

}  // namespace pushout
