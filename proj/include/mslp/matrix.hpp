#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mslp/field.hpp"

namespace mslp {

/// Permutation of {1, ..., d}.  Products compose left to right:
/// (a * b)(i) = b(a(i)), matching the action of row-vector matrix products.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(uint32_t degree);  // identity
  static Permutation from_images(std::vector<uint32_t> images_1based);
  /// Single cycle (c_1 c_2 ... c_k) on points 1..degree.
  static Permutation cycle(uint32_t degree, std::initializer_list<uint32_t> points);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t image(uint32_t i) const { return img_[i - 1] + 1; }  // 1-based

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_d_cycle() const;

  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<uint32_t> img_;  // 0-based internally
};

/// Dense d x d matrix over GF(q).  Row-vector convention throughout: the
/// matrix acts on the right of basis vectors, so e_i * M is row i of M.
/// Rows and columns are 1-based in the public interface.
/// Matrices over GF(2) use bit-packed rows internally; the interface is
/// unchanged.
class Matrix {
 public:
  Matrix(FieldPtr field, uint32_t dim);  // zero matrix
  static Matrix identity(FieldPtr field, uint32_t dim);

  uint32_t dim() const { return d_; }
  const FieldPtr& field() const { return field_; }

  FieldElement get(uint32_t i, uint32_t j) const;
  void set(uint32_t i, uint32_t j, FieldElement v);

  Matrix operator*(const Matrix& rhs) const;
  Matrix inverse() const;  // throws on singular input
  FieldElement det() const;
  bool is_identity() const;

  /// row_i += a * row_j (elementary row operation; left transvection action)
  void add_scaled_row(uint32_t i, uint32_t j, FieldElement a);
  /// col_j += a * col_i (elementary column operation; right transvection action)
  void add_scaled_col(uint32_t j, uint32_t i, FieldElement a);
  void scale_row(uint32_t i, FieldElement a);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  /// Text format: line 1 "d q", then d rows of d packed field values.
  std::string to_text() const;
  static Matrix from_text(std::istream& in);
  static Matrix from_text(const std::string& text);

 private:
  FieldPtr field_;
  uint32_t d_ = 0;
  bool bits_mode_ = false;
  std::vector<uint32_t> vals_;   // row-major packed values (generic mode)
  std::vector<uint64_t> bits_;   // bit rows (GF(2) mode)
  uint32_t words_ = 0;           // words per row in bit mode

  void check_compatible(const Matrix& rhs) const;
};

enum class MatrixShape { monomial, diagonal, lower_unitriangular, general };

bool is_monomial(const Matrix& m);
bool is_diagonal(const Matrix& m);
bool is_lower_unitriangular(const Matrix& m);

/// Most specific shape, checked in the order monomial -> diagonal ->
/// lower-unitriangular (a diagonal matrix reports diagonal, not monomial).
MatrixShape classify(const Matrix& m);
std::string to_string(MatrixShape s);

/// The permutation pi with <e_i> * m = <e_pi(i)>; requires a monomial matrix.
Permutation psi(const Matrix& m);

/// Literal transvection t_ij(alpha): identity plus alpha at (i, j), j < i.
Matrix transvection(const FieldPtr& field, uint32_t dim, uint32_t i, uint32_t j,
                    FieldElement alpha);

}  // namespace mslp
