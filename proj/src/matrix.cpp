#include "mslp/matrix.hpp"

#include <bit>
#include <istream>
#include <sstream>

namespace mslp {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(uint32_t degree) : img_(degree) {
  for (uint32_t i = 0; i < degree; ++i) img_[i] = i;
}

Permutation Permutation::from_images(std::vector<uint32_t> images_1based) {
  Permutation p;
  p.img_.resize(images_1based.size());
  std::vector<bool> seen(images_1based.size(), false);
  for (size_t i = 0; i < images_1based.size(); ++i) {
    uint32_t v = images_1based[i];
    if (v < 1 || v > images_1based.size() || seen[v - 1])
      throw Error("permutation images are not a bijection");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::cycle(uint32_t degree, std::initializer_list<uint32_t> points) {
  Permutation p(degree);
  if (points.size() < 2) return p;
  auto it = points.begin();
  uint32_t first = *it;
  uint32_t prev = first;
  ++it;
  for (; it != points.end(); ++it) {
    p.img_[prev - 1] = *it - 1;
    prev = *it;
  }
  p.img_[prev - 1] = first - 1;
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("permutation degree mismatch");
  Permutation out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[img_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<uint32_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_d_cycle() const {
  if (img_.empty()) return false;
  uint32_t cur = 0, len = 0;
  do {
    cur = img_[cur];
    ++len;
  } while (cur != 0 && len <= img_.size());
  return len == img_.size();
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    uint32_t cur = i;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = img_[cur];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldPtr field, uint32_t dim) : field_(std::move(field)), d_(dim) {
  if (d_ == 0) throw Error("matrix dimension must be positive");
  bits_mode_ = field_->is_gf2();
  if (bits_mode_) {
    words_ = (d_ + 63) / 64;
    bits_.assign(static_cast<size_t>(d_) * words_, 0);
  } else {
    vals_.assign(static_cast<size_t>(d_) * d_, 0);
  }
}

Matrix Matrix::identity(FieldPtr field, uint32_t dim) {
  Matrix m(std::move(field), dim);
  FieldElement one = m.field_->one();
  for (uint32_t i = 1; i <= dim; ++i) m.set(i, i, one);
  return m;
}

FieldElement Matrix::get(uint32_t i, uint32_t j) const {
  if (i < 1 || i > d_ || j < 1 || j > d_) throw Error("matrix index out of range");
  if (bits_mode_) {
    uint64_t w = bits_[static_cast<size_t>(i - 1) * words_ + (j - 1) / 64];
    return {static_cast<uint32_t>((w >> ((j - 1) % 64)) & 1)};
  }
  return {vals_[static_cast<size_t>(i - 1) * d_ + (j - 1)]};
}

void Matrix::set(uint32_t i, uint32_t j, FieldElement v) {
  if (i < 1 || i > d_ || j < 1 || j > d_) throw Error("matrix index out of range");
  if (v.packed >= field_->q()) throw Error("field element out of range");
  if (bits_mode_) {
    uint64_t& w = bits_[static_cast<size_t>(i - 1) * words_ + (j - 1) / 64];
    uint64_t mask = 1ull << ((j - 1) % 64);
    if (v.packed)
      w |= mask;
    else
      w &= ~mask;
  } else {
    vals_[static_cast<size_t>(i - 1) * d_ + (j - 1)] = v.packed;
  }
}

void Matrix::check_compatible(const Matrix& rhs) const {
  if (d_ != rhs.d_) throw Error("matrix dimension mismatch");
  if (field_.get() != rhs.field_.get() && !(*field_ == *rhs.field_))
    throw Error("matrix field mismatch");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  check_compatible(rhs);
  Matrix out(field_, d_);
  if (bits_mode_) {
    // row i of the product is the XOR of rows j of rhs with bit (i, j) set
    for (uint32_t i = 0; i < d_; ++i) {
      uint64_t* dst = &out.bits_[static_cast<size_t>(i) * words_];
      const uint64_t* row = &bits_[static_cast<size_t>(i) * words_];
      for (uint32_t wi = 0; wi < words_; ++wi) {
        uint64_t w = row[wi];
        while (w) {
          uint32_t b = static_cast<uint32_t>(std::countr_zero(w));
          w &= w - 1;
          const uint64_t* src = &rhs.bits_[static_cast<size_t>(wi * 64 + b) * words_];
          for (uint32_t k = 0; k < words_; ++k) dst[k] ^= src[k];
        }
      }
    }
    return out;
  }
  const Field& F = *field_;
  for (uint32_t i = 0; i < d_; ++i) {
    for (uint32_t k = 0; k < d_; ++k) {
      FieldElement a{vals_[static_cast<size_t>(i) * d_ + k]};
      if (a.packed == 0) continue;
      const uint32_t* src = &rhs.vals_[static_cast<size_t>(k) * d_];
      uint32_t* dst = &out.vals_[static_cast<size_t>(i) * d_];
      for (uint32_t j = 0; j < d_; ++j) {
        if (!src[j]) continue;
        dst[j] = F.add({dst[j]}, F.mul(a, {src[j]})).packed;
      }
    }
  }
  return out;
}

Matrix Matrix::inverse() const {
  if (bits_mode_) {
    // Gauss-Jordan on [A | I] with bit rows
    std::vector<uint64_t> a(bits_);
    Matrix out = Matrix::identity(field_, d_);
    for (uint32_t c = 0; c < d_; ++c) {
      uint32_t piv = d_;
      for (uint32_t r = c; r < d_; ++r) {
        if ((a[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1) {
          piv = r;
          break;
        }
      }
      if (piv == d_) throw Error("matrix is singular");
      if (piv != c) {
        for (uint32_t k = 0; k < words_; ++k) {
          std::swap(a[static_cast<size_t>(piv) * words_ + k], a[static_cast<size_t>(c) * words_ + k]);
          std::swap(out.bits_[static_cast<size_t>(piv) * words_ + k],
                    out.bits_[static_cast<size_t>(c) * words_ + k]);
        }
      }
      for (uint32_t r = 0; r < d_; ++r) {
        if (r == c) continue;
        if ((a[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1) {
          for (uint32_t k = 0; k < words_; ++k) {
            a[static_cast<size_t>(r) * words_ + k] ^= a[static_cast<size_t>(c) * words_ + k];
            out.bits_[static_cast<size_t>(r) * words_ + k] ^=
                out.bits_[static_cast<size_t>(c) * words_ + k];
          }
        }
      }
    }
    return out;
  }
  const Field& F = *field_;
  std::vector<uint32_t> a(vals_);
  Matrix out = Matrix::identity(field_, d_);
  auto A = [&](uint32_t r, uint32_t c) -> uint32_t& { return a[static_cast<size_t>(r) * d_ + c]; };
  auto B = [&](uint32_t r, uint32_t c) -> uint32_t& {
    return out.vals_[static_cast<size_t>(r) * d_ + c];
  };
  for (uint32_t c = 0; c < d_; ++c) {
    uint32_t piv = d_;
    for (uint32_t r = c; r < d_; ++r)
      if (A(r, c)) {
        piv = r;
        break;
      }
    if (piv == d_) throw Error("matrix is singular");
    if (piv != c)
      for (uint32_t k = 0; k < d_; ++k) {
        std::swap(A(piv, k), A(c, k));
        std::swap(B(piv, k), B(c, k));
      }
    FieldElement pinv = F.inv({A(c, c)});
    for (uint32_t k = 0; k < d_; ++k) {
      A(c, k) = F.mul({A(c, k)}, pinv).packed;
      B(c, k) = F.mul({B(c, k)}, pinv).packed;
    }
    for (uint32_t r = 0; r < d_; ++r) {
      if (r == c || !A(r, c)) continue;
      FieldElement factor = F.neg({A(r, c)});
      for (uint32_t k = 0; k < d_; ++k) {
        A(r, k) = F.add({A(r, k)}, F.mul(factor, {A(c, k)})).packed;
        B(r, k) = F.add({B(r, k)}, F.mul(factor, {B(c, k)})).packed;
      }
    }
  }
  return out;
}

FieldElement Matrix::det() const {
  const Field& F = *field_;
  if (bits_mode_) {
    std::vector<uint64_t> a(bits_);
    for (uint32_t c = 0; c < d_; ++c) {
      uint32_t piv = d_;
      for (uint32_t r = c; r < d_; ++r)
        if ((a[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1) {
          piv = r;
          break;
        }
      if (piv == d_) return F.zero();
      if (piv != c)
        for (uint32_t k = 0; k < words_; ++k)
          std::swap(a[static_cast<size_t>(piv) * words_ + k],
                    a[static_cast<size_t>(c) * words_ + k]);
      for (uint32_t r = c + 1; r < d_; ++r)
        if ((a[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1)
          for (uint32_t k = 0; k < words_; ++k)
            a[static_cast<size_t>(r) * words_ + k] ^= a[static_cast<size_t>(c) * words_ + k];
    }
    return F.one();
  }
  std::vector<uint32_t> a(vals_);
  auto A = [&](uint32_t r, uint32_t c) -> uint32_t& { return a[static_cast<size_t>(r) * d_ + c]; };
  FieldElement det = F.one();
  for (uint32_t c = 0; c < d_; ++c) {
    uint32_t piv = d_;
    for (uint32_t r = c; r < d_; ++r)
      if (A(r, c)) {
        piv = r;
        break;
      }
    if (piv == d_) return F.zero();
    if (piv != c) {
      for (uint32_t k = 0; k < d_; ++k) std::swap(A(piv, k), A(c, k));
      det = F.neg(det);
    }
    det = F.mul(det, {A(c, c)});
    FieldElement pinv = F.inv({A(c, c)});
    for (uint32_t r = c + 1; r < d_; ++r) {
      if (!A(r, c)) continue;
      FieldElement factor = F.neg(F.mul({A(r, c)}, pinv));
      for (uint32_t k = c; k < d_; ++k)
        A(r, k) = F.add({A(r, k)}, F.mul(factor, {A(c, k)})).packed;
    }
  }
  return det;
}

bool Matrix::is_identity() const {
  for (uint32_t i = 1; i <= d_; ++i)
    for (uint32_t j = 1; j <= d_; ++j)
      if (get(i, j).packed != (i == j ? 1u : 0u)) return false;
  return true;
}

void Matrix::add_scaled_row(uint32_t i, uint32_t j, FieldElement a) {
  if (a.packed == 0) return;
  if (bits_mode_) {
    uint64_t* dst = &bits_[static_cast<size_t>(i - 1) * words_];
    const uint64_t* src = &bits_[static_cast<size_t>(j - 1) * words_];
    for (uint32_t k = 0; k < words_; ++k) dst[k] ^= src[k];
    return;
  }
  const Field& F = *field_;
  uint32_t* dst = &vals_[static_cast<size_t>(i - 1) * d_];
  const uint32_t* src = &vals_[static_cast<size_t>(j - 1) * d_];
  for (uint32_t k = 0; k < d_; ++k)
    dst[k] = F.add({dst[k]}, F.mul(a, {src[k]})).packed;
}

void Matrix::add_scaled_col(uint32_t j, uint32_t i, FieldElement a) {
  if (a.packed == 0) return;
  const Field& F = *field_;
  for (uint32_t r = 1; r <= d_; ++r) {
    FieldElement v = get(r, i);
    if (v.packed == 0) continue;
    set(r, j, F.add(get(r, j), F.mul(a, v)));
  }
}

void Matrix::scale_row(uint32_t i, FieldElement a) {
  const Field& F = *field_;
  if (bits_mode_) {
    if (a.packed == 0)
      for (uint32_t k = 0; k < words_; ++k) bits_[static_cast<size_t>(i - 1) * words_ + k] = 0;
    return;  // scaling by 1 is a no-op over GF(2)
  }
  uint32_t* dst = &vals_[static_cast<size_t>(i - 1) * d_];
  for (uint32_t k = 0; k < d_; ++k) dst[k] = F.mul(a, {dst[k]}).packed;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.d_ != rhs.d_) return false;
  if (!(lhs.field_.get() == rhs.field_.get() || *lhs.field_ == *rhs.field_)) return false;
  if (lhs.bits_mode_) return lhs.bits_ == rhs.bits_;
  return lhs.vals_ == rhs.vals_;
}

std::string Matrix::to_text() const {
  std::ostringstream out;
  out << d_ << ' ' << field_->q() << '\n';
  for (uint32_t i = 1; i <= d_; ++i) {
    for (uint32_t j = 1; j <= d_; ++j) {
      if (j > 1) out << ' ';
      out << get(i, j).packed;
    }
    out << '\n';
  }
  return out.str();
}

Matrix Matrix::from_text(std::istream& in) {
  uint32_t d = 0, q = 0;
  if (!(in >> d >> q)) throw Error("matrix file: cannot read header");
  if (d == 0) throw Error("matrix file: dimension must be positive");
  auto [p, f] = factor_prime_power(q);
  FieldPtr F = make_field(p, f);
  Matrix m(F, d);
  for (uint32_t i = 1; i <= d; ++i)
    for (uint32_t j = 1; j <= d; ++j) {
      long long v;
      if (!(in >> v))
        throw Error("matrix file: expected " + std::to_string(d * d) + " entries");
      if (v < 0 || v >= q) throw Error("matrix file: entry out of range [0, q)");
      m.set(i, j, {static_cast<uint32_t>(v)});
    }
  return m;
}

Matrix Matrix::from_text(const std::string& text) {
  std::istringstream in(text);
  return from_text(in);
}

// ---------------------------------------------------------------------------
// Structure predicates

bool is_monomial(const Matrix& m) {
  uint32_t d = m.dim();
  std::vector<bool> col_used(d + 1, false);
  for (uint32_t i = 1; i <= d; ++i) {
    uint32_t nonzero = 0, col = 0;
    for (uint32_t j = 1; j <= d; ++j)
      if (m.get(i, j).packed) {
        ++nonzero;
        col = j;
      }
    if (nonzero != 1 || col_used[col]) return false;
    col_used[col] = true;
  }
  return true;
}

bool is_diagonal(const Matrix& m) {
  uint32_t d = m.dim();
  for (uint32_t i = 1; i <= d; ++i)
    for (uint32_t j = 1; j <= d; ++j) {
      if (i == j && m.get(i, j).packed == 0) return false;
      if (i != j && m.get(i, j).packed != 0) return false;
    }
  return true;
}

bool is_lower_unitriangular(const Matrix& m) {
  uint32_t d = m.dim();
  for (uint32_t i = 1; i <= d; ++i) {
    if (m.get(i, i).packed != 1) return false;
    for (uint32_t j = i + 1; j <= d; ++j)
      if (m.get(i, j).packed != 0) return false;
  }
  return true;
}

MatrixShape classify(const Matrix& m) {
  if (is_monomial(m)) return is_diagonal(m) ? MatrixShape::diagonal : MatrixShape::monomial;
  if (is_lower_unitriangular(m)) return MatrixShape::lower_unitriangular;
  return MatrixShape::general;
}

std::string to_string(MatrixShape s) {
  switch (s) {
    case MatrixShape::monomial: return "monomial";
    case MatrixShape::diagonal: return "diagonal";
    case MatrixShape::lower_unitriangular: return "lower_unitriangular";
    case MatrixShape::general: return "general";
  }
  return "?";
}

Permutation psi(const Matrix& m) {
  uint32_t d = m.dim();
  std::vector<uint32_t> images(d, 0);
  for (uint32_t i = 1; i <= d; ++i) {
    uint32_t nonzero = 0, col = 0;
    for (uint32_t j = 1; j <= d; ++j)
      if (m.get(i, j).packed) {
        ++nonzero;
        col = j;
      }
    if (nonzero != 1) throw Error("psi: matrix is not monomial");
    images[i - 1] = col;
  }
  return Permutation::from_images(std::move(images));
}

Matrix transvection(const FieldPtr& field, uint32_t dim, uint32_t i, uint32_t j,
                    FieldElement alpha) {
  if (!(1 <= j && j < i && i <= dim)) throw Error("transvection requires 1 <= j < i <= d");
  Matrix m = Matrix::identity(field, dim);
  m.set(i, j, alpha);
  return m;
}

}  // namespace mslp
