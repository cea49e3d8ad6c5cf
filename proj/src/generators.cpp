#include "mslp/generators.hpp"

namespace mslp {

const Matrix& StandardGenerators::slot(uint32_t k) const {
  switch (k) {
    case yslot::s: return s;
    case yslot::s_inv: return s_inv;
    case yslot::t: return t;
    case yslot::t_inv: return t_inv;
    case yslot::delta: return delta;
    case yslot::delta_inv: return delta_inv;
    case yslot::v: return v;
    case yslot::v_inv: return v_inv;
    case yslot::x: return x;
    case yslot::x_inv: return x_inv;
  }
  throw Error("generator slot out of range");
}

StandardGenerators standard_generators(const FieldPtr& field, uint32_t d) {
  if (d < 3) throw Error("standard generators require d >= 3");
  if (d % 2 == 0 && d < 4) throw Error("even d requires d >= 4");
  const Field& F = *field;
  FieldElement one = F.one();
  FieldElement minus_one = F.neg(one);
  FieldElement w = F.omega();

  Matrix s(field, d), t(field, d), v(field, d), x(field, d), delta(field, d);

  // s = diag-block(s0, I), s0 = [[0, 1], [-1, 0]]
  s.set(1, 2, one);
  s.set(2, 1, minus_one);
  for (uint32_t i = 3; i <= d; ++i) s.set(i, i, one);

  // t = diag-block(t0, I), t0 = [[1, 1], [0, 1]]
  t.set(1, 1, one);
  t.set(1, 2, one);
  t.set(2, 2, one);
  for (uint32_t i = 3; i <= d; ++i) t.set(i, i, one);

  // delta = diag(omega, omega^-1, 1, ..., 1)
  delta.set(1, 1, w);
  delta.set(2, 2, F.inv(w));
  for (uint32_t i = 3; i <= d; ++i) delta.set(i, i, one);

  if (d % 2 == 1) {
    // v: e_1 -> e_d, e_i -> -e_{i-1}
    v.set(1, d, one);
    for (uint32_t i = 2; i <= d; ++i) v.set(i, i - 1, minus_one);
    x = Matrix::identity(field, d);
  } else {
    // v: e_i -> e_{i+2} (i <= d-2), e_{d-1} -> e_1, e_d -> e_2
    for (uint32_t i = 1; i + 2 <= d; ++i) v.set(i, i + 2, one);
    v.set(d - 1, 1, one);
    v.set(d, 2, one);
    // x = diag-block(x0, I), x0: (e_1, e_2, e_3, e_4) -> (e_2, e_3, e_4, -e_1)
    x.set(1, 2, one);
    x.set(2, 3, one);
    x.set(3, 4, one);
    x.set(4, 1, minus_one);
    for (uint32_t i = 5; i <= d; ++i) x.set(i, i, one);
  }

  StandardGenerators g{field,       d,
                       s,           s.inverse(),
                       t,           t.inverse(),
                       delta,       delta.inverse(),
                       v,           v.inverse(),
                       x,           x.inverse()};

  for (uint32_t k = 1; k <= 10; ++k)
    if (!(g.slot(k).det() == F.one())) throw Error("standard generator has det != 1");

  if (d % 2 == 1) {
    // psi(v^-1) is the d-cycle (1 2 ... d)
    Permutation c(d);
    std::vector<uint32_t> img(d);
    for (uint32_t i = 1; i <= d; ++i) img[i - 1] = i % d + 1;
    if (psi(g.v_inv) != Permutation::from_images(img))
      throw Error("psi(v^-1) is not the d-cycle");
  } else {
    // psi(v) = (1 3 ... d-1)(2 4 ... d)
    std::vector<uint32_t> img(d);
    for (uint32_t i = 1; i + 2 <= d; ++i) img[i - 1] = i + 2;
    img[d - 2] = 1;
    img[d - 1] = 2;
    if (psi(g.v) != Permutation::from_images(img))
      throw Error("psi(v) is not the expected double cycle");
  }
  return g;
}

std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota,
                                   const Matrix& w0, const Matrix& u10, const Matrix& u20) {
  if (quota < yslot::count) throw Error("quota smaller than the generator list");
  std::vector<Matrix> M;
  M.reserve(quota);
  for (uint32_t k = 1; k <= 10; ++k) M.push_back(gens.slot(k));
  M.push_back(w0);
  M.push_back(u10);
  M.push_back(u20);
  Matrix id = Matrix::identity(gens.field, gens.d);
  while (M.size() < quota) M.push_back(id);
  return M;
}

std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota,
                                   const Matrix& payload) {
  Matrix id = Matrix::identity(gens.field, gens.d);
  return initial_memory(gens, quota, payload, id, id);
}

std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota) {
  Matrix id = Matrix::identity(gens.field, gens.d);
  return initial_memory(gens, quota, id, id, id);
}

}  // namespace mslp
