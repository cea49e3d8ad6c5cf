#pragma once

#include <vector>

#include "mslp/matrix.hpp"

namespace mslp {

/// Fixed slot layout of the generator list
///   Y = [s, s^-1, t, t^-1, delta, delta^-1, v, v^-1, x, x^-1, w, u1, u2]
/// used by every emitted decomposition program.  Slot k of a program is
/// position k of Y for k <= 13; slots 11-13 carry the mutable payload.
namespace yslot {
inline constexpr uint32_t s = 1;
inline constexpr uint32_t s_inv = 2;
inline constexpr uint32_t t = 3;
inline constexpr uint32_t t_inv = 4;
inline constexpr uint32_t delta = 5;
inline constexpr uint32_t delta_inv = 6;
inline constexpr uint32_t v = 7;
inline constexpr uint32_t v_inv = 8;
inline constexpr uint32_t x = 9;
inline constexpr uint32_t x_inv = 10;
inline constexpr uint32_t w = 11;
inline constexpr uint32_t u1 = 12;
inline constexpr uint32_t u2 = 13;
inline constexpr uint32_t count = 13;
}  // namespace yslot

/// The Leedham-Green--O'Brien standard generators of SL(d, q) and their
/// inverses.  x is the identity when d is odd.  Construction verifies
/// det = 1 for each generator and the expected images under psi.
struct StandardGenerators {
  FieldPtr field;
  uint32_t d = 0;
  Matrix s, s_inv, t, t_inv, delta, delta_inv, v, v_inv, x, x_inv;

  const Matrix& slot(uint32_t k) const;  // k in [1, 10]
};

/// Builds the standard generators; requires d >= 3 (and hence d >= 4 when
/// d is even, since the x block is 4 x 4).
StandardGenerators standard_generators(const FieldPtr& field, uint32_t d);

/// Initial evaluation memory Y(w0, u10, u20) padded with identities to
/// `quota` slots.
std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota,
                                   const Matrix& w0, const Matrix& u10, const Matrix& u20);

/// Y(payload, 1, 1) -- the memory a reduction program is evaluated on.
std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota,
                                   const Matrix& payload);

/// Y(1, 1, 1) -- the memory a pure generator word is evaluated on.
std::vector<Matrix> initial_memory(const StandardGenerators& gens, uint32_t quota);

}  // namespace mslp
