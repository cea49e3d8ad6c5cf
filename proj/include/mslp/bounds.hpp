#pragma once

#include <cmath>
#include <cstdint>

namespace mslp::bounds {

/// Guaranteed ceilings on emitted program length and slot usage.  The
/// generators stay within these for every input; the test suites assert the
/// measured numbers against them.

inline double log2q(uint32_t q) { return std::log2(static_cast<double>(q)); }

/// Word for a permutation over {s1, v1, v1^-1}: length cap and slot cap.
inline double perm_word_length(uint32_t d) {
  return 2.0 * d * std::log2(static_cast<double>(d)) + 4.0 * d;
}
inline constexpr uint32_t perm_word_slots = 8;

/// Word for a diagonal matrix over the ten standard generator slots.
inline double diag_word_length(uint32_t d, uint32_t q) {
  return 2.0 * d * std::log2(static_cast<double>(d)) + 2.0 * d * log2q(q) + 3.0 * d;
}
inline constexpr uint32_t diag_word_slots = 15;

/// Reduction of g to monomial form by transvection multiplications.
inline double reduction_length(uint32_t d, uint32_t q, uint32_t f) {
  double dd = d;
  return dd * dd * (2.0 * log2q(q) + 5.0 * f + 10.0) + 4.0 * dd * (log2q(q) + 1.0) +
         (5.0 * f + 2.0);
}
inline uint32_t reduction_slots(uint32_t d, uint32_t f) {
  return (d % 2 == 0 ? 2 * f : f) + 18;
}

/// Whole pipeline: includes the word for the monomial part.
inline uint32_t pipeline_slots(uint32_t f) { return 2 * f + 18; }
inline constexpr double pipeline_length_ratio = 20.0;  // vs d^2 log2(q)

/// Per-call ceilings for the two column-clearing subroutines.
inline double first_transvections_length(uint32_t r, uint32_t q, uint32_t f) {
  return f * (2.0 * r - 1.0) + 2.0 * log2q(q) + 2.0;
}
inline double left_update_length(uint32_t q, uint32_t f) {
  return 2.0 * log2q(q) + 3.0 * f + 10.0;
}

/// One-off basis construction t_21(w^l), l < f.
inline uint32_t t21_basis_length(uint32_t f) { return 5 * f - 1; }

/// Arbitrary-coefficient transvection from a basis.
inline double arbitrary_transvection_length(uint32_t q, uint32_t f) {
  return 2.0 * log2q(q) + f - 1.0;
}

}  // namespace mslp::bounds
