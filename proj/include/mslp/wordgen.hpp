#pragma once

#include <span>

#include "mslp/generators.hpp"
#include "mslp/slot_builder.hpp"

namespace mslp {

/// Input slots for the permutation word machinery: s1 holds a transposition
/// swapping the first two points of the cycle, v1 the inverse of the d-cycle,
/// v1_inv the d-cycle itself.
struct PermWordInputs {
  Slot s1 = 0;
  Slot v1 = 0;
  Slot v1_inv = 0;
};

/// Emits a word over the input slots whose evaluation equals `target`
/// (permutation instance) or a monomial preimage of it (matrix instance).
/// Writes the result to dst (allocated when 0) and returns that slot; an
/// identity target emits nothing, leaving the slot's initial identity.
/// Length <= 2d log2(d) + 4d; at most 5 working slots beyond the inputs.
Slot emit_perm_word(SlotBuilder& b, const Permutation& target, const PermWordInputs& in,
                    Slot dst = 0);

/// Emits a word over the standard generator slots (yslot layout, slots 1-10)
/// evaluating to diag(w^{dlogs[0]}, ..., w^{dlogs[d-1]}).  The exponent sum
/// must vanish mod q-1 (determinant one).  Length <= 2d log2(d) +
/// 2d log2(q) + 3d; at most 5 working slots beyond the ten inputs.
Slot emit_diag_word(SlotBuilder& b, const Field& field, uint32_t d,
                    std::span<const uint32_t> dlogs, Slot dst = 0);

/// Emits a word over the standard generator slots evaluating to the monomial
/// matrix w, writing it to dst.  Decomposes w = h * w' with psi(w') = psi(w)
/// and h diagonal, per the strategy above.
Slot emit_monomial_word(SlotBuilder& b, const StandardGenerators& gens, const Matrix& w,
                        Slot dst);

/// Standalone program over the 13-slot generator layout; evaluated on
/// Y(1, 1, 1) it leaves w in the payload slot and shows it.
Program monomial_word(const StandardGenerators& gens, const Matrix& w);

/// Standalone permutation-word program over three input slots
/// (s1, v1, v1_inv) = (1, 2, 3); shows the result slot.
Program perm_word_program(const Permutation& target, ProgramHeader header);

/// Standalone diagonal-word program over the ten generator slots.
Program diag_word_program(const Field& field, uint32_t d, std::span<const uint32_t> dlogs,
                          ProgramHeader header);

}  // namespace mslp
