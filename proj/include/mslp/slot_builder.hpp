#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mslp/matrix.hpp"
#include "mslp/program.hpp"

namespace mslp {

/// Incremental program construction over a slot pool.  Slots 1..reserved are
/// the caller's inputs; working slots are allocated from a free list and the
/// final quota is the high-water mark.  Emission validates slot references,
/// so the program under construction is well-formed at every step.
class SlotBuilder {
 public:
  explicit SlotBuilder(Slot reserved);

  Slot alloc(std::string name = {});
  void release(Slot k);
  Slot named(const std::string& name) const;

  Slot reserved() const { return reserved_; }
  Slot high_water() const { return high_water_; }

  void copy(Slot dst, Slot src);
  void mul(Slot dst, Slot a, Slot b);
  void inv(Slot dst, Slot src);
  void show(std::vector<Slot> slots);

  /// Mul + Inv instructions emitted so far.
  size_t length() const { return length_; }
  size_t size() const { return instructions_.size(); }
  const std::vector<Instruction>& instructions() const { return instructions_; }

  /// dst <- [A, B] = A^-1 B^-1 A B for A in slot a, B in slot b, leaving the
  /// operands untouched.  Exactly 4 instructions, dst the only working slot.
  void commutator(Slot a, Slot b, Slot dst);

  /// dst <- m_src^e by repeated squaring, least-significant bit first: the
  /// square chain lives in `scratch` and the running product in dst.  At most
  /// 2*floor(log2 e) multiplications; e = 1 is a plain copy.  e = 0 needs a
  /// slot holding the identity to copy from.
  void power(Slot src, uint64_t e, Slot dst, Slot scratch, Slot identity_slot = 0);
  /// Negative exponents invert afterwards (one extra instruction).
  void power_signed(Slot src, int64_t e, Slot dst, Slot scratch, Slot identity_slot = 0);

  /// Several powers of one element sharing a single square chain in
  /// `scratch`; each exponent's running product lives in its dst slot.
  void multi_power(Slot src, std::span<const std::pair<uint64_t, Slot>> powers, Slot scratch);

  Program take(ProgramHeader header);

 private:
  Slot reserved_ = 0;
  Slot high_water_ = 0;
  std::vector<Slot> free_;
  std::vector<bool> live_;
  std::unordered_map<std::string, Slot> names_;
  std::vector<Instruction> instructions_;
  size_t length_ = 0;

  void check(Slot k, const char* what) const;
};

/// Group interface adapters for the evaluator.

struct MatrixOps {
  using Element = Matrix;
  FieldPtr field;
  uint32_t d = 0;

  Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
  Matrix inv(const Matrix& a) const { return a.inverse(); }
  Matrix identity() const { return Matrix::identity(field, d); }
};

struct PermutationOps {
  using Element = Permutation;
  uint32_t degree = 0;

  Permutation mul(const Permutation& a, const Permutation& b) const { return a * b; }
  Permutation inv(const Permutation& a) const { return a.inverse(); }
  Permutation identity() const { return Permutation(degree); }
};

}  // namespace mslp
