#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mslp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of GF(p^f), stored packed: value = sum a_l * p^l for the
/// coefficient vector (a_0, ..., a_{f-1}) over F_p in the primitive element.
/// The packed integer is the canonical form: two elements are equal iff
/// their packed values are equal.  It is also the serialized form used in
/// matrix files and CLI output.
struct FieldElement {
  uint32_t packed = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
};

/// GF(p^f) with a deterministic modulus and primitive element omega:
///   - f = 1: modulus x - r, r the smallest primitive root mod p (r = 1 for p = 2);
///   - f >= 2: the lexicographically smallest monic irreducible polynomial of
///     degree f (coefficients compared from x^{f-1} down to the constant term)
///     for which the residue class of x generates the multiplicative group;
///     omega is the class of x.
/// The same (p, f) always yields the same field, so programs serialized with a
/// (p, f, modulus) header evaluate identically everywhere.
///
/// Immutable after construction and safe to share across threads.
class Field {
 public:
  static constexpr uint32_t kMaxOrder = 1u << 20;

  Field(uint32_t p, uint32_t f);

  uint32_t p() const { return p_; }
  uint32_t f() const { return f_; }
  uint32_t q() const { return q_; }
  bool is_gf2() const { return q_ == 2; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement omega() const { return {omega_packed_}; }

  /// Modulus coefficients (c_0, ..., c_f), monic so c_f = 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  /// Modulus packed base p over its f+1 coefficients (header encoding).
  uint64_t modulus_packed() const;

  FieldElement element(uint32_t packed) const;
  FieldElement from_coeffs(const std::vector<uint32_t>& a) const;
  /// Coefficient vector (a_0, ..., a_{f-1}) of a as a polynomial in omega.
  std::vector<uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // throws on 0
  FieldElement pow(FieldElement a, uint64_t e) const;

  /// Discrete logarithm base omega via baby-step/giant-step: the unique
  /// k in [0, q-1) with omega^k = a.  Throws on 0.
  uint32_t dlog(FieldElement a) const;

  std::string to_string(FieldElement a) const;

  friend bool operator==(const Field& lhs, const Field& rhs) {
    return lhs.p_ == rhs.p_ && lhs.f_ == rhs.f_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  uint32_t p_ = 0;
  uint32_t f_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;  // c_0..c_f, monic
  uint32_t omega_packed_ = 0;

  // x^{f+k} mod modulus for k = 0..f-2, each as f coefficients.
  std::vector<std::vector<uint32_t>> reduction_;

  // baby-step/giant-step tables for dlog
  uint32_t bsgs_m_ = 0;
  uint32_t giant_packed_ = 0;  // omega^{-m}
  std::unordered_map<uint32_t, uint32_t> baby_;

  void unpack(uint32_t v, uint32_t* digits) const;
  uint32_t pack(const uint32_t* digits) const;
  void build_tables();
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds the canonical GF(p^f); validates p prime, f >= 1, p^f <= 2^20.
FieldPtr make_field(uint32_t p, uint32_t f);

/// Recovers (p, f) from a prime-power order q; throws if q is not one.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q);

}  // namespace mslp
