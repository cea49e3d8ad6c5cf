#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mslp/field.hpp"

namespace mslp {

using Slot = uint32_t;

class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string& msg)
      : Error("parse error: line " + std::to_string(line) + ": " + msg), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

enum class Op : uint8_t { copy, mul, inv, show };

/// One MSLP instruction over memory slots 1..b:
///   copy  m_dst <- m_a
///   mul   m_dst <- m_a * m_b
///   inv   m_dst <- inv m_a
///   show  emit the listed slots, in the given order
struct Instruction {
  Op op = Op::copy;
  Slot dst = 0, a = 0, b = 0;
  std::vector<Slot> slots;  // show only

  static Instruction copy_of(Slot dst, Slot src) { return {Op::copy, dst, src, 0, {}}; }
  static Instruction mul_of(Slot dst, Slot a, Slot b) { return {Op::mul, dst, a, b, {}}; }
  static Instruction inv_of(Slot dst, Slot src) { return {Op::inv, dst, src, 0, {}}; }
  static Instruction show_of(std::vector<Slot> slots) {
    return {Op::show, 0, 0, 0, std::move(slots)};
  }

  bool counted() const { return op == Op::mul || op == Op::inv; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Field and dimension a program is bound to; recorded in the serialized
/// header so evaluations are reproducible.
struct ProgramHeader {
  uint32_t d = 0;
  uint32_t p = 0;
  uint32_t f = 0;
  uint64_t modulus_packed = 0;

  static ProgramHeader of(const Field& field, uint32_t d);
  friend bool operator==(const ProgramHeader&, const ProgramHeader&) = default;
};

struct ProgramStats {
  size_t length = 0;      // muls + invs; copies and shows are free
  size_t copies = 0;
  size_t shows = 0;
  uint32_t quota = 0;
  uint32_t peak_slots = 0;  // distinct slots ever read or written

  std::string to_text() const;  // key=value lines (without field_ops/d/q)
};

/// A straight-line program with memory: a declared slot quota b plus an
/// instruction sequence whose slot references all lie in [1, b].
class Program {
 public:
  Program(ProgramHeader header, uint32_t quota, std::vector<Instruction> instructions);

  const ProgramHeader& header() const { return header_; }
  uint32_t quota() const { return quota_; }
  const std::vector<Instruction>& instructions() const { return instructions_; }
  size_t size() const { return instructions_.size(); }
  bool empty() const { return instructions_.empty(); }

  /// Number of mul/inv instructions (copies and shows relabel or report,
  /// they cost no group operation).
  size_t length() const;
  ProgramStats stats() const;

  std::string serialize() const;
  static Program parse(std::istream& in);
  static Program parse(const std::string& text);

  friend bool operator==(const Program&, const Program&) = default;

 private:
  ProgramHeader header_;
  uint32_t quota_ = 0;
  std::vector<Instruction> instructions_;
};

/// S1 followed by S2 in the same slot space; quota is the max of the two.
/// Headers must agree.
Program concat(const Program& s1, const Program& s2);

/// Evaluates instructions s..t of S on memory M (1-based instruction
/// indices; s = t = 0 evaluates nothing).  Returns, per the final
/// instruction: [identity] when s = t = 0, the element written for
/// copy/mul/inv, or the listed slots for show.  Ops supplies the group:
/// it needs mul(a, b), inv(a) and identity().
template <class Ops>
std::vector<typename Ops::Element> eval(const Program& S,
                                        std::vector<typename Ops::Element>& M, size_t s,
                                        size_t t, const Ops& ops) {
  using Element = typename Ops::Element;
  if (M.size() != S.quota()) throw Error("memory length does not match program quota");
  if (s == 0 && t == 0) return {ops.identity()};
  if (!(1 <= s && s <= t && t <= S.size())) throw Error("eval range out of bounds");
  const auto& ins = S.instructions();
  for (size_t r = s; r <= t; ++r) {
    const Instruction& I = ins[r - 1];
    switch (I.op) {
      case Op::copy: {
        Element tmp = M[I.a - 1];
        M[I.dst - 1] = std::move(tmp);
        break;
      }
      case Op::mul: {
        Element tmp = ops.mul(M[I.a - 1], M[I.b - 1]);
        M[I.dst - 1] = std::move(tmp);
        break;
      }
      case Op::inv: {
        Element tmp = ops.inv(M[I.a - 1]);
        M[I.dst - 1] = std::move(tmp);
        break;
      }
      case Op::show:
        break;
    }
  }
  const Instruction& last = ins[t - 1];
  if (last.op == Op::show) {
    std::vector<Element> out;
    out.reserve(last.slots.size());
    for (Slot k : last.slots) out.push_back(M[k - 1]);
    return out;
  }
  return {M[last.dst - 1]};
}

/// Evaluates the whole program.
template <class Ops>
std::vector<typename Ops::Element> eval(const Program& S,
                                        std::vector<typename Ops::Element>& M,
                                        const Ops& ops) {
  if (S.empty()) return eval(S, M, 0, 0, ops);
  return eval(S, M, 1, S.size(), ops);
}

}  // namespace mslp
