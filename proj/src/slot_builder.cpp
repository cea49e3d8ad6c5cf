#include "mslp/slot_builder.hpp"

#include <algorithm>
#include <bit>

namespace mslp {

SlotBuilder::SlotBuilder(Slot reserved) : reserved_(reserved), high_water_(reserved) {
  live_.assign(reserved + 1, true);  // 1-based; inputs are always live
}

void SlotBuilder::check(Slot k, const char* what) const {
  if (k < 1 || k > high_water_ || !live_[k])
    throw Error(std::string("builder: slot not live (") + what + ")");
}

Slot SlotBuilder::alloc(std::string name) {
  Slot k;
  if (!free_.empty()) {
    k = free_.back();
    free_.pop_back();
    live_[k] = true;
  } else {
    k = ++high_water_;
    live_.push_back(true);
  }
  if (!name.empty()) {
    if (names_.count(name)) throw Error("builder: name '" + name + "' already live");
    names_.emplace(std::move(name), k);
  }
  return k;
}

void SlotBuilder::release(Slot k) {
  if (k <= reserved_) throw Error("builder: cannot release an input slot");
  check(k, "release");
  live_[k] = false;
  free_.push_back(k);
  for (auto it = names_.begin(); it != names_.end(); ++it)
    if (it->second == k) {
      names_.erase(it);
      break;
    }
}

Slot SlotBuilder::named(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end()) throw Error("builder: unknown name '" + name + "'");
  return it->second;
}

void SlotBuilder::copy(Slot dst, Slot src) {
  check(dst, "copy dst");
  check(src, "copy src");
  instructions_.push_back(Instruction::copy_of(dst, src));
}

void SlotBuilder::mul(Slot dst, Slot a, Slot b) {
  check(dst, "mul dst");
  check(a, "mul lhs");
  check(b, "mul rhs");
  instructions_.push_back(Instruction::mul_of(dst, a, b));
  ++length_;
}

void SlotBuilder::inv(Slot dst, Slot src) {
  check(dst, "inv dst");
  check(src, "inv src");
  instructions_.push_back(Instruction::inv_of(dst, src));
  ++length_;
}

void SlotBuilder::show(std::vector<Slot> slots) {
  for (Slot k : slots) check(k, "show");
  instructions_.push_back(Instruction::show_of(std::move(slots)));
}

void SlotBuilder::commutator(Slot a, Slot b, Slot dst) {
  if (dst == a || dst == b) throw Error("commutator: dst must differ from the operands");
  mul(dst, b, a);    // B A
  inv(dst, dst);     // A^-1 B^-1
  mul(dst, dst, a);  // A^-1 B^-1 A
  mul(dst, dst, b);  // A^-1 B^-1 A B
}

void SlotBuilder::power(Slot src, uint64_t e, Slot dst, Slot scratch, Slot identity_slot) {
  std::pair<uint64_t, Slot> one{e, dst};
  if (e == 0) {
    if (!identity_slot) throw Error("power: exponent 0 needs an identity slot");
    copy(dst, identity_slot);
    return;
  }
  multi_power(src, std::span(&one, 1), scratch);
}

void SlotBuilder::power_signed(Slot src, int64_t e, Slot dst, Slot scratch, Slot identity_slot) {
  if (e >= 0) {
    power(src, static_cast<uint64_t>(e), dst, scratch, identity_slot);
    return;
  }
  power(src, static_cast<uint64_t>(-e), dst, scratch, identity_slot);
  inv(dst, dst);
}

void SlotBuilder::multi_power(Slot src, std::span<const std::pair<uint64_t, Slot>> powers,
                              Slot scratch) {
  int kmax = 0;
  for (const auto& [e, dst] : powers) {
    if (e == 0) throw Error("multi_power: exponents must be positive");
    if (dst == src || dst == scratch) throw Error("multi_power: slot collision");
    kmax = std::max(kmax, 63 - static_cast<int>(std::countl_zero(e)));
  }
  std::vector<bool> started(powers.size(), false);
  for (size_t j = 0; j < powers.size(); ++j)
    if (powers[j].first == 1) {
      copy(powers[j].second, src);
      started[j] = true;
    }
  if (kmax == 0) return;
  mul(scratch, src, src);  // square chain starts at src^2
  for (int i = 1; i <= kmax; ++i) {
    for (size_t j = 0; j < powers.size(); ++j) {
      const auto& [e, dst] = powers[j];
      if (!((e >> i) & 1)) continue;
      if (!started[j]) {
        if (e & 1)
          mul(dst, src, scratch);  // fold the low bit into the first product
        else
          copy(dst, scratch);
        started[j] = true;
      } else {
        mul(dst, scratch, dst);
      }
    }
    if (i < kmax) mul(scratch, scratch, scratch);
  }
}

Program SlotBuilder::take(ProgramHeader header) {
  return Program(header, high_water_, std::move(instructions_));
}

}  // namespace mslp
