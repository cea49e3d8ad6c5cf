#include "mslp/field.hpp"

#include <algorithm>
#include <cmath>

namespace mslp {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> ps;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

uint32_t mulmod_u32(uint32_t a, uint32_t b, uint32_t m) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % m);
}

uint32_t powmod_u32(uint32_t a, uint64_t e, uint32_t m) {
  uint32_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u32(r, a, m);
    a = mulmod_u32(a, a, m);
    e >>= 1;
  }
  return r;
}

uint32_t smallest_primitive_root(uint32_t p) {
  if (p == 2) return 1;
  auto ps = prime_factors(p - 1);
  for (uint32_t r = 2; r < p; ++r) {
    bool ok = true;
    for (uint32_t pr : ps)
      if (powmod_u32(r, (p - 1) / pr, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  throw Error("no primitive root found");  // unreachable for prime p
}

// Dense little-endian polynomials over F_p, for modulus selection only.
using Poly = std::vector<uint32_t>;

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

// a mod b for monic b.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
  int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    uint32_t c = a[da];
    for (int i = 0; i <= db; ++i) {
      uint64_t t = a[da - db + i] + static_cast<uint64_t>(p - 1) * c % p * b[i];
      a[da - db + i] = static_cast<uint32_t>(t % p);
    }
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, uint32_t p) {
  return degree(poly_mod(a, d, p)) < 0;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& m, uint32_t p) {
  int dm = degree(m);
  for (int dd = 1; dd <= dm / 2; ++dd) {
    Poly cand(dd + 1, 0);
    cand[dd] = 1;
    // enumerate all p^dd choices of lower coefficients
    uint64_t total = 1;
    for (int i = 0; i < dd; ++i) total *= p;
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        cand[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t f) : p_(p), f_(f) {
  if (!is_prime(p)) throw Error("field characteristic must be prime");
  if (f < 1) throw Error("field extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error("field order exceeds 2^20");
  }
  q_ = static_cast<uint32_t>(q);

  if (f_ == 1) {
    uint32_t r = smallest_primitive_root(p);
    modulus_ = {(p - r) % p, 1};  // x - r
    omega_packed_ = r % p;
    build_tables();
    return;
  }

  // Lexicographically smallest monic irreducible with x primitive, comparing
  // coefficient tuples (c_{f-1}, ..., c_0) in ascending order.
  auto qm1_factors = prime_factors(q_ - 1);
  uint64_t total = 1;
  for (uint32_t i = 0; i < f; ++i) total *= p;
  for (uint64_t code = 0; code < total; ++code) {
    Poly m(f + 1, 0);
    m[f] = 1;
    uint64_t c = code;
    for (int i = static_cast<int>(f) - 1; i >= 0; --i) {
      m[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    if (m[0] == 0) continue;  // divisible by x
    if (!is_irreducible(m, p)) continue;
    modulus_ = m;
    omega_packed_ = p;  // the class of x: coefficients (0, 1, 0, ...)
    build_tables();
    bool primitive = true;
    for (uint32_t pr : qm1_factors)
      if (pow(omega(), (q_ - 1) / pr) == one()) {
        primitive = false;
        break;
      }
    if (primitive) return;
  }
  throw Error("no primitive modulus found");  // unreachable for valid (p, f)
}

void Field::build_tables() {
  // x^{f+k} mod modulus for k = 0..f-2
  reduction_.assign(f_ >= 1 ? f_ - 1 : 0, std::vector<uint32_t>(f_, 0));
  if (f_ >= 2) {
    // x^f = -(c_0 + c_1 x + ... + c_{f-1} x^{f-1})
    std::vector<uint32_t> cur(f_);
    for (uint32_t i = 0; i < f_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
    reduction_[0] = cur;
    for (uint32_t k = 1; k + 1 < f_; ++k) {
      // multiply cur by x and reduce
      std::vector<uint32_t> next(f_, 0);
      uint32_t top = cur[f_ - 1];
      for (uint32_t i = f_ - 1; i >= 1; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top) {
        for (uint32_t i = 0; i < f_; ++i) {
          uint64_t t = next[i] + static_cast<uint64_t>(top) * reduction_[0][i];
          next[i] = static_cast<uint32_t>(t % p_);
        }
      }
      cur = next;
      reduction_[k] = cur;
    }
  }

  // baby-step/giant-step tables
  uint32_t n = q_ - 1;
  bsgs_m_ = std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(std::sqrt(double(n)))));
  baby_.reserve(bsgs_m_ * 2);
  FieldElement cur = one();
  for (uint32_t j = 0; j < bsgs_m_; ++j) {
    baby_.emplace(cur.packed, j);
    cur = mul(cur, omega());
  }
  giant_packed_ = pow(omega(), (n - bsgs_m_ % n) % n).packed;  // omega^{-m}
}

uint64_t Field::modulus_packed() const {
  uint64_t v = 0;
  uint64_t base = 1;
  for (uint32_t i = 0; i <= f_; ++i) {
    v += static_cast<uint64_t>(modulus_[i]) * base;
    base *= p_;
  }
  return v;
}

FieldElement Field::element(uint32_t packed) const {
  if (packed >= q_) throw Error("field element out of range");
  return {packed};
}

void Field::unpack(uint32_t v, uint32_t* digits) const {
  for (uint32_t i = 0; i < f_; ++i) {
    digits[i] = v % p_;
    v /= p_;
  }
}

uint32_t Field::pack(const uint32_t* digits) const {
  uint32_t v = 0;
  for (uint32_t i = f_; i-- > 0;) v = v * p_ + digits[i];
  return v;
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& a) const {
  if (a.size() != f_) throw Error("coefficient vector has wrong length");
  uint32_t v = 0;
  for (uint32_t i = f_; i-- > 0;) {
    if (a[i] >= p_) throw Error("coefficient out of range");
    v = v * p_ + a[i];
  }
  return {v};
}

std::vector<uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<uint32_t> out(f_);
  uint32_t v = a.packed;
  for (uint32_t i = 0; i < f_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.packed ^ b.packed};
  uint32_t da[32], db[32];
  unpack(a.packed, da);
  unpack(b.packed, db);
  for (uint32_t i = 0; i < f_; ++i) da[i] = (da[i] + db[i]) % p_;
  return {pack(da)};
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  uint32_t d[32];
  unpack(a.packed, d);
  for (uint32_t i = 0; i < f_; ++i) d[i] = (p_ - d[i]) % p_;
  return {pack(d)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (q_ == 2) return {a.packed & b.packed};
  if (a.packed == 0 || b.packed == 0) return zero();
  if (f_ == 1)
    return {mulmod_u32(a.packed, b.packed, p_)};
  uint32_t da[32], db[32];
  unpack(a.packed, da);
  unpack(b.packed, db);
  uint64_t conv[63] = {0};
  for (uint32_t i = 0; i < f_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < f_; ++j) conv[i + j] += static_cast<uint64_t>(da[i]) * db[j];
  }
  uint32_t out[32];
  for (uint32_t i = 0; i < f_; ++i) out[i] = static_cast<uint32_t>(conv[i] % p_);
  for (uint32_t k = f_; k <= 2 * f_ - 2; ++k) {
    uint32_t c = static_cast<uint32_t>(conv[k] % p_);
    if (!c) continue;
    const auto& red = reduction_[k - f_];
    for (uint32_t i = 0; i < f_; ++i)
      out[i] = static_cast<uint32_t>((out[i] + static_cast<uint64_t>(c) * red[i]) % p_);
  }
  return {pack(out)};
}

FieldElement Field::pow(FieldElement a, uint64_t e) const {
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.packed == 0) throw Error("inversion of zero field element");
  return pow(a, q_ - 2);
}

uint32_t Field::dlog(FieldElement a) const {
  if (a.packed == 0) throw Error("dlog of zero");
  uint32_t n = q_ - 1;
  FieldElement cur = a;
  FieldElement giant{giant_packed_};
  for (uint32_t i = 0; i <= bsgs_m_; ++i) {
    auto it = baby_.find(cur.packed);
    if (it != baby_.end()) {
      uint64_t k = static_cast<uint64_t>(i) * bsgs_m_ + it->second;
      return static_cast<uint32_t>(k % n);
    }
    cur = mul(cur, giant);
  }
  throw Error("dlog failed");  // unreachable for a != 0
}

std::string Field::to_string(FieldElement a) const { return std::to_string(a.packed); }

FieldPtr make_field(uint32_t p, uint32_t f) { return std::make_shared<Field>(p, f); }

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
  if (q < 2) throw Error("field order must be >= 2");
  for (uint32_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      uint32_t f = 0, n = q;
      while (n % p == 0) {
        n /= p;
        ++f;
      }
      if (n != 1) throw Error("field order is not a prime power");
      return {p, f};
    }
  }
  return {q, 1};  // q prime
}

}  // namespace mslp
