#include "taulog/coding.hpp"

#include "taulog/errors.hpp"

namespace taulog {
namespace {

Index checked_add(Index a, Index b) {
  Index r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("formula code exceeds the 128-bit range");
  return r;
}

Index checked_mul(Index a, Index b) {
  Index r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("formula code exceeds the 128-bit range");
  return r;
}

// Triangular number s(s+1)/2, overflow-checked.
Index tri(Index s) {
  Index s1 = checked_add(s, 1);
  return (s % 2 == 0) ? checked_mul(s / 2, s1) : checked_mul(s, s1 / 2);
}

// tri(s) <= z without throwing on large s.
bool tri_le(Index s, Index z) {
  Index s1;
  if (__builtin_add_overflow(s, Index{1}, &s1)) return false;
  Index t;
  bool ovf = (s % 2 == 0) ? __builtin_mul_overflow(s / 2, s1, &t)
                          : __builtin_mul_overflow(s, s1 / 2, &t);
  return !ovf && t <= z;
}

// Cantor pairing, a bijection N x N -> N.
Index pair(Index x, Index y) {
  return checked_add(tri(checked_add(x, y)), y);
}

void unpair(Index z, Index& x, Index& y) {
  // Largest s with tri(s) <= z, found without floating point. tri(s) <= z
  // forces s < 2^66 for any 128-bit z, so the search range is safe.
  Index lo = 0, hi = Index{1} << 66;
  while (lo < hi) {
    Index mid = lo + (hi - lo + 1) / 2;
    if (tri_le(mid, z)) lo = mid;
    else hi = mid - 1;
  }
  y = z - tri(lo);
  x = lo - y;
}

// 0-based code. Layout: 0 is bot; for n >= 1, (n-1) mod 4 selects
// variable / and / or / imp and (n-1) div 4 carries the payload.
Index base_of(const FormulaRef& f) {
  switch (f->kind()) {
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Var:
      return checked_add(checked_mul(4, f->var_index() - 1), 1);
    case Formula::Kind::Top:
      throw error("top has no code: it is not part of the proof language");
    default: {
      Index p = pair(base_of(f->left()), base_of(f->right()));
      Index tag = f->kind() == Formula::Kind::And ? 2
                : f->kind() == Formula::Kind::Or  ? 3
                                                  : 4;
      return checked_add(checked_mul(4, p), tag);
    }
  }
}

FormulaRef decode_base(Index n) {
  if (n == 0) return Formula::bot();
  Index m = n - 1;
  Index tag = m % 4, payload = m / 4;
  if (tag == 0) return Formula::var(payload + 1);
  Index a, b;
  unpair(payload, a, b);
  FormulaRef l = decode_base(a), r = decode_base(b);
  switch (tag) {
    case 1: return Formula::conj(std::move(l), std::move(r));
    case 2: return Formula::disj(std::move(l), std::move(r));
    default: return Formula::impl(std::move(l), std::move(r));
  }
}

}  // namespace

Index code_of(const FormulaRef& f) {
  return checked_add(base_of(f), 1);
}

FormulaRef decode(Index code) {
  if (code == 0) throw error("codes start at 1");
  return decode_base(code - 1);
}

}  // namespace taulog
