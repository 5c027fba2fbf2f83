#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "semigb/errors.hpp"
#include "semigb/gf.hpp"

namespace semigb {

// Exponent-vector monomial. In the homogenized ring R' = R[y] the
// y-exponent is the last slot; with that convention a single DRL
// comparator serves both R and R'.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)),
        deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  std::uint32_t degree() const { return deg_; }
  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& m) const {
    if (e_.size() != m.e_.size())
      throw ArityMismatch("monomial arity mismatch in divisibility test");
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    if (e_.size() != m.e_.size())
      throw ArityMismatch("monomial arity mismatch in product");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
    return Monomial(std::move(r));
  }

  // Exact quotient this / m; caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    if (e_.size() != m.e_.size())
      throw ArityMismatch("monomial arity mismatch in quotient");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (m.e_[i] > e_[i]) throw Error("non-exact monomial quotient");
      r[i] = e_[i] - m.e_[i];
    }
    return Monomial(std::move(r));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size())
      throw ArityMismatch("monomial arity mismatch in lcm");
    std::vector<std::uint32_t> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size())
      throw ArityMismatch("monomial arity mismatch in coprimality test");
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

// DRL: higher total degree wins; on ties the monomial with the larger
// exponent in the rightmost differing variable is the smaller one.
// Returns <0, 0, >0 for a < b, a == b, a > b.
inline int drl_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ArityMismatch("monomial arity mismatch in comparison");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

inline bool drl_less(const Monomial& a, const Monomial& b) {
  return drl_compare(a, b) < 0;
}

enum class OrderKind { DrlX, DrlHomogenized };

// DRL on x_1 > ... > x_n, or its homogenization on x_1 > ... > x_n > y.
// Both are realized by drl_compare on the full exponent vector.
struct OrderingSpec {
  OrderKind kind = OrderKind::DrlX;

  friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;
};

struct RingCtx {
  FieldSpec field;
  std::uint32_t nvars = 0;  // count of x-variables
  bool has_hom_var = false; // y present (ring R' = R[y]), y-exponent last
  OrderingSpec ordering;

  RingCtx() = default;
  RingCtx(FieldSpec f, std::uint32_t n, bool hom = false)
      : field(f), nvars(n), has_hom_var(hom),
        ordering{hom ? OrderKind::DrlHomogenized : OrderKind::DrlX} {
    if (n < 1) throw Error("ring needs at least one variable");
  }

  std::uint32_t total_vars() const { return nvars + (has_hom_var ? 1 : 0); }

  // R' = R[y] with the homogenized ordering.
  RingCtx homogenized() const { return RingCtx(field, nvars, true); }
  // Back to R with DRL on X.
  RingCtx dehomogenized() const { return RingCtx(field, nvars, false); }

  std::string var_name(std::size_t i) const {
    if (has_hom_var && i == nvars) return "y";
    return "x" + std::to_string(i + 1);
  }

  friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exponents()) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// All monomials in `nvars` variables of total degree exactly d,
// strictly descending under DRL.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

// All monomials of total degree <= d, strictly descending under DRL.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars,
                                             std::uint32_t d);

std::string to_string(const Monomial& m, const RingCtx& ctx);

}  // namespace semigb
