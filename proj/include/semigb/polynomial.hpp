#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigb/monomial.hpp"

namespace semigb {

struct Term {
  std::uint32_t coeff = 0;  // canonical representative in [0, p)
  Monomial mono;
};

// Sparse polynomial: terms strictly descending under DRL, no zero
// coefficients. Equal polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingCtx ctx) : ctx_(std::move(ctx)) {}
  // Normalizes an arbitrary term soup: merges like monomials, drops zeros,
  // sorts descending.
  Polynomial(RingCtx ctx, std::vector<Term> terms);

  const RingCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& lm() const;      // leading monomial
  std::uint32_t lc() const;        // leading coefficient
  const Term& lt() const;          // leading term
  std::uint32_t degree() const;    // total degree; throws ZeroInput on 0

  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  // Multiply by the term c * t.
  Polynomial times_term(std::uint32_t c, const Monomial& t) const;
  Polynomial times_scalar(std::uint32_t c) const;
  Polynomial operator*(const Polynomial& g) const;

  Polynomial monic() const;  // scale so lc == 1; throws ZeroInput on 0

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Adopts a term list already in canonical form (strictly descending,
  // nonzero coefficients).
  static Polynomial from_canonical(RingCtx ctx, std::vector<Term> terms) {
    Polynomial r(std::move(ctx));
    r.terms_ = std::move(terms);
    return r;
  }

 private:
  RingCtx ctx_;
  std::vector<Term> terms_;
};

struct PolySequence {
  std::vector<Polynomial> polys;

  PolySequence() = default;
  explicit PolySequence(std::vector<Polynomial> ps);

  const RingCtx& ctx() const;
  std::size_t size() const { return polys.size(); }
  std::vector<std::uint32_t> degrees() const;
  bool is_homogeneous() const;
};

// f^h: each term t gets y^{deg(f) - deg(t)}; lives in R' = R[y].
Polynomial homogenize(const Polynomial& f);
PolySequence homogenize(const PolySequence& F);

// h|_{y=1}, like terms merged, back in R with DRL on X.
Polynomial dehomogenize(const Polynomial& h);
PolySequence dehomogenize(const PolySequence& H);

// For f in R: the graded component of degree deg(f).
// For homogeneous h in R': h with every y-divisible term deleted (may be 0).
Polynomial top_part(const Polynomial& f);
PolySequence top_part(const PolySequence& F);

// S(f,g) = (L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g)).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full normal form: no term of the result divisible by any LM(g), g in G.
// Deterministic: always reduce the largest reducible term, pick the reducer
// with the smallest index in G.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G);

std::string to_string(const Polynomial& f);

}  // namespace semigb
