#include "semigb/polynomial.hpp"

#include <algorithm>

namespace semigb {

Polynomial::Polynomial(RingCtx ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)) {
  const std::uint32_t p = ctx_.field.p;
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return drl_compare(a.mono, b.mono) > 0;
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % p;
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = gf::add(terms_.back().coeff, c, p);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (c != 0) {
      terms_.push_back({c, std::move(t.mono)});
    }
  }
}

const Monomial& Polynomial::lm() const {
  if (is_zero()) throw ZeroInput("leading monomial of zero polynomial");
  return terms_.front().mono;
}

std::uint32_t Polynomial::lc() const {
  if (is_zero()) throw ZeroInput("leading coefficient of zero polynomial");
  return terms_.front().coeff;
}

const Term& Polynomial::lt() const {
  if (is_zero()) throw ZeroInput("leading term of zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::degree() const {
  if (is_zero()) throw ZeroInput("degree of zero polynomial");
  return terms_.front().mono.degree();  // graded ordering: LM has max degree
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  const std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

// Merge two descending term lists with coefficient combination c = a + s*b.
static Polynomial merge(const Polynomial& f, const Polynomial& g,
                        std::uint32_t scale_g) {
  const RingCtx& ctx = f.ctx();
  const std::uint32_t p = ctx.field.p;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    int cmp = drl_compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      std::uint32_t c = gf::mul(scale_g, b[j].coeff, p);
      if (c) out.push_back({c, b[j].mono});
      ++j;
    } else {
      std::uint32_t c =
          gf::add(a[i].coeff, gf::mul(scale_g, b[j].coeff, p), p);
      if (c) out.push_back({c, a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    std::uint32_t c = gf::mul(scale_g, b[j].coeff, p);
    if (c) out.push_back({c, b[j].mono});
  }
  return Polynomial::from_canonical(ctx, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  if (ctx_ != g.ctx_) throw ArityMismatch("polynomial ring mismatch in +");
  return merge(*this, g, 1);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  if (ctx_ != g.ctx_) throw ArityMismatch("polynomial ring mismatch in -");
  return merge(*this, g, ctx_.field.p - 1);
}

Polynomial Polynomial::operator-() const {
  return times_scalar(ctx_.field.p - 1);
}

Polynomial Polynomial::times_term(std::uint32_t c, const Monomial& t) const {
  const std::uint32_t p = ctx_.field.p;
  c %= p;
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_)
    out.push_back({gf::mul(term.coeff, c, p), term.mono * t});
  // multiplication by a monomial preserves the DRL order
  return from_canonical(ctx_, std::move(out));
}

Polynomial Polynomial::times_scalar(std::uint32_t c) const {
  return times_term(c, Monomial::one(ctx_.total_vars()));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (ctx_ != g.ctx_) throw ArityMismatch("polynomial ring mismatch in *");
  Polynomial acc(ctx_);
  for (const auto& t : g.terms_) acc = acc + times_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw ZeroInput("monic form of zero polynomial");
  return times_scalar(gf::inv(lc(), ctx_.field.p));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ctx() != b.ctx()) return false;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].coeff != b.terms()[i].coeff ||
        !(a.terms()[i].mono == b.terms()[i].mono))
      return false;
  }
  return true;
}

PolySequence::PolySequence(std::vector<Polynomial> ps) : polys(std::move(ps)) {
  if (polys.empty()) throw ZeroInput("empty polynomial sequence");
  for (const auto& f : polys) {
    if (f.is_zero()) throw ZeroInput("zero polynomial in sequence");
    if (f.ctx() != polys.front().ctx())
      throw ArityMismatch("mixed ring contexts in sequence");
  }
}

const RingCtx& PolySequence::ctx() const { return polys.front().ctx(); }

std::vector<std::uint32_t> PolySequence::degrees() const {
  std::vector<std::uint32_t> d;
  d.reserve(polys.size());
  for (const auto& f : polys) d.push_back(f.degree());
  return d;
}

bool PolySequence::is_homogeneous() const {
  for (const auto& f : polys)
    if (!f.is_homogeneous()) return false;
  return true;
}

Polynomial homogenize(const Polynomial& f) {
  if (f.is_zero()) throw ZeroInput("homogenize(0)");
  if (f.ctx().has_hom_var)
    throw ArityMismatch("homogenize expects a polynomial in R, not R'");
  RingCtx hctx = f.ctx().homogenized();
  const std::uint32_t d = f.degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.push_back(d - t.mono.degree());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(hctx, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& h) {
  if (!h.ctx().has_hom_var)
    throw ArityMismatch("dehomogenize expects a polynomial in R'");
  RingCtx ctx = h.ctx().dehomogenized();
  std::vector<Term> terms;
  terms.reserve(h.size());
  for (const auto& t : h.terms()) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.pop_back();
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(ctx, std::move(terms));
}

Polynomial top_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroInput("top_part(0)");
  std::vector<Term> terms;
  if (f.ctx().has_hom_var) {
    if (!f.is_homogeneous())
      throw NotHomogeneous("top part in R' is defined for homogeneous input");
    const std::size_t ypos = f.ctx().nvars;
    for (const auto& t : f.terms())
      if (t.mono[ypos] == 0) terms.push_back(t);
  } else {
    const std::uint32_t d = f.degree();
    for (const auto& t : f.terms())
      if (t.mono.degree() == d) terms.push_back(t);
  }
  return Polynomial(f.ctx(), std::move(terms));
}

PolySequence homogenize(const PolySequence& F) {
  std::vector<Polynomial> out;
  out.reserve(F.size());
  for (const auto& f : F.polys) out.push_back(homogenize(f));
  return PolySequence(std::move(out));
}

PolySequence dehomogenize(const PolySequence& H) {
  std::vector<Polynomial> out;
  out.reserve(H.size());
  for (const auto& h : H.polys) out.push_back(dehomogenize(h));
  return PolySequence(std::move(out));
}

PolySequence top_part(const PolySequence& F) {
  std::vector<Polynomial> out;
  out.reserve(F.size());
  for (const auto& f : F.polys) out.push_back(top_part(f));
  return PolySequence(std::move(out));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("S-polynomial of zero");
  if (f.ctx() != g.ctx())
    throw ArityMismatch("polynomial ring mismatch in S-polynomial");
  const std::uint32_t p = f.ctx().field.p;
  Monomial L = lcm(f.lm(), g.lm());
  Polynomial a = f.times_term(gf::inv(f.lc(), p), L / f.lm());
  Polynomial b = g.times_term(gf::inv(g.lc(), p), L / g.lm());
  return a - b;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
  const std::uint32_t p = f.ctx().field.p;
  Polynomial h = f;
  std::vector<Term> out;
  while (!h.is_zero()) {
    const Term& t = h.lt();
    const Polynomial* reducer = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && g.lm().divides(t.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      out.push_back(t);
      Polynomial lead(h.ctx(), {t});
      h = h - lead;
    } else {
      std::uint32_t c = gf::mul(t.coeff, gf::inv(reducer->lc(), p), p);
      h = h - reducer->times_term(c, t.mono / reducer->lm());
    }
  }
  // leading terms were peeled off in strictly descending order
  return Polynomial::from_canonical(f.ctx(), std::move(out));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      s += to_string(t.mono, f.ctx());
    } else {
      s += std::to_string(t.coeff) + "*" + to_string(t.mono, f.ctx());
    }
  }
  return s;
}

}  // namespace semigb
