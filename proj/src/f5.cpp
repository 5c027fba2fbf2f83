#include "semigb/f5.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "semigb/errors.hpp"

namespace semigb {

namespace {

struct QItem {
  Signature sig;
  bool is_pair = false;
  std::size_t gen = 0;   // generator index when !is_pair
  std::size_t a = 0, b = 0;  // basis indices when is_pair
  Monomial ua, ub;           // multipliers onto the pair lcm
};

class F5Engine {
 public:
  F5Engine(const PolySequence& F, EngineOptions opts)
      : ctx_(F.ctx()), opts_(std::move(opts)), gens_(), order_(make_order(F)) {
    for (const auto& f : F.polys) gens_.push_back(f.monic());
    // Schreyer leading terms of the trivial syzygies f_i e_j - f_j e_i:
    // equal key monomials LM(f_i f_j), larger index smaller, so the lead
    // lands on the e_i side (i < j) with monomial LM(f_j).
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        syz_sigs_.push_back({gens_[j].lm(), i});
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      QItem it;
      it.sig = Signature{Monomial::one(ctx_.total_vars()), i};
      it.is_pair = false;
      it.gen = i;
      push(std::move(it));
    }
  }

  // Returns true when the unit ideal was detected.
  bool run() {
    while (!queue_.empty()) {
      QItem item = *queue_.begin();
      queue_.erase(queue_.begin());
      const std::uint32_t deg = order_.poly_degree(item.sig);
      if (opts_.step_degree_cap && deg > *opts_.step_degree_cap)
        throw TimeoutDegree("signature degree " + std::to_string(deg) +
                            " beyond cap " +
                            std::to_string(*opts_.step_degree_cap));
      if (syzygy_hit(item.sig)) {
        log_.at_degree(deg).discarded_syzygy++;
        continue;
      }
      if (last_sig_ && order_.compare(*last_sig_, item.sig) == 0) {
        log_.at_degree(deg).discarded_duplicate++;
        continue;
      }
      last_sig_ = item.sig;

      Polynomial h = item.is_pair
                         ? basis_[item.a].poly.times_term(1, item.ua) -
                               basis_[item.b].poly.times_term(1, item.ub)
                         : gens_[item.gen];
      StepRecord& rec = log_.at_degree(deg);
      rec.pairs_processed++;
      log_.highest_step_degree = std::max(log_.highest_step_degree, deg);

      Polynomial r = sigma_reduce(h, item.sig);
      if (r.is_zero()) {
        rec.zero_reductions++;
        syz_sigs_.push_back(item.sig);
        continue;
      }
      r = r.monic();
      rec.new_elements++;
      rec.new_lms.push_back(r.lm());
      if (r.lm().is_one()) return true;
      add_basis_element({std::move(r), item.sig});
    }
    return false;
  }

  std::vector<Polynomial> polys() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const auto& lp : basis_) out.push_back(lp.poly);
    return out;
  }
  StepLog& log() { return log_; }

 private:
  static SchreyerOrder make_order(const PolySequence& F) {
    std::vector<Monomial> lms;
    lms.reserve(F.size());
    for (const auto& f : F.polys) lms.push_back(f.lm());
    return SchreyerOrder(std::move(lms));
  }

  struct QOrder {
    const SchreyerOrder* ord;
    bool operator()(const QItem& x, const QItem& y) const {
      int c = ord->compare(x.sig, y.sig);
      if (c != 0) return c < 0;
      if (x.is_pair != y.is_pair) return !x.is_pair;
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      return x.gen < y.gen;
    }
  };

  void push(QItem it) { queue_.insert(std::move(it)); }

  bool syzygy_hit(const Signature& s) const {
    for (const auto& z : syz_sigs_)
      if (z.index == s.index && z.mono.divides(s.mono)) return true;
    return false;
  }

  // Sigma-reduction: a reducer g with cofactor u is allowed only when
  // u sig(g) is strictly below the signature being reduced.
  Polynomial sigma_reduce(Polynomial h, const Signature& s) {
    std::vector<Term> tail;
    while (!h.is_zero()) {
      const Term& t = h.lt();
      const LabeledPoly* reducer = nullptr;
      Monomial cof;
      for (const auto& g : basis_) {
        if (!g.poly.lm().divides(t.mono)) continue;
        Monomial u = t.mono / g.poly.lm();
        Signature lifted{u * g.sig.mono, g.sig.index};
        if (order_.compare(lifted, s) < 0) {
          reducer = &g;
          cof = std::move(u);
          break;
        }
      }
      if (reducer == nullptr) {
        tail.push_back(t);
        h = h - Polynomial(ctx_, {t});
      } else {
        h = h - reducer->poly.times_term(t.coeff, cof);
      }
    }
    return Polynomial(ctx_, std::move(tail));
  }

  void add_basis_element(LabeledPoly lp) {
    const std::size_t nidx = basis_.size();
    basis_.push_back(std::move(lp));
    const LabeledPoly& neu = basis_[nidx];
    for (std::size_t b = 0; b < nidx; ++b) {
      const LabeledPoly& old = basis_[b];

      // Koszul syzygy of the pair: old*rep(new) - new*rep(old) lies in the
      // module of trivial syzygies; when the two candidate lead terms are
      // not equal signatures, the larger one is its genuine lead and can
      // prune everything it divides.
      Signature ka{old.poly.lm() * neu.sig.mono, neu.sig.index};
      Signature kb{neu.poly.lm() * old.sig.mono, old.sig.index};
      int kc = order_.compare(ka, kb);
      if (kc != 0) syz_sigs_.push_back(kc > 0 ? ka : kb);

      Monomial L = lcm(neu.poly.lm(), old.poly.lm());
      QItem it;
      it.is_pair = true;
      it.a = nidx;
      it.b = b;
      it.ua = L / neu.poly.lm();
      it.ub = L / old.poly.lm();
      Signature sa{it.ua * neu.sig.mono, neu.sig.index};
      Signature sb{it.ub * old.sig.mono, old.sig.index};
      int c = order_.compare(sa, sb);
      if (c == 0) {
        // singular pair: its S-polynomial has a strictly smaller signature
        log_.at_degree(L.degree()).discarded_duplicate++;
        continue;
      }
      it.sig = c > 0 ? sa : sb;
      if (syzygy_hit(it.sig)) {
        log_.at_degree(L.degree()).discarded_syzygy++;
        continue;
      }
      push(std::move(it));
    }
  }

  RingCtx ctx_;
  EngineOptions opts_;
  std::vector<Polynomial> gens_;
  SchreyerOrder order_;
  std::vector<LabeledPoly> basis_;
  std::vector<Signature> syz_sigs_;
  std::multiset<QItem, QOrder> queue_{QOrder{&order_}};
  StepLog log_;
  std::optional<Signature> last_sig_;
};

}  // namespace

GroebnerBasis f5_gb(const PolySequence& F, const EngineOptions& opts) {
  if (!F.is_homogeneous()) {
    GroebnerBasis hom = f5_gb(homogenize(F), opts);
    GroebnerBasis out = dehomogenize_gb(hom);
    out.log = hom.log;
    return out;
  }
  F5Engine eng(F, opts);
  GroebnerBasis out;
  out.ordering = F.ctx().ordering;
  if (eng.run()) {
    std::vector<Term> one{{1, Monomial::one(F.ctx().total_vars())}};
    out.elements = {Polynomial(F.ctx(), std::move(one))};
  } else {
    out.elements = inter_reduce(eng.polys());
  }
  out.reduced = true;
  out.log = eng.log();
  return out;
}

MacaulayMatrix build_macaulay(const PolySequence& F, std::uint32_t d,
                              bool cumulative) {
  const RingCtx& ctx = F.ctx();
  auto degs = F.degrees();
  std::uint32_t dmin = *std::min_element(degs.begin(), degs.end());
  if (d < dmin)
    throw EmptyMatrix("degree " + std::to_string(d) +
                      " is below every generator degree");
  MacaulayMatrix M;
  M.degree = d;
  M.cumulative = cumulative;
  M.col_labels = cumulative ? monomials_up_to_degree(ctx.total_vars(), d)
                            : monomials_of_degree(ctx.total_vars(), d);
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (degs[i] > d) continue;
    std::uint32_t room = d - degs[i];
    auto mults = cumulative ? monomials_up_to_degree(ctx.total_vars(), room)
                            : monomials_of_degree(ctx.total_vars(), room);
    for (auto& t : mults) M.row_labels.emplace_back(std::move(t), i);
  }
  M.body = MatrixGF(M.row_labels.size(), M.col_labels.size(), ctx.field);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
  col_of.reserve(M.col_labels.size());
  for (std::size_t c = 0; c < M.col_labels.size(); ++c)
    col_of.emplace(M.col_labels[c], c);
  for (std::size_t r = 0; r < M.row_labels.size(); ++r) {
    const auto& [t, i] = M.row_labels[r];
    Polynomial row = F.polys[i].times_term(1, t);
    for (const auto& term : row.terms())
      M.body.set(r, col_of.at(term.mono), term.coeff);
  }
  return M;
}

MacaulayResult macaulay_gb(const PolySequence& F, std::uint32_t dmax) {
  const RingCtx& ctx = F.ctx();
  auto degs = F.degrees();
  std::uint32_t dmin = *std::min_element(degs.begin(), degs.end());
  MacaulayResult res;
  res.dmax = dmax;
  res.gb.ordering = ctx.ordering;
  for (std::uint32_t d = dmin; d <= dmax; ++d) {
    MacaulayMatrix M = build_macaulay(F, d, /*cumulative=*/true);
    RrefResult R = rref(M.body);
    std::vector<Polynomial> rows;
    rows.reserve(R.pivot_cols.size());
    for (std::size_t r = 0; r < R.pivot_cols.size(); ++r) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < M.col_labels.size(); ++c) {
        std::uint32_t v = R.matrix.at(r, c);
        if (v) terms.push_back({v, M.col_labels[c]});
      }
      rows.push_back(Polynomial(ctx, std::move(terms)));
    }
    std::vector<Polynomial> cand = minimalize(std::move(rows));
    bool member = true;
    for (const auto& f : F.polys) {
      if (!reduce(f, cand).is_zero()) {
        member = false;
        break;
      }
    }
    if (member && passes_buchberger_criterion(cand)) {
      res.sd_mac = d;
      res.gb.elements = inter_reduce(std::move(cand));
      res.gb.reduced = true;
      return res;
    }
    if (d == dmax) {
      res.gb.elements = std::move(cand);  // partial data
      res.gb.reduced = false;
    }
  }
  return res;
}

mpz_class complexity_estimate(std::uint32_t n, std::uint32_t d, double omega) {
  if (!(omega >= 2.0 && omega < 3.0))
    throw InvalidExponent("matrix multiplication exponent must satisfy "
                          "2 <= omega < 3");
  mpz_class N;
  mpz_bin_uiui(N.get_mpz_t(), n + d, n);
  if (omega == 2.0) return N * N;
  mpfr_t x, e;
  mpfr_init2(x, 256);
  mpfr_init2(e, 256);
  mpfr_set_z(x, N.get_mpz_t(), MPFR_RNDN);
  mpfr_set_d(e, omega, MPFR_RNDN);
  mpfr_pow(x, x, e, MPFR_RNDN);
  mpfr_ceil(x, x);
  mpz_class cost;
  mpfr_get_z(cost.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_clear(e);
  return cost;
}

}  // namespace semigb
