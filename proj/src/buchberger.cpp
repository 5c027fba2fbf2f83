#include "semigb/buchberger.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semigb/errors.hpp"
#include "semigb/series.hpp"

namespace semigb {

StepRecord& StepLog::at_degree(std::uint32_t d) {
  auto it = std::lower_bound(
      steps.begin(), steps.end(), d,
      [](const StepRecord& r, std::uint32_t deg) { return r.degree < deg; });
  if (it == steps.end() || it->degree != d) {
    it = steps.insert(it, StepRecord{});
    it->degree = d;
  }
  return *it;
}

const StepRecord* StepLog::find_degree(std::uint32_t d) const {
  for (const auto& r : steps)
    if (r.degree == d) return &r;
  return nullptr;
}

std::size_t StepLog::total_zero_reductions() const {
  std::size_t n = 0;
  for (const auto& r : steps) n += r.zero_reductions;
  return n;
}

std::size_t StepLog::zero_reductions_below(std::uint32_t d) const {
  std::size_t n = 0;
  for (const auto& r : steps)
    if (r.degree < d) n += r.zero_reductions;
  return n;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(elements.size());
  for (const auto& g : elements) lms.push_back(g.lm());
  return lms;
}

std::uint32_t GroebnerBasis::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : elements) d = std::max(d, g.degree());
  return d;
}

std::vector<Polynomial> minimalize(std::vector<Polynomial> G) {
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return drl_less(a.lm(), b.lm());
  });
  std::vector<Polynomial> out;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.lm().divides(g.lm())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Polynomial> inter_reduce(std::vector<Polynomial> G) {
  G = minimalize(std::move(G));
  for (auto& g : G) g = g.monic();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(G.size() - 1);
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      Polynomial r = reduce(G[i], others);
      if (!(r == G[i])) {
        G[i] = r.monic();  // LM survives: the basis is minimal
        changed = true;
      }
    }
  }
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return drl_less(b.lm(), a.lm());
  });
  return G;
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j, indices into the working basis
  Monomial lcm_mono;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm_mono.degree() != b.lcm_mono.degree())
      return a.lcm_mono.degree() < b.lcm_mono.degree();
    int c = drl_compare(a.lcm_mono, b.lcm_mono);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Engine {
 public:
  Engine(RingCtx ctx, EngineOptions opts, HilbertOracle oracle)
      : ctx_(std::move(ctx)), opts_(std::move(opts)),
        oracle_(std::move(oracle)) {}

  // Gebauer-Moeller update: filter the old pair set against LM(h), build
  // and filter the new pairs (h, g), then append h.
  void add_element(Polynomial h) {
    const Monomial t = h.lm();
    const std::size_t hidx = basis_.size();

    if (opts_.chain_criterion) {
      for (auto it = queue_.begin(); it != queue_.end();) {
        const Pair& pr = *it;
        if (t.divides(pr.lcm_mono) &&
            !(lcm(basis_[pr.i].lm(), t) == pr.lcm_mono) &&
            !(lcm(basis_[pr.j].lm(), t) == pr.lcm_mono)) {
          log_.at_degree(pr.lcm_mono.degree()).discarded_chain++;
          it = queue_.erase(it);
        } else {
          ++it;
        }
      }
    }

    struct Cand {
      std::size_t g;
      Monomial l;
      bool cop;
    };
    std::vector<Cand> cands;
    cands.reserve(basis_.size());
    for (std::size_t g = 0; g < basis_.size(); ++g)
      cands.push_back({g, lcm(basis_[g].lm(), t), coprime(basis_[g].lm(), t)});

    // Keep (h,g) when its LMs are coprime or when no other surviving
    // candidate's lcm divides its lcm; later candidates win ties.
    std::vector<Cand> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const Cand& c = cands[k];
      bool keep = c.cop && opts_.coprime_criterion;
      if (!keep && opts_.chain_criterion) {
        bool dominated = false;
        for (std::size_t k2 = k + 1; k2 < cands.size() && !dominated; ++k2)
          dominated = cands[k2].l.divides(c.l);
        for (std::size_t k2 = 0; k2 < kept.size() && !dominated; ++k2)
          dominated = kept[k2].l.divides(c.l);
        if (dominated) {
          log_.at_degree(c.l.degree()).discarded_chain++;
          continue;
        }
        keep = true;
      } else if (!keep) {
        keep = true;
      }
      if (keep) kept.push_back(c);
    }
    for (const auto& c : kept) {
      if (c.cop && opts_.coprime_criterion) {
        log_.at_degree(c.l.degree()).discarded_coprime++;
      } else {
        queue_.insert(Pair{c.g, hidx, c.l});
      }
    }
    basis_.push_back(std::move(h));
  }

  // Returns true when the ideal is the unit ideal.
  bool run() {
    while (!queue_.empty()) {
      Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      const std::uint32_t lcm_deg = pr.lcm_mono.degree();
      if (opts_.step_degree_cap && lcm_deg > *opts_.step_degree_cap)
        throw TimeoutDegree("step degree " + std::to_string(lcm_deg) +
                            " beyond cap " +
                            std::to_string(*opts_.step_degree_cap));
      if (oracle_ && hilbert_prune(lcm_deg)) {
        log_.at_degree(lcm_deg).skipped_hilbert++;
        continue;
      }
      Polynomial s = s_polynomial(basis_[pr.i], basis_[pr.j]);
      const std::uint32_t step_deg = s.is_zero() ? lcm_deg : s.degree();
      StepRecord& rec = log_.at_degree(step_deg);
      rec.pairs_processed++;
      log_.highest_step_degree = std::max(log_.highest_step_degree, step_deg);
      Polynomial r = reduce(s, basis_);
      if (r.is_zero()) {
        rec.zero_reductions++;
        continue;
      }
      r = r.monic();
      rec.new_elements++;
      rec.new_lms.push_back(r.lm());
      if (r.lm().is_one()) return true;  // unit ideal
      staircase_dirty_ = true;
      add_element(std::move(r));
    }
    return false;
  }

  std::vector<Polynomial>& basis() { return basis_; }
  StepLog& log() { return log_; }

 private:
  // True if S-pair processing at degree d can stop: the count of standard
  // monomials of degree d already equals the oracle value. Closing a degree
  // with a count still above the oracle value is an oracle violation.
  bool hilbert_prune(std::uint32_t d) {
    auto target = oracle_(d);
    if (last_checked_degree_ && *last_checked_degree_ != d) {
      auto prev_target = oracle_(*last_checked_degree_);
      if (prev_target && staircase_count(*last_checked_degree_) > *prev_target)
        throw OracleViolation(
            "degree " + std::to_string(*last_checked_degree_) +
            " closed with staircase count above the oracle value");
    }
    last_checked_degree_ = d;
    if (!target) return false;
    std::size_t count = staircase_count(d);
    if (count < *target)
      throw OracleViolation("staircase count " + std::to_string(count) +
                            " below oracle value " + std::to_string(*target) +
                            " at degree " + std::to_string(d));
    return count == *target;
  }

  std::size_t staircase_count(std::uint32_t d) {
    if (staircase_dirty_ || cached_counts_.find(d) == cached_counts_.end()) {
      if (staircase_dirty_) cached_counts_.clear();
      staircase_dirty_ = false;
      std::vector<Monomial> lms;
      lms.reserve(basis_.size());
      for (const auto& g : basis_) lms.push_back(g.lm());
      cached_counts_[d] = hf_from_staircase(lms, ctx_.total_vars(), d);
    }
    return cached_counts_[d];
  }

  RingCtx ctx_;
  EngineOptions opts_;
  HilbertOracle oracle_;
  std::vector<Polynomial> basis_;
  std::set<Pair, PairOrder> queue_;
  StepLog log_;
  bool staircase_dirty_ = true;
  std::map<std::uint32_t, std::size_t> cached_counts_;
  std::optional<std::uint32_t> last_checked_degree_;
};

GroebnerBasis run_engine(const std::vector<Polynomial>& gens,
                         const RingCtx& ctx, const EngineOptions& opts,
                         const HilbertOracle& oracle) {
  GroebnerBasis out;
  out.ordering = ctx.ordering;
  Engine eng(ctx, opts, oracle);
  bool unit = false;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    if (f.lm().is_one()) {
      unit = true;
      break;
    }
    eng.add_element(f.monic());
  }
  if (!unit) unit = eng.run();
  if (unit) {
    std::vector<Term> one{{1, Monomial::one(ctx.total_vars())}};
    out.elements = {Polynomial(ctx, std::move(one))};
  } else {
    out.elements = inter_reduce(eng.basis());
  }
  out.reduced = true;
  out.log = eng.log();
  return out;
}

}  // namespace

GroebnerBasis buchberger(const PolySequence& F, const EngineOptions& opts) {
  if (opts.hilbert_driven)
    throw Error("use buchberger_hilbert_driven to supply the oracle");
  return run_engine(F.polys, F.ctx(), opts, nullptr);
}

GroebnerBasis buchberger_hilbert_driven(const PolySequence& F,
                                        const HilbertOracle& hf,
                                        const EngineOptions& opts) {
  if (!F.is_homogeneous())
    throw NotHomogeneous("Hilbert-driven run requires homogeneous input");
  return run_engine(F.polys, F.ctx(), opts, hf);
}

GroebnerBasis buchberger_from_basis(const std::vector<Polynomial>& H,
                                    const EngineOptions& opts) {
  if (H.empty()) throw ZeroInput("empty starting basis");
  return run_engine(H, H.front().ctx(), opts, nullptr);
}

bool is_d_groebner(const PolySequence& G, std::uint32_t d) {
  if (!G.is_homogeneous())
    throw NotHomogeneous("d-Groebner test requires homogeneous input");
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (lcm(G.polys[i].lm(), G.polys[j].lm()).degree() > d) continue;
      Polynomial s = s_polynomial(G.polys[i], G.polys[j]);
      if (!reduce(s, G.polys).is_zero()) return false;
    }
  }
  return true;
}

bool passes_buchberger_criterion(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Polynomial s = s_polynomial(G[i], G[j]);
      if (!reduce(s, G).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis dehomogenize_gb(const GroebnerBasis& G_hom) {
  GroebnerBasis out;
  out.ordering = OrderingSpec{OrderKind::DrlX};
  out.log = G_hom.log;
  std::vector<Polynomial> deh;
  deh.reserve(G_hom.elements.size());
  for (const auto& g : G_hom.elements) deh.push_back(dehomogenize(g));
  out.elements = inter_reduce(std::move(deh));
  out.reduced = true;
  return out;
}

}  // namespace semigb
