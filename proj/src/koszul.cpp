#include "semigb/koszul.hpp"

#include <algorithm>
#include <unordered_map>

#include "semigb/errors.hpp"
#include "semigb/series.hpp"

namespace semigb {

namespace {

void check_caps(const PolySequence& F, std::uint32_t degree) {
  if (F.ctx().nvars > KoszulCaps::max_vars)
    throw CapExceeded("variable count " + std::to_string(F.ctx().nvars) +
                      " exceeds cap " + std::to_string(KoszulCaps::max_vars));
  if (F.size() > KoszulCaps::max_generators)
    throw CapExceeded("generator count " + std::to_string(F.size()) +
                      " exceeds cap " +
                      std::to_string(KoszulCaps::max_generators));
  if (degree > KoszulCaps::max_degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(KoszulCaps::max_degree));
}

void require_homogeneous(const PolySequence& F) {
  if (!F.is_homogeneous())
    throw NotHomogeneous("Koszul computations require homogeneous input");
}

using ColIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

ColIndex index_of(const std::vector<Monomial>& monos) {
  ColIndex idx;
  idx.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

}  // namespace

GradedMapMatrix phi1_matrix(const PolySequence& F, std::uint32_t d) {
  require_homogeneous(F);
  check_caps(F, d);
  const RingCtx& ctx = F.ctx();
  const std::size_t nv = ctx.total_vars();
  auto degs = F.degrees();
  auto target = monomials_of_degree(nv, d);
  auto tidx = index_of(target);

  std::vector<std::vector<Monomial>> sources;
  std::size_t cols = 0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    sources.push_back(d >= degs[j]
                          ? monomials_of_degree(nv, d - degs[j])
                          : std::vector<Monomial>{});
    cols += sources.back().size();
  }
  GradedMapMatrix out;
  out.source_shifts = degs;
  out.matrix = MatrixGF(target.size(), cols, ctx.field);
  std::size_t c = 0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    for (const auto& u : sources[j]) {
      Polynomial img = F.polys[j].times_term(1, u);
      for (const auto& t : img.terms())
        out.matrix.set(tidx.at(t.mono), c, t.coeff);
      ++c;
    }
  }
  return out;
}

GradedMapMatrix phi2_matrix(const PolySequence& F, std::uint32_t d) {
  require_homogeneous(F);
  check_caps(F, d);
  const RingCtx& ctx = F.ctx();
  const std::uint32_t p = ctx.field.p;
  const std::size_t nv = ctx.total_vars();
  auto degs = F.degrees();

  // target: (+)_j R_{d-d_j} e_j, block offsets per j
  std::vector<std::size_t> block_offset(F.size(), 0);
  std::vector<std::vector<Monomial>> tmonos(F.size());
  std::vector<ColIndex> tindex(F.size());
  std::size_t rows = 0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    block_offset[j] = rows;
    if (d >= degs[j]) tmonos[j] = monomials_of_degree(nv, d - degs[j]);
    tindex[j] = index_of(tmonos[j]);
    rows += tmonos[j].size();
  }

  std::vector<std::pair<std::size_t, std::size_t>> summands;
  std::vector<std::vector<Monomial>> smonos;
  std::size_t cols = 0;
  GradedMapMatrix out;
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      std::uint32_t shift = degs[i] + degs[j];
      summands.emplace_back(i, j);
      out.source_shifts.push_back(shift);
      smonos.push_back(d >= shift ? monomials_of_degree(nv, d - shift)
                                  : std::vector<Monomial>{});
      cols += smonos.back().size();
    }
  }
  out.matrix = MatrixGF(rows, cols, ctx.field);
  std::size_t c = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    auto [i, j] = summands[k];
    for (const auto& u : smonos[k]) {
      // e_ij -> f_i e_j - f_j e_i
      Polynomial a = F.polys[i].times_term(1, u);
      for (const auto& t : a.terms())
        out.matrix.set(block_offset[j] + tindex[j].at(t.mono), c, t.coeff);
      Polynomial b = F.polys[j].times_term(p - 1, u);
      for (const auto& t : b.terms())
        out.matrix.set(block_offset[i] + tindex[i].at(t.mono), c, t.coeff);
      ++c;
    }
  }
  return out;
}

GradedMapMatrix phim_matrix(const PolySequence& F, std::uint32_t d) {
  require_homogeneous(F);
  check_caps(F, d);
  const RingCtx& ctx = F.ctx();
  const std::uint32_t p = ctx.field.p;
  const std::size_t nv = ctx.total_vars();
  const std::size_t m = F.size();
  auto degs = F.degrees();
  std::uint32_t total = 0;
  for (auto x : degs) total += x;

  // target: (+)_k R_{d - (total - d_k)} e_{1..k^..m}
  std::vector<std::size_t> block_offset(m, 0);
  std::vector<std::vector<Monomial>> tmonos(m);
  std::vector<ColIndex> tindex(m);
  std::size_t rows = 0;
  for (std::size_t k = 0; k < m; ++k) {
    block_offset[k] = rows;
    std::uint32_t shift = total - degs[k];
    if (d >= shift) tmonos[k] = monomials_of_degree(nv, d - shift);
    tindex[k] = index_of(tmonos[k]);
    rows += tmonos[k].size();
  }
  auto smonos =
      d >= total ? monomials_of_degree(nv, d - total) : std::vector<Monomial>{};
  GradedMapMatrix out;
  out.source_shifts = {total};
  out.matrix = MatrixGF(rows, smonos.size(), ctx.field);
  std::size_t c = 0;
  for (const auto& u : smonos) {
    for (std::size_t k = 0; k < m; ++k) {
      std::uint32_t sign = (k % 2 == 0) ? 1 : p - 1;
      Polynomial img = F.polys[k].times_term(sign, u);
      for (const auto& t : img.terms())
        out.matrix.set(block_offset[k] + tindex[k].at(t.mono), c, t.coeff);
    }
    ++c;
  }
  return out;
}

std::size_t h1_dimension(const PolySequence& F, std::uint32_t d) {
  GradedMapMatrix p1 = phi1_matrix(F, d);
  GradedMapMatrix p2 = phi2_matrix(F, d);
  std::size_t ker = kernel_dim(p1.matrix);
  std::size_t im = rank(p2.matrix);
  return ker - im;  // Im(phi_2) is contained in Ker(phi_1)
}

std::optional<std::uint32_t> min_h1_degree(const PolySequence& F,
                                           std::uint32_t cap) {
  for (std::uint32_t d = 1; d <= cap; ++d)
    if (h1_dimension(F, d) != 0) return d;
  return std::nullopt;
}

MatrixGF multiplication_matrix(const Polynomial& f,
                               const std::vector<Polynomial>& prefix_gb,
                               std::uint32_t t) {
  const RingCtx& ctx = f.ctx();
  const std::size_t nv = ctx.total_vars();
  const std::uint32_t df = f.degree();
  if (t < df) throw InvalidDegree("target degree below deg f");
  std::vector<Monomial> lms;
  for (const auto& g : prefix_gb) lms.push_back(g.lm());
  auto standard_at = [&](std::uint32_t d) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(nv, d)) {
      bool in_ideal = false;
      for (const auto& lm : lms)
        if (lm.divides(m)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) out.push_back(std::move(m));
    }
    return out;
  };
  auto src = standard_at(t - df);
  auto dst = standard_at(t);
  auto didx = index_of(dst);
  MatrixGF M(dst.size(), src.size(), ctx.field);
  for (std::size_t c = 0; c < src.size(); ++c) {
    Polynomial img = reduce(f.times_term(1, src[c]), prefix_gb);
    for (const auto& term : img.terms())
      M.set(didx.at(term.mono), c, term.coeff);
  }
  return M;
}

namespace {

std::vector<Monomial> gb_lms(const GroebnerBasis& g) {
  return g.leading_monomials();
}

}  // namespace

bool check_d_regular(const PolySequence& F, std::uint32_t d, DRegMethod m) {
  require_homogeneous(F);
  auto degs = F.degrees();
  std::uint32_t dmax = *std::max_element(degs.begin(), degs.end());
  if (d < dmax)
    throw InvalidDegree("d-regularity needs d >= max generator degree");
  check_caps(F, d);
  const RingCtx& ctx = F.ctx();

  switch (m) {
    case DRegMethod::Direct: {
      std::vector<Polynomial> prefix;
      for (std::size_t i = 0; i < F.size(); ++i) {
        std::vector<Polynomial> prefix_gb;
        if (!prefix.empty())
          prefix_gb = buchberger(PolySequence(prefix)).elements;
        for (std::uint32_t t = degs[i]; t < d; ++t) {
          MatrixGF M = multiplication_matrix(F.polys[i], prefix_gb, t);
          if (rank(M) != M.cols()) return false;  // not injective
        }
        prefix.push_back(F.polys[i]);
      }
      return true;
    }
    case DRegMethod::Series: {
      GroebnerBasis G = buchberger(F);
      auto lms = gb_lms(G);
      // Diem's congruence mod z^d compares the Hilbert function against the
      // raw series coefficients (which may be negative)
      auto raw = series_coefficients(ctx.total_vars(), degs, d);
      for (std::uint32_t t = 0; t < d; ++t) {
        long actual =
            static_cast<long>(hf_from_staircase(lms, ctx.total_vars(), t));
        if (raw[t] != actual) return false;
      }
      return true;
    }
    case DRegMethod::Homology: {
      for (std::uint32_t t = 1; t < d; ++t)
        if (h1_dimension(F, t) != 0) return false;
      return true;
    }
  }
  throw Error("unknown d-regularity method");
}

CryptoSemiregResult check_crypto_semiregular(const PolySequence& F) {
  require_homogeneous(F);
  check_caps(F, 0);
  const RingCtx& ctx = F.ctx();
  GroebnerBasis G = buchberger(F);
  auto lms = gb_lms(G);

  // Artinian iff every variable has a pure power among the leading monomials.
  std::uint32_t bound = 1;
  for (std::uint32_t v = 0; v < ctx.total_vars(); ++v) {
    bool found = false;
    for (const auto& lm : lms) {
      bool pure = lm[v] > 0;
      for (std::uint32_t w = 0; pure && w < ctx.total_vars(); ++w)
        if (w != v && lm[w] > 0) pure = false;
      if (pure) {
        bound += lm[v] - 1;
        found = true;
        break;
      }
    }
    if (!found)
      throw NotArtinianWithinCap("quotient is not Artinian: variable " +
                                 ctx.var_name(v) +
                                 " has no pure power leading monomial");
  }
  std::uint32_t D = 0;
  for (std::uint32_t d = 0; d <= bound; ++d) {
    if (hf_from_staircase(lms, ctx.total_vars(), d) == 0) {
      D = d;
      break;
    }
    if (d == bound)
      throw Error("Artinian bound scan failed");  // unreachable
  }

  auto degs = F.degrees();
  std::uint32_t dmax = *std::max_element(degs.begin(), degs.end());
  if (D < dmax) {
    // d_reg-regularity is undefined below the largest generator degree
    // (redundant high-degree generators); decide by the equivalent
    // Hilbert-series characterization instead.
    auto s = semiregular_series(ctx.total_vars(), degs, D + 1);
    bool ok = s.truncation == TruncatedSeries::Truncation::ByBracket &&
              s.size() == D;
    for (std::uint32_t t = 0; ok && t <= D; ++t) {
      long actual =
          static_cast<long>(hf_from_staircase(lms, ctx.total_vars(), t));
      long want = t < s.size() ? static_cast<long>(s.coeffs[t].get_si()) : 0;
      ok = actual == want;
    }
    return {ok, D};
  }
  check_caps(F, D > 0 ? D - 1 : 0);

  bool direct = check_d_regular(F, D, DRegMethod::Direct);
  bool series = check_d_regular(F, D, DRegMethod::Series);
  bool homology = check_d_regular(F, D, DRegMethod::Homology);
  if (direct != series || series != homology)
    throw Error("d-regularity methods disagree: direct=" +
                std::to_string(direct) + " series=" + std::to_string(series) +
                " homology=" + std::to_string(homology));
  return {homology, D};
}

bool check_pardue_semiregular(const PolySequence& F) {
  require_homogeneous(F);
  check_caps(F, 0);
  const RingCtx& ctx = F.ctx();
  auto degs = F.degrees();
  const std::uint32_t cap = KoszulCaps::max_degree;

  // Staircases of the prefix ideals <f_1..f_i>, i = 0..m.
  std::vector<std::vector<Monomial>> stair(F.size() + 1);
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < F.size(); ++i) {
    prefix.push_back(F.polys[i]);
    stair[i + 1] = gb_lms(buchberger(PolySequence(prefix)));
  }

  // Degree-by-degree over all steps, so a definite failure inside the cap
  // is found even when an earlier step's scan cannot settle. A step is
  // settled once its quotient dimension hits zero: surjective from there on.
  std::vector<bool> settled(F.size(), false);
  for (std::uint32_t t = 1; t <= cap; ++t) {
    for (std::size_t i = 0; i < F.size(); ++i) {
      if (settled[i] || t < degs[i]) continue;
      long cur = static_cast<long>(
          hf_from_staircase(stair[i + 1], ctx.total_vars(), t));
      long prev_t =
          static_cast<long>(hf_from_staircase(stair[i], ctx.total_vars(), t));
      long prev_shift = static_cast<long>(
          hf_from_staircase(stair[i], ctx.total_vars(), t - degs[i]));
      long expected = std::max(0l, prev_t - prev_shift);
      if (cur != expected) return false;  // neither injective nor surjective
      if (cur == 0) settled[i] = true;  // R_t inside the ideal from here on
    }
  }
  for (std::size_t i = 0; i < F.size(); ++i)
    if (!settled[i])
      throw CapExceeded("Pardue scan for generator " + std::to_string(i + 1) +
                        " undecided by degree cap " + std::to_string(cap));
  return true;
}

std::uint32_t first_fall_degree(const PolySequence& F, std::uint32_t q) {
  require_homogeneous(F);
  check_caps(F, 0);
  const RingCtx& ctx = F.ctx();
  if (q != ctx.field.p)
    throw Error("first fall degree needs q equal to the field size p");
  const std::size_t nv = ctx.total_vars();
  const std::uint32_t p = ctx.field.p;
  auto degs = F.degrees();
  const std::size_t m = F.size();

  // monomials of B = R/<x_i^q> of degree d: all exponents < q
  auto bmonos = [&](long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (auto& mo : monomials_of_degree(nv, static_cast<std::uint32_t>(d))) {
      bool ok = true;
      for (std::size_t v = 0; v < nv; ++v)
        if (mo[v] >= q) {
          ok = false;
          break;
        }
      if (ok) out.push_back(std::move(mo));
    }
    return out;
  };
  // reduce mod <x_i^q>: drop terms with any exponent >= q
  auto breduce = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      bool ok = true;
      for (std::size_t v = 0; v < nv; ++v)
        if (t.mono[v] >= q) {
          ok = false;
          break;
        }
      if (ok) ts.push_back(t);
    }
    return Polynomial(ctx, std::move(ts));
  };

  std::vector<Polynomial> fb;  // f_i mod <x^q>
  for (const auto& f : F.polys) fb.push_back(breduce(f));
  std::vector<Polynomial> fb_pow;  // f_i^{q-1} mod <x^q>
  for (const auto& f : F.polys) {
    Polynomial acc(ctx, {{1, Monomial::one(nv)}});
    for (std::uint32_t k = 0; k + 1 < q; ++k) acc = breduce(acc * f);
    fb_pow.push_back(acc);
    // Frobenius: f^q vanishes in B for homogeneous f over F_p
    if (!breduce(acc * f).is_zero())
      throw Error("Frobenius syzygy check failed; input not homogeneous over F_p?");
  }

  const std::uint32_t degree_cap =
      static_cast<std::uint32_t>(nv) * (q - 1) +
      *std::max_element(degs.begin(), degs.end());

  for (std::uint32_t d = 1; d <= degree_cap; ++d) {
    // phi1 over B: (+)_i B_{d-d_i} -> B_d
    auto target = bmonos(d);
    auto tidx = index_of(target);
    std::vector<std::vector<Monomial>> src(m);
    std::size_t cols = 0;
    for (std::size_t i = 0; i < m; ++i) {
      src[i] = bmonos(static_cast<long>(d) - static_cast<long>(degs[i]));
      cols += src[i].size();
    }
    MatrixGF M1(target.size(), cols, ctx.field);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& u : src[i]) {
        Polynomial img = breduce(fb[i].times_term(1, u));
        for (const auto& t : img.terms()) M1.set(tidx.at(t.mono), c, t.coeff);
        ++c;
      }
    }
    std::size_t dim_syz = kernel_dim(M1);
    if (dim_syz == 0) continue;

    // tsyz+ generators: u * (fb_i e_j - fb_j e_i) and u * fb_i^{q-1} e_i,
    // expressed in the module basis (+)_i B_{d-d_i}
    std::vector<std::size_t> block_offset(m, 0);
    std::vector<ColIndex> bidx(m);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < m; ++i) {
      block_offset[i] = rows;
      bidx[i] = index_of(src[i]);
      rows += src[i].size();
    }
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> gen_cols;
    auto add_component = [&](std::vector<std::pair<std::size_t, std::uint32_t>>&
                                 col,
                             std::size_t blk, const Polynomial& val) {
      for (const auto& t : val.terms()) {
        auto it = bidx[blk].find(t.mono);
        if (it == bidx[blk].end())
          throw Error("module component outside the B basis");
        col.emplace_back(block_offset[blk] + it->second, t.coeff);
      }
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (const auto& u :
             bmonos(static_cast<long>(d) - degs[i] - degs[j])) {
          std::vector<std::pair<std::size_t, std::uint32_t>> col;
          add_component(col, j, breduce(fb[i].times_term(1, u)));
          add_component(col, i, breduce(fb[j].times_term(p - 1, u)));
          gen_cols.push_back(std::move(col));
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& u : bmonos(static_cast<long>(d) -
                                  static_cast<long>(q) * degs[i])) {
        std::vector<std::pair<std::size_t, std::uint32_t>> col;
        add_component(col, i, breduce(fb_pow[i].times_term(1, u)));
        gen_cols.push_back(std::move(col));
      }
    }
    MatrixGF M2(rows, gen_cols.size(), ctx.field);
    for (std::size_t cc = 0; cc < gen_cols.size(); ++cc)
      for (auto [r, v] : gen_cols[cc]) M2.set(r, cc, v);
    std::size_t dim_tsyz = rank(M2);
    if (dim_tsyz > dim_syz)
      throw Error("trivial syzygies escaped the syzygy module");  // bug trap
    if (dim_syz > dim_tsyz) return d;
  }
  throw NoFallWithinCap("no degree fall up to degree " +
                        std::to_string(degree_cap));
}

bool prefix_vanishing_check(const PolySequence& F, std::uint32_t D) {
  require_homogeneous(F);
  check_caps(F, D);
  for (std::uint32_t d = 1; d <= D; ++d)
    if (h1_dimension(F, d) != 0)
      throw PreconditionUnverified(
          "H_1 of the full sequence does not vanish up to degree " +
          std::to_string(D));
  for (std::size_t j = 1; j < F.size(); ++j) {
    std::vector<Polynomial> prefix(F.polys.begin(), F.polys.begin() + j);
    PolySequence P(prefix);
    for (std::uint32_t d = 1; d <= D; ++d)
      if (h1_dimension(P, d) != 0) return false;
  }
  return true;
}

KoszulReport koszul_report(const PolySequence& F, std::uint32_t degree_cap,
                           bool with_first_fall) {
  require_homogeneous(F);
  check_caps(F, degree_cap);
  KoszulReport rep;
  for (std::uint32_t d = 1; d <= degree_cap; ++d) {
    rep.degrees.push_back(d);
    rep.h1_dims.push_back(h1_dimension(F, d));
  }
  std::uint32_t min_nonzero = degree_cap + 1;
  for (std::size_t k = 0; k < rep.h1_dims.size(); ++k) {
    if (rep.h1_dims[k] != 0) {
      min_nonzero = rep.degrees[k];
      break;
    }
  }
  rep.d_regular_up_to = min_nonzero;
  try {
    auto cs = check_crypto_semiregular(F);
    rep.is_crypto_semiregular = cs.semiregular;
    rep.d_reg_actual = cs.D;
  } catch (const NotArtinianWithinCap&) {
    rep.is_crypto_semiregular = false;
  }
  try {
    rep.is_pardue_semiregular = check_pardue_semiregular(F);
  } catch (const CapExceeded&) {
    rep.is_pardue_semiregular = std::nullopt;
  }
  if (with_first_fall) {
    try {
      rep.first_fall = first_fall_degree(F, F.ctx().field.p);
    } catch (const NoFallWithinCap&) {
      rep.first_fall = std::nullopt;
    }
  }
  return rep;
}

}  // namespace semigb
