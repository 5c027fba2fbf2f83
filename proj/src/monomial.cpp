#include "semigb/monomial.hpp"

#include <algorithm>

namespace semigb {

static void emit_exponents(std::size_t nvars, std::uint32_t remaining,
                           std::vector<std::uint32_t>& cur, std::size_t pos,
                           std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    emit_exponents(nvars, remaining - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  emit_exponents(nvars, d, cur, 0, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return drl_less(b, a); });
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars,
                                             std::uint32_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t k = d + 1; k-- > 0;) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_string(const Monomial& m, const RingCtx& ctx) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.var_name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace semigb
