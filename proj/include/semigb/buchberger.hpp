#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semigb/polynomial.hpp"

namespace semigb {

struct StepRecord {
  std::uint32_t degree = 0;
  std::size_t pairs_processed = 0;
  std::size_t discarded_coprime = 0;
  std::size_t discarded_chain = 0;
  std::size_t discarded_syzygy = 0;     // signature engine: syzygy criterion
  std::size_t discarded_duplicate = 0;  // signature engine: duplicate signature
  std::size_t skipped_hilbert = 0;
  std::size_t zero_reductions = 0;
  std::size_t new_elements = 0;
  std::vector<Monomial> new_lms;
};

// Per-degree records of one engine run. Processed pairs are logged at the
// true degree of their S-polynomial (for homogeneous input this equals the
// LCM degree); discards are logged at the LCM degree of the discarded pair.
struct StepLog {
  std::vector<StepRecord> steps;  // ascending degree
  std::uint32_t highest_step_degree = 0;

  StepRecord& at_degree(std::uint32_t d);
  const StepRecord* find_degree(std::uint32_t d) const;
  std::size_t total_zero_reductions() const;
  std::size_t zero_reductions_below(std::uint32_t d) const;
};

struct EngineOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;  // Gebauer-Moeller
  bool hilbert_driven = false;
  std::optional<std::uint32_t> step_degree_cap;  // TimeoutDegree beyond this
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // reduced form: monic, descending LM
  OrderingSpec ordering;
  bool reduced = false;
  StepLog log;

  std::vector<Monomial> leading_monomials() const;
  std::uint32_t max_degree() const;
};

// HF_{R/<F>}(d) when known exactly at degree d, nullopt to fall back to
// plain criteria at that degree.
using HilbertOracle =
    std::function<std::optional<std::size_t>(std::uint32_t)>;

// Buchberger with normal strategy (pairs ascending by LCM degree, then LCM,
// then indices) and the coprime and Gebauer-Moeller chain criteria.
// Returns the reduced Groebner basis of <F>.
GroebnerBasis buchberger(const PolySequence& F, const EngineOptions& opts = {});

// Same, with per-degree early stopping driven by an exact Hilbert function
// oracle. Requires homogeneous F.
GroebnerBasis buchberger_hilbert_driven(const PolySequence& F,
                                        const HilbertOracle& hf,
                                        const EngineOptions& opts = {});

// Runs the engine from an already-assembled starting basis without
// inter-reducing it first; the step log covers only this continuation run.
GroebnerBasis buchberger_from_basis(const std::vector<Polynomial>& H,
                                    const EngineOptions& opts = {});

// True iff every S(f,g) with deg lcm(LM f, LM g) <= d reduces to zero
// modulo G. Requires homogeneous G.
bool is_d_groebner(const PolySequence& G, std::uint32_t d);

// Full Buchberger criterion: every S-pair reduces to zero modulo G.
bool passes_buchberger_criterion(const std::vector<Polynomial>& G);

// Dehomogenizes a Groebner basis of <F^h> and inter-reduces it to the
// reduced Groebner basis of <F>.
GroebnerBasis dehomogenize_gb(const GroebnerBasis& G_hom);

// Keep only elements whose LM is not divisible by another kept element's LM.
std::vector<Polynomial> minimalize(std::vector<Polynomial> G);

// Minimal + tail-reduced + monic, sorted by descending LM: the reduced
// Groebner basis, assuming G is a Groebner basis of its ideal.
std::vector<Polynomial> inter_reduce(std::vector<Polynomial> G);

}  // namespace semigb
