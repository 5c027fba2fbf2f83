#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigb/polynomial.hpp"

namespace semigb {

// Text polynomial grammar: terms joined by + or -, optional integer
// coefficient, optional '*', '^' for powers, variables x1..xn and y.
// Example: x1^2 + 3*x2*x1 - 2*x3*x1 - x1 + x2^2 - 2*x3*x2 - 2*x2 + x3^2 + x3
Polynomial parse_polynomial(const std::string& text, const RingCtx& ctx,
                            int line_no = 1);

// A polynomial system file:
//   header line  p=<prime> n=<count> [homogenized]
//   one polynomial per following line; '#' starts a comment line.
struct SystemFile {
  FieldSpec field;
  std::uint32_t n = 0;
  bool homogenized = false;  // ring R' = R[y] with y allowed in input
  PolySequence system;

  RingCtx ctx() const { return RingCtx(field, n, homogenized); }
};

SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);

}  // namespace semigb
