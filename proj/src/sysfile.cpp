#include "semigb/sysfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "semigb/errors.hpp"

namespace semigb {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const RingCtx& ctx, int line)
      : s_(text), ctx_(ctx), line_(line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (eof()) throw err("empty polynomial");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (get() == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        throw err("expected '+' or '-' between terms");
      }
      terms.push_back(parse_term(sign));
      skip_ws();
      first = false;
    }
    return Polynomial(ctx_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    const std::uint32_t p = ctx_.field.p;
    std::uint64_t coeff = 1;
    bool saw_factor = false;
    std::vector<std::uint32_t> exps(ctx_.total_vars(), 0);

    if (std::isdigit(peek())) {
      coeff = parse_int() % p;
      saw_factor = true;
      skip_ws();
    }
    while (!eof() && (peek() == '*' || peek() == 'x' || peek() == 'y')) {
      if (peek() == '*') {
        get();
        skip_ws();
        if (eof() || (peek() != 'x' && peek() != 'y' && !std::isdigit(peek())))
          throw err("expected a variable or number after '*'");
        if (std::isdigit(peek())) {
          coeff = coeff * (parse_int() % p) % p;
          skip_ws();
          continue;
        }
      }
      std::size_t var = parse_variable();
      std::uint32_t e = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        get();
        skip_ws();
        if (eof() || !std::isdigit(peek())) throw err("expected an exponent");
        std::uint64_t v = parse_int();
        if (v > 10000) throw err("exponent too large");
        e = static_cast<std::uint32_t>(v);
      }
      exps[var] += e;
      saw_factor = true;
      skip_ws();
    }
    if (!saw_factor) throw err("expected a term");
    std::uint32_t c = static_cast<std::uint32_t>(coeff % p);
    if (sign < 0) c = gf::neg(c, p);
    return Term{c, Monomial(std::move(exps))};
  }

  std::size_t parse_variable() {
    char v = get();
    if (v == 'y') {
      if (!ctx_.has_hom_var)
        throw err("variable y is only allowed in homogenized systems");
      return ctx_.nvars;
    }
    if (v != 'x') throw err("expected a variable");
    if (eof() || !std::isdigit(peek())) throw err("expected a variable index");
    std::uint64_t idx = parse_int();
    if (idx < 1 || idx > ctx_.nvars)
      throw err("variable index out of range 1.." +
                std::to_string(ctx_.nvars));
    return static_cast<std::size_t>(idx - 1);
  }

  std::uint64_t parse_int() {
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + (get() - '0');
      if (v > (1ull << 62)) throw err("integer literal too large");
    }
    return v;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  ParseError err(const std::string& msg) const {
    return ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  const std::string& s_;
  const RingCtx& ctx_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingCtx& ctx,
                            int line_no) {
  return PolyParser(text, ctx, line_no).parse();
}

SystemFile parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  SystemFile sf;
  bool have_header = false;
  std::vector<Polynomial> polys;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (!have_header) {
      std::istringstream hl(line);
      std::string tok;
      std::uint64_t p = 0, n = 0;
      while (hl >> tok) {
        if (tok.rfind("p=", 0) == 0) {
          p = std::stoull(tok.substr(2));
        } else if (tok.rfind("n=", 0) == 0) {
          n = std::stoull(tok.substr(2));
        } else if (tok == "homogenized") {
          sf.homogenized = true;
        } else {
          throw ParseError("unknown header token '" + tok + "'", line_no, 1);
        }
      }
      if (p < 2 || p >= (1ull << 31) || !gf::is_prime(static_cast<std::uint32_t>(p)))
        throw ParseError("modulus must be prime (2 <= p < 2^31)", line_no, 1);
      if (n < 1) throw ParseError("header needs n>=1", line_no, 1);
      sf.field = FieldSpec(static_cast<std::uint32_t>(p));
      sf.n = static_cast<std::uint32_t>(n);
      have_header = true;
      continue;
    }
    polys.push_back(parse_polynomial(line, sf.ctx(), line_no));
  }
  if (!have_header) throw ParseError("missing header line", 1, 1);
  if (polys.empty()) throw ParseError("no polynomials in system", line_no, 1);
  sf.system = PolySequence(std::move(polys));
  return sf;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open system file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace semigb
