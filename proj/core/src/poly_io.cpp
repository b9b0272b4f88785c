#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "surfcas/groebner.hpp"
#include "surfcas/polynomial.hpp"

namespace surfcas {

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::uint32_t p) : s_(s), F_(p) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = F_.neg(t.coeff);
      terms.push_back(t);
      first = false;
      skip();
    }
    return Polynomial::from_terms(F_.prime(), std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at column " + std::to_string(pos_ + 1));
  }
  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::uint64_t v = 0, raw = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      int dgt = s_[pos_++] - '0';
      v = (v * 10 + dgt) % F_.prime();
      raw = raw > 1000000 ? raw : raw * 10 + dgt;
    }
    last_raw_ = raw;
    return v;
  }

  Term parse_term() {
    Coeff c = 1;
    std::array<int, kNumVars> e{};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = static_cast<Coeff>(number());
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    while (peek() == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
      number();
      std::uint64_t idx = last_raw_;
      if (idx >= kNumVars) fail("variable index out of range");
      int power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        number();
        if (last_raw_ > kMaxExponent) fail("exponent too large");
        power = static_cast<int>(last_raw_);
        skip();
      }
      e[idx] += power;
      if (e[idx] > kMaxExponent) fail("exponent too large");
      any = true;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (!any) fail("expected term");
    return {Monomial::from_exponents(e), c};
  }

  std::string_view s_;
  PrimeField F_;
  std::size_t pos_ = 0;
  std::uint64_t last_raw_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::uint32_t prime) { return Parser(text, prime).run(); }

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  PrimeField F = f.field();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = F.lift(t.coeff);
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    bool unit = t.mono.degree() == 0;
    if (c != 1 || unit) {
      out += std::to_string(c);
      if (!unit) out += '*';
    }
    bool need_star = false;
    for (int v = 0; v < kNumVars; ++v) {
      int e = t.mono.exponent(v);
      if (!e) continue;
      if (need_star) out += '*';
      out += 'x';
      out += std::to_string(v);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
      need_star = true;
    }
  }
  return out;
}

std::string format_ideal(const Ideal& I, const std::vector<std::string>& comments) {
  std::string out = "ring p=" + std::to_string(I.prime()) + " vars=x0..x4 order=grevlex\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& g : I.generators()) out += format_polynomial(g) + "\n";
  return out;
}

Ideal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::uint32_t> prime;
  std::vector<Polynomial> gens;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::size_t a = line.find_first_not_of(" \t\r"), b = line.find_last_not_of(" \t\r");
    if (a == std::string::npos) continue;
    line = line.substr(a, b - a + 1);
    if (!prime) {
      std::istringstream h(line);
      std::string ring, p, vars, order;
      h >> ring >> p >> vars >> order;
      std::string rest;
      if (ring != "ring" || p.rfind("p=", 0) != 0 || vars != "vars=x0..x4" || order != "order=grevlex" || (h >> rest))
        fail("expected header 'ring p=<prime> vars=x0..x4 order=grevlex'");
      std::uint64_t v = 0;
      std::string digits = p.substr(2);
      if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
        fail("bad prime");
      v = std::stoull(digits);
      if (v >= (1ull << 31) || !is_prime(v)) fail("p=" + digits + " is not a prime below 2^31");
      prime = static_cast<std::uint32_t>(v);
      continue;
    }
    try {
      Polynomial f = parse_polynomial(line, *prime);
      if (!is_homogeneous(f).homogeneous) fail("polynomial is not homogeneous");
      gens.push_back(std::move(f));
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what());
    }
  }
  if (!prime) throw std::invalid_argument("missing ring header");
  return Ideal(*prime, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal(ss.str());
}

void write_ideal_file(const std::string& path, const Ideal& I, const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_ideal(I, comments);
}

}  // namespace surfcas
