#include "strata/exactalg/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace strata {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num));
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q = Rational(q.get_num(), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace rpoly {

void trim(RationalPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

RationalPoly sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly scale(const RationalPoly& a, const Rational& c) {
  RationalPoly out = a;
  for (auto& x : out) x *= c;
  trim(out);
  return out;
}

RationalPoly monic(const RationalPoly& a) {
  RationalPoly p = a;
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& x : p) x /= lead;
  return p;
}

void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot, RationalPoly& rem) {
  RationalPoly divisor = b;
  trim(divisor);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  const int db = static_cast<int>(divisor.size()) - 1;
  quot.assign(rem.size() > divisor.size() - 1 ? rem.size() - divisor.size() + 1 : 0, Rational(0));
  const Rational lead = divisor.back();
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    const int shift = static_cast<int>(rem.size()) - 1 - db;
    const Rational c = rem.back() / lead;
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(shift + i)] -= c * divisor[static_cast<std::size_t>(i)];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::string to_string(const RationalPoly& p, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && i > 0) {
      os << "-";
      c = abs(c);
    }
    if (i == 0) {
      os << strata::to_string(c);
    } else {
      if (c != 1) os << strata::to_string(c) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace rpoly

Integer squarefree_part(const Integer& n, Integer* square_root_of_cofactor) {
  if (n == 0) {
    if (square_root_of_cofactor) *square_root_of_cofactor = 0;
    return 0;
  }
  Integer rest = abs(n);
  Integer root = 1;
  Integer sf = 1;
  for (unsigned long p = 2; p <= 1000000UL; ++p) {
    const Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        rest /= p;
        root *= p;
      } else {
        sf *= p;
      }
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    root *= s;
  } else {
    sf *= rest;
  }
  if (square_root_of_cofactor) *square_root_of_cofactor = root;
  return sgn(n) < 0 ? Integer(-sf) : sf;
}

}  // namespace strata
