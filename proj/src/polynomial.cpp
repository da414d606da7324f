#include "cremona/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"lambda", "g", "nu", "t"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

Integer integer_pow(std::int64_t base, std::uint32_t exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
  if (base < 0 && exponent % 2 == 1) {
    out = -out;
  }
  return out;
}

// Recursive-descent parser over a small arithmetic grammar.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const Polynomial divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) {
          fail("division by a non-constant or zero polynomial");
        }
        acc *= Polynomial(Rational(1) / divisor.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) {
      return -unary();
    }
    if (accept('+')) {
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) {
        fail("expected a non-negative integer exponent");
      }
      return base.pow(static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    }
    if (accept('(')) {
      Polynomial inner = expression();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return Polynomial(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (const auto v = var_from_name(name)) {
        return Polynomial::variable(*v);
      }
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) {
      return static_cast<Var>(i);
    }
  }
  return std::nullopt;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) {
    terms_.emplace(Exponents{}, constant);
  }
}

Polynomial Polynomial::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(Rational(1), e);
}

Polynomial Polynomial::monomial(const Rational& coefficient, const Exponents& exponents) {
  Polynomial p;
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Polynomial::constant_term() const { return coefficient(Exponents{}); }

Rational Polynomial::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[static_cast<std::size_t>(v)]);
  }
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  }
  return d;
}

Polynomial Polynomial::coefficient_of(Var v, std::uint32_t power) const {
  const auto idx = static_cast<std::size_t>(v);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == power) {
      Exponents rest = e;
      rest[idx] = 0;
      out.add_term(rest, c);
    }
  }
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) {
    return Rational(1);
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
  const Polynomial scale(Rational(1) / content());
  return *this * scale;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) {
        os << '-';
      }
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    const bool constant = e == Exponents{};
    bool need_star = false;
    if (constant || magnitude != Rational(1)) {
      os << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (need_star) {
        os << '*';
      }
      os << kVarNames[i];
      if (e[i] > 1) {
        os << '^' << e[i];
      }
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial evaluate(const Polynomial& p, const Assignment& assignment) {
  // powers[v][k] caches (image of v)^k.
  std::array<std::vector<Polynomial>, kVarCount> powers;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const auto it = assignment.find(static_cast<Var>(i));
    powers[i].push_back(Polynomial(1));
    powers[i].push_back(it == assignment.end() ? Polynomial::variable(static_cast<Var>(i))
                                               : it->second);
  }
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    Polynomial term(c);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      auto& cache = powers[i];
      while (cache.size() <= e[i]) {
        cache.push_back(cache.back() * cache[1]);
      }
      if (e[i] > 0) {
        term *= cache[e[i]];
      }
    }
    out += term;
  }
  return out;
}

Rational evaluate_at(const Polynomial& p, const std::array<std::int64_t, kVarCount>& point) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer product = 1;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] > 0) {
        product *= integer_pow(point[i], e[i]);
      }
    }
    sum += c.raw() * mpq_class(product);
  }
  return Rational(sum.get_num(), sum.get_den());
}

Polynomial binomial_poly(std::int64_t shift, std::int64_t k, Var v) {
  if (k < 0) {
    throw DomainError("binomial_poly: negative k = " + std::to_string(k));
  }
  const Polynomial x = Polynomial::variable(v);
  Polynomial numerator(1);
  Integer factorial = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    numerator *= x + Polynomial(Rational(shift - i));
    factorial *= Integer(static_cast<long>(i + 1));
  }
  return numerator * Polynomial(Rational(Integer(1), factorial));
}

}  // namespace cremona
