#include "cremona/rational.hpp"

#include <limits>
#include <ostream>

#include "cremona/errors.hpp"

namespace cremona {

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    return Rational(Integer(std::string(text.substr(0, slash))),
                    Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
}

std::size_t Rational::bit_size() const {
  const std::size_t num = is_zero() ? 0 : mpz_sizeinbase(value_.get_num_mpz_t(), 2);
  return num + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw DomainError("rational " + to_string() + " is not a 64-bit integer");
  }
  return value_.get_num().get_si();
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) {
    return 0;
  }
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= Integer(static_cast<long>(n - i));
    den *= Integer(static_cast<long>(i + 1));
  }
  return num / den;
}

}  // namespace cremona
