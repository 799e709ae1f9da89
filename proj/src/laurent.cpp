#include "pseudoknot/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pk {
namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in term list: '" + std::string(s) + "'");
  }
  return v;
}

Coefficient parse_coeff(std::string_view s) {
  Coefficient v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("bad coefficient in term list: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coefficient constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient coeff, int exponent) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<std::pair<int, Coefficient>>& terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

Coefficient LaurentPolynomial::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Coefficient>> LaurentPolynomial::terms() const {
  std::vector<std::pair<int, Coefficient>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  std::vector<Coefficient> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = sum[i + static_cast<std::size_t>(other.low_ - lo)];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  r.normalize();
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::reflected() const { return scaled_exponents(-1); }

LaurentPolynomial LaurentPolynomial::scaled_exponents(int factor) const {
  std::vector<std::pair<int, Coefficient>> t = terms();
  for (auto& term : t) term.first *= factor;
  return from_terms(t);
}

LaurentPolynomial LaurentPolynomial::divided_exponents(int divisor) const {
  if (divisor == 0) throw std::domain_error("exponent divisor is zero");
  std::vector<std::pair<int, Coefficient>> t = terms();
  for (auto& term : t) {
    if (term.first % divisor != 0) {
      throw std::domain_error("exponent " + std::to_string(term.first) + " not divisible by " +
                              std::to_string(divisor));
    }
    term.first /= divisor;
  }
  return from_terms(t);
}

std::strong_ordering operator<=>(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (auto c = a.low_ <=> b.low_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string LaurentPolynomial::to_term_list() const {
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
    out += ':';
    out += std::to_string(c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::from_term_list(std::string_view text) {
  std::vector<std::pair<int, Coefficient>> t;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("term without ':' in '" + std::string(item) + "'");
    }
    t.emplace_back(parse_int(item.substr(0, colon)), parse_coeff(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_terms(t);
}

}  // namespace pk
