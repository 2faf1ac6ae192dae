#include <sstream>

#include "saito/burnside.hpp"
#include "saito/errors.hpp"

namespace saito {

CyclotomicProduct::CyclotomicProduct(Integer modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw DimensionError("cyclotomic product modulus must be positive");
}

CyclotomicProduct::CyclotomicProduct(Integer modulus, const std::map<Integer, Integer>& factors)
    : CyclotomicProduct(std::move(modulus)) {
  for (const auto& [m, s] : factors) addFactor(m, s);
}

Integer CyclotomicProduct::exponent(const Integer& m) const {
  auto it = factors_.find(m);
  return it == factors_.end() ? Integer(0) : it->second;
}

void CyclotomicProduct::addFactor(const Integer& m, const Integer& s) {
  if (m < 1 || !mpz_divisible_p(modulus_.get_mpz_t(), m.get_mpz_t())) {
    throw DimensionError("factor (1-t^" + m.get_str() + ") does not divide modulus " +
                         modulus_.get_str());
  }
  if (s == 0) return;
  auto [it, inserted] = factors_.try_emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second == 0) factors_.erase(it);
  }
}

CyclotomicProduct CyclotomicProduct::withModulus(const Integer& modulus) const {
  if (!mpz_divisible_p(modulus.get_mpz_t(), modulus_.get_mpz_t())) {
    throw DimensionError("cannot re-express modulus " + modulus_.get_str() + " over " +
                         modulus.get_str());
  }
  return {modulus, factors_};
}

CyclotomicProduct CyclotomicProduct::operator*(const CyclotomicProduct& other) const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), modulus_.get_mpz_t(), other.modulus_.get_mpz_t());
  CyclotomicProduct r(l, factors_);
  for (const auto& [m, s] : other.factors_) r.addFactor(m, s);
  return r;
}

CyclotomicProduct CyclotomicProduct::inverse() const {
  CyclotomicProduct r(modulus_);
  for (const auto& [m, s] : factors_) r.addFactor(m, -s);
  return r;
}

Integer CyclotomicProduct::degree() const {
  Integer total = 0;
  for (const auto& [m, s] : factors_) total += m * s;
  return total;
}

std::string CyclotomicProduct::toString() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (const auto& [m, s] : factors_) {
    os << "(1-t";
    if (m != 1) os << '^' << m;
    os << ')';
    if (s != 1) os << '^' << s;
  }
  return os.str();
}

}  // namespace saito
