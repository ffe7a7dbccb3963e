#include "fixgraph/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace fixgraph {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

bool is_integral(const BigRat& value) { return denominator(value) == 1; }

BigInt require_integral(const BigRat& value, const char* context) {
  if (!is_integral(value)) {
    std::ostringstream msg;
    msg << context << ": exact accumulator is not integral (" << value << ")";
    throw std::logic_error(msg.str());
  }
  return numerator(value);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  BigInt quotient, remainder;
  divide_qr(num, den, quotient, remainder);
  if (remainder != 0) {
    std::ostringstream msg;
    msg << context << ": " << num << " is not divisible by " << den;
    throw std::logic_error(msg.str());
  }
  return quotient;
}

}  // namespace fixgraph
