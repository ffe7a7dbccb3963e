#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fixgraph {

// Every spectral quantity in this library is exact: counts and eigenvalues
// are arbitrary-precision integers, intermediate accumulators are exact
// rationals. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

bool is_integral(const BigRat& value);

/// Collapses an exact rational that must be an integer. A non-unit
/// denominator signals an implementation bug, never bad input, so it
/// throws std::logic_error tagged with `context`.
BigInt require_integral(const BigRat& value, const char* context);

/// num / den, throwing std::logic_error tagged with `context` unless the
/// division is exact.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

}  // namespace fixgraph
