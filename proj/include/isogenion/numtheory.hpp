// Copyright 2026 The Isogenion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISOGENION_NUMTHEORY_HPP
#define ISOGENION_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isogenion {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

// Ascending (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

int valuation(std::int64_t n, std::int64_t ell);

std::int64_t ipow(std::int64_t base, int e);

std::int64_t mod(std::int64_t a, std::int64_t m);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Inverse modulo m, or 0 when gcd(a, m) != 1.
std::uint64_t invmod(std::int64_t a, std::uint64_t m);

std::int64_t isqrt(std::int64_t n);

bool is_square_int(std::int64_t n);

// Kronecker symbol (D/m) for m >= 1.
int kronecker(std::int64_t D, std::int64_t m);

bool is_fundamental_discriminant(std::int64_t D);

// Multiplicative order of a modulo m (gcd(a, m) = 1 required).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace isogenion

#endif  // ISOGENION_NUMTHEORY_HPP
