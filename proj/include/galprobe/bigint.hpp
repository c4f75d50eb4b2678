/*
   Copyright 2026 the galois-probe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact integer square roots and perfect-square detection.  Everything here
// is integer arithmetic; no floating point is consulted for the verdict.

#ifndef GALPROBE_BIGINT_HPP
#define GALPROBE_BIGINT_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace galprobe {

// Floor of sqrt(n) by Newton iteration.  Invariant: the iterate stays >= floor(sqrt(n))
// until the final step, so the first non-decreasing step is the answer.
inline mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x = 1;
    x <<= (bits + 1) / 2;  // 2^ceil(bits/2) >= sqrt(n)
    for (;;) {
        mpz_class y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

struct SquareWitness {
    bool is_square = false;
    mpz_class root;  // nonnegative root with root*root == n when is_square
};

inline SquareWitness is_perfect_square(const mpz_class& n) {
    if (n < 0) return {false, 0};
    mpz_class r = isqrt(n);
    if (r * r == n) return {true, r};
    return {false, 0};
}

// A rational q (canonical form) is a square in Q iff numerator and denominator
// are both perfect squares.
inline bool is_square_rational(const mpq_class& q) {
    if (q < 0) return false;
    return is_perfect_square(q.get_num()).is_square && is_perfect_square(q.get_den()).is_square;
}

// Fast exact perfect-square test for machine integers (lab hot loops).
// Residue filters reject most non-squares; survivors are verified exactly.
inline bool is_square_i64(long long v) {
    if (v < 0) return false;
    static const auto table64 = [] {
        std::uint64_t t = 0;
        for (int i = 0; i < 64; ++i) t |= 1ULL << ((i * i) & 63);
        return t;
    }();
    if (!(table64 >> (v & 63) & 1)) return false;
    unsigned long long u = static_cast<unsigned long long>(v);
    unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(u)));
    while (r > 0 && r * r > u) --r;
    while ((r + 1) * (r + 1) <= u) ++r;
    return r * r == u;
}

}  // namespace galprobe

#endif
