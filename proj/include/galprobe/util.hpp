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

#ifndef GALPROBE_UTIL_HPP
#define GALPROBE_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galprobe {

// Thrown when an enumeration or box exceeds its documented size cap.
// The CLI maps this to exit code 2; everything else non-zero maps to 1.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64 step.  Used both as a stream generator and as a seed mixer.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child stream seed for worker/chunk `index` of a run seeded with `seed`.
// Streams are a pure function of (seed, index), never of thread schedule.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
    return splitmix64_next(s);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform value in [0, bound), bound >= 1.  Rejection sampling, exact.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::next_below: bound must be positive");
        const std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform integer in [-L, L].
    long next_symmetric(long L) {
        return static_cast<long>(next_below(2 * static_cast<std::uint64_t>(L) + 1)) - L;
    }

  private:
    std::uint64_t state_;
};

}  // namespace galprobe

#endif
