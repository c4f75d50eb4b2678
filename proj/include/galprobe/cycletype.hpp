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

#ifndef GALPROBE_CYCLETYPE_HPP
#define GALPROBE_CYCLETYPE_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace galprobe {

// A multiset of positive integers, kept sorted in decreasing order.
// Used both for Frobenius factor-degree patterns and for permutation
// cycle structures; parts always sum to the ambient degree.
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    explicit CycleType(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x <= 0) throw std::invalid_argument("CycleType: parts must be positive");
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    int count(int value) const {
        return static_cast<int>(std::count(parts.begin(), parts.end(), value));
    }

    // Parity of a permutation with this cycle structure: (-1)^(sum - #parts).
    bool is_even() const { return (sum() - static_cast<int>(parts.size())) % 2 == 0; }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
        return out + "}";
    }

    friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts == b.parts; }
    friend bool operator!=(const CycleType& a, const CycleType& b) { return !(a == b); }
    friend bool operator<(const CycleType& a, const CycleType& b) { return a.parts < b.parts; }
};

}  // namespace galprobe

#endif
