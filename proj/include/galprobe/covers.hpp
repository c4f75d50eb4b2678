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

// Power sums over set systems: partitions of {1..X} with bounded part sizes,
// the greedy maximizer of sum |S_i|^n, and disjointification of covers with
// bounded pairwise overlap.

#ifndef GALPROBE_COVERS_HPP
#define GALPROBE_COVERS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <galprobe/util.hpp>

namespace galprobe {

// Multiset of block sizes of a partition of a ground set of size X.
struct PartitionT {
    std::vector<int> parts;  // sorted decreasing
    int ground_size = 0;

    PartitionT() = default;
    explicit PartitionT(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts) {
            if (x <= 0) throw std::invalid_argument("PartitionT: parts must be positive");
            ground_size += x;
        }
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    friend bool operator==(const PartitionT& a, const PartitionT& b) {
        return a.parts == b.parts;
    }
};

// Explicit cover of {1..X}: sizes within [Z, Y], each set meeting the union
// of the others in at most R elements.
struct CoverT {
    std::vector<std::set<int>> sets;
    int ground_size = 0;
    int size_upper = 0;    // Y
    int size_lower = 0;    // Z
    int overlap_bound = 0; // R

    CoverT(std::vector<std::set<int>> s, int x, int y, int z, int r)
        : sets(std::move(s)), ground_size(x), size_upper(y), size_lower(z), overlap_bound(r) {
        std::set<int> all;
        for (const auto& si : sets) {
            const int sz = static_cast<int>(si.size());
            if (sz < z || sz > y) throw std::invalid_argument("CoverT: set size out of [Z,Y]");
            for (int e : si) {
                if (e < 1 || e > x) throw std::invalid_argument("CoverT: element out of ground set");
                all.insert(e);
            }
        }
        if (static_cast<int>(all.size()) != x)
            throw std::invalid_argument("CoverT: sets do not cover the ground set");
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (overlap_with_rest(i) > r)
                throw std::invalid_argument("CoverT: overlap bound violated");
    }

    // |S_i meet union of the others|
    int overlap_with_rest(std::size_t i) const {
        int count = 0;
        for (int e : sets[i]) {
            for (std::size_t j = 0; j < sets.size(); ++j) {
                if (j != i && sets[j].count(e)) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

    // Build from bare sets, taking Y, Z, R as the measured extremes.
    static CoverT measured(std::vector<std::set<int>> s, int x) {
        int y = 0, z = x;
        for (const auto& si : s) {
            y = std::max(y, static_cast<int>(si.size()));
            z = std::min(z, static_cast<int>(si.size()));
        }
        CoverT tmp(std::move(s), x, y, z, x);  // loose overlap, then tighten
        int r = 0;
        for (std::size_t i = 0; i < tmp.sets.size(); ++i)
            r = std::max(r, tmp.overlap_with_rest(i));
        tmp.overlap_bound = r;
        return tmp;
    }
};

inline mpz_class m_value(const PartitionT& t, int n) {
    if (n < 2) throw std::invalid_argument("m_value: exponent must be at least 2");
    mpz_class total = 0, term;
    for (int p : t.parts) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
        total += term;
    }
    return total;
}

inline mpz_class m_value(const CoverT& t, int n) {
    if (n < 2) throw std::invalid_argument("m_value: exponent must be at least 2");
    mpz_class total = 0, term;
    for (const auto& s : t.sets) {
        mpz_ui_pow_ui(term.get_mpz_t(), s.size(), static_cast<unsigned long>(n));
        total += term;
    }
    return total;
}

// floor((X-1)/Y) full parts of size Y and one nonempty remainder part; this
// maximizes sum of n-th powers among partitions of X with parts at most Y.
inline PartitionT greedy_max_partition(int x, int y) {
    if (y < 1 || y > x) throw std::invalid_argument("greedy_max_partition: need 1 <= Y <= X");
    const int full = (x - 1) / y;
    std::vector<int> parts(static_cast<std::size_t>(full), y);
    parts.push_back(x - full * y);
    return PartitionT(std::move(parts));
}

struct BruteMax {
    mpz_class value;
    PartitionT witness;
};

// Exhaustive maximum of m_value over partitions of X with parts at most Y.
inline BruteMax brute_max(int x, int y, int n) {
    if (y < 1 || y > x) throw std::invalid_argument("brute_max: need 1 <= Y <= X");
    if (n < 2) throw std::invalid_argument("brute_max: exponent must be at least 2");
    if (x > 40) throw cap_error("cap exceeded: brute_max enumerates partitions only for X <= 40");

    BruteMax best;
    best.value = -1;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            PartitionT t(cur);
            mpz_class v = m_value(t, n);
            if (v > best.value) {
                best.value = v;
                best.witness = std::move(t);
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(x, y);
    return best;
}

// Sequential difference S_i' = S_i minus the union of the earlier sets;
// empty differences are dropped.  Each set loses at most its overlap with
// the rest, so |S_i'| >= |S_i| - R.
inline PartitionT disjointify(const CoverT& t) {
    std::set<int> seen;
    std::vector<int> parts;
    for (const auto& si : t.sets) {
        int kept = 0;
        for (int e : si)
            if (seen.insert(e).second) ++kept;
        if (kept > 0) parts.push_back(kept);
    }
    return PartitionT(std::move(parts));
}

}  // namespace galprobe

#endif
