/*
 * Copyright 2026 the hopfwords authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HOPFWORDS_COMPOSITION_HPP
#define HOPFWORDS_COMPOSITION_HPP

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfwords {

/*
 * A composition: a tuple of positive integers, possibly empty. Basis label
 * for the block-word algebra, its dual, QSym and NSym. Canonical order:
 * weight, then length, then lexicographic.
 */
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("Composition: parts must be positive");
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    std::strong_ordering operator<=>(const Composition& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        if (auto c = parts.size() <=> o.parts.size(); c != 0) return c;
        return parts <=> o.parts;
    }
    bool operator==(const Composition& o) const { return parts == o.parts; }
};

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    return Composition(std::move(p));
}

inline std::string to_string(const Composition& c) {
    std::string s = "(";
    for (int i = 0; i < c.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.parts[i]);
    }
    return s + ")";
}

}  // namespace hopfwords

#endif
