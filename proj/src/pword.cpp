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

#include "hopfwords/pword.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace hopfwords {

PackedWord PackedWord::pack(const std::vector<int>& raw) {
    std::set<int> nonzero;
    for (int v : raw) {
        if (v < 0) throw std::invalid_argument("pack: negative letter index");
        if (v != 0) nonzero.insert(v);
    }
    std::map<int, int> rank;
    int next = 1;
    for (int v : nonzero) rank[v] = next++;
    std::vector<int> out;
    out.reserve(raw.size());
    for (int v : raw) out.push_back(v == 0 ? 0 : rank[v]);
    return PackedWord(std::move(out));
}

bool is_packed(const std::vector<int>& letters) {
    int s = 0;
    for (int v : letters) {
        if (v < 0) return false;
        s = std::max(s, v);
    }
    std::vector<bool> seen(s + 1, false);
    for (int v : letters) seen[v] = true;
    for (int v = 1; v <= s; ++v)
        if (!seen[v]) return false;
    return true;
}

PackedWord PackedWord::from_letters(std::vector<int> letters) {
    if (!is_packed(letters)) throw std::invalid_argument("from_letters: word is not packed");
    return PackedWord(std::move(letters));
}

int PackedWord::sup() const {
    int s = 0;
    for (int v : letters_) s = std::max(s, v);
    return s;
}

WordStats word_stats(const PackedWord& w) {
    WordStats st;
    st.length = w.size();
    st.sup = w.sup();
    for (int v : w.letters()) ++st.freq[v];
    for (const auto& [v, c] : st.freq)
        if (c > 0) st.ialph.push_back(v);
    return st;
}

std::vector<int> shift(const PackedWord& w, int s) {
    std::vector<int> out = w.letters();
    for (int& v : out)
        if (v != 0) v += s;
    return out;
}

PackedWord star(const PackedWord& u, const PackedWord& v) {
    std::vector<int> out = u.letters();
    const std::vector<int> shifted = shift(v, u.sup());
    out.insert(out.end(), shifted.begin(), shifted.end());
    return PackedWord::from_letters(std::move(out));
}

std::pair<PackedWord, PackedWord> extract_contract(const PackedWord& w, const PositionSet& I) {
    const int n = w.size();
    std::vector<bool> picked(n + 1, false);
    int prev = 0;
    for (int p : I) {
        if (p < 1 || p > n || p <= prev)
            throw std::invalid_argument("extract_contract: bad position set");
        picked[p] = true;
        prev = p;
    }
    std::vector<int> part, rest;
    std::set<int> extracted_values;
    for (int p = 1; p <= n; ++p)
        if (picked[p]) {
            part.push_back(w.letter(p));
            extracted_values.insert(w.letter(p));
        }
    for (int p = 1; p <= n; ++p)
        if (!picked[p]) {
            const int v = w.letter(p);
            rest.push_back(extracted_values.count(v) ? 0 : v);
        }
    return {PackedWord::pack(part), PackedWord::pack(rest)};
}

std::vector<std::vector<int>> surjections(int length, int k) {
    std::vector<std::vector<int>> out;
    if (k > length || k < 0) return out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> word(length);
    // Depth-first fill; prune when the unused letters cannot all fit in the
    // remaining positions.
    auto rec = [&](auto&& self, int pos, int used_mask, int used_count) -> void {
        if (pos == length) {
            if (used_count == k) out.push_back(word);
            return;
        }
        const int remaining = length - pos;
        if (k - used_count > remaining) return;
        for (int v = 1; v <= k; ++v) {
            word[pos] = v;
            const int bit = 1 << (v - 1);
            self(self, pos + 1, used_mask | bit, used_count + ((used_mask & bit) ? 0 : 1));
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

const std::vector<PackedWord>& enumerate_packed(int n, int cap) {
    if (n < 0) throw std::invalid_argument("enumerate_packed: negative degree");
    if (n > cap)
        throw ResourceLimitError("enumerate_packed: degree " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    static std::map<int, std::vector<PackedWord>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<PackedWord> words;
    for (int zero_mask = 0; zero_mask < (1 << n); ++zero_mask) {
        std::vector<int> free_pos;
        for (int p = 0; p < n; ++p)
            if (!(zero_mask & (1 << p))) free_pos.push_back(p);
        const int m = static_cast<int>(free_pos.size());
        for (int k = (m > 0 ? 1 : 0); k <= m; ++k) {
            for (const auto& surj : surjections(m, k)) {
                std::vector<int> letters(n, 0);
                for (int i = 0; i < m; ++i) letters[free_pos[i]] = surj[i];
                words.push_back(PackedWord::from_letters(std::move(letters)));
            }
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return cache[n] = std::move(words);
}

namespace {

// Valid split point: the prefix of length i is itself packed and the suffix
// only uses 0 or letters above sup(prefix); then prefix * unshift(suffix)
// reconstructs w.
int shortest_split(const PackedWord& w) {
    const auto& l = w.letters();
    const int n = w.size();
    int prefix_sup = 0;
    for (int i = 1; i < n; ++i) {
        prefix_sup = std::max(prefix_sup, l[i - 1]);
        std::vector<int> prefix(l.begin(), l.begin() + i);
        if (!is_packed(prefix)) continue;
        bool ok = true;
        for (int j = i; j < n; ++j)
            if (l[j] != 0 && l[j] <= prefix_sup) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return -1;
}

}  // namespace

std::vector<PackedWord> irreducible_factorize(const PackedWord& w) {
    std::vector<PackedWord> factors;
    PackedWord cur = w;
    while (!cur.empty()) {
        const int i = shortest_split(cur);
        if (i < 0) {
            factors.push_back(cur);
            break;
        }
        const auto& l = cur.letters();
        std::vector<int> prefix(l.begin(), l.begin() + i);
        factors.push_back(PackedWord::from_letters(std::move(prefix)));
        int prefix_sup = 0;
        for (int j = 0; j < i; ++j) prefix_sup = std::max(prefix_sup, l[j]);
        std::vector<int> suffix;
        for (int j = i; j < cur.size(); ++j)
            suffix.push_back(l[j] == 0 ? 0 : l[j] - prefix_sup);
        cur = PackedWord::from_letters(std::move(suffix));
    }
    return factors;
}

bool is_irreducible(const PackedWord& w) {
    return !w.empty() && shortest_split(w) < 0;
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 1; i <= size(); ++i) inv[images[i - 1] - 1] = i;
    Permutation p;
    p.images = std::move(inv);
    return p;
}

std::vector<Permutation> shuffles(int n1, int n2, ShuffleKind kind) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("shuffles: negative block size");
    if (kind == ShuffleKind::FirstFixed && n1 == 0)
        throw std::invalid_argument("shuffles: first-fixed needs a nonempty first block");
    if (kind == ShuffleKind::SecondFixed && n2 == 0)
        throw std::invalid_argument("shuffles: second-fixed needs a nonempty second block");
    const int n = n1 + n2;
    std::vector<Permutation> out;
    // Choose the increasing image set of the first block.
    std::vector<int> sel(n1);
    auto rec = [&](auto&& self, int idx, int next) -> void {
        if (idx == n1) {
            std::vector<int> images(n);
            std::vector<bool> used(n + 1, false);
            for (int i = 0; i < n1; ++i) {
                images[i] = sel[i];
                used[sel[i]] = true;
            }
            int j = n1;
            for (int v = 1; v <= n; ++v)
                if (!used[v]) images[j++] = v;
            Permutation p;
            p.images = std::move(images);
            const bool one_in_first = n1 > 0 && p.images[0] == 1;
            if (kind == ShuffleKind::FirstFixed && !one_in_first) return;
            if (kind == ShuffleKind::SecondFixed && one_in_first) return;
            out.push_back(std::move(p));
            return;
        }
        for (int v = next; v <= n; ++v) {
            sel[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

PackedWord relabel_and_permute(const Permutation& tau, const PackedWord& w,
                               const Permutation& mu) {
    const int n = w.size();
    if (mu.size() != 0 && mu.size() != n)
        throw std::invalid_argument("relabel_and_permute: position permutation size mismatch");
    const Permutation mu_inv = mu.size() ? mu.inverse() : mu;
    std::vector<int> out(n);
    for (int i = 1; i <= n; ++i) {
        const int src = mu.size() ? mu_inv(i) : i;
        int v = w.letter(src);
        if (v != 0 && tau.size()) {
            if (v > tau.size())
                throw std::invalid_argument("relabel_and_permute: letter outside value permutation");
            v = tau(v);
        }
        out[i - 1] = v;
    }
    return PackedWord::from_letters(std::move(out));
}

std::string to_string(const PackedWord& w) {
    std::string s = "[";
    for (int i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters()[i]);
    }
    return s + "]";
}

}  // namespace hopfwords
