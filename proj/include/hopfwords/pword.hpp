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

#ifndef HOPFWORDS_PWORD_HPP
#define HOPFWORDS_PWORD_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfwords {

/// Thrown when a computation exceeds the configured degree budget.
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/*
 * A packed word over the alphabet x0 < x1 < x2 < ...: the letter values
 * different from 0 form exactly {1,...,s} for some s, each occurring at
 * least once; 0 may occur anywhere. The empty word is the unit.
 *
 * Stored as the sequence of letter indices. Positions are 1-based in every
 * public signature; storage is 0-based.
 */
class PackedWord {
   public:
    PackedWord() = default;

    /// Packs an arbitrary word: zeros stay, other letters are replaced by
    /// their rank among the distinct nonzero letters.
    static PackedWord pack(const std::vector<int>& raw);

    /// Wraps a letter sequence that must already be packed.
    static PackedWord from_letters(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int pos1) const { return letters_.at(pos1 - 1); }

    /// Largest letter index; 0 for the empty word.
    int sup() const;

    // Canonical order: by length, then lexicographically.
    std::strong_ordering operator<=>(const PackedWord& o) const {
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
        return letters_ <=> o.letters_;
    }
    bool operator==(const PackedWord& o) const { return letters_ == o.letters_; }

   private:
    explicit PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {}
    std::vector<int> letters_;
};

bool is_packed(const std::vector<int>& letters);

/// 1-based positions, strictly increasing.
using PositionSet = std::vector<int>;

struct WordStats {
    int length = 0;
    int sup = 0;
    std::map<int, int> freq;       // letter index -> multiplicity
    std::vector<int> ialph;        // indices with nonzero multiplicity
};

WordStats word_stats(const PackedWord& w);

/// T_s: adds s to every nonzero letter, zeros unchanged. The result need
/// not be packed, hence the raw sequence.
std::vector<int> shift(const PackedWord& w, int s);

/// Shifted concatenation u * v = u T_{sup(u)}(v).
PackedWord star(const PackedWord& u, const PackedWord& v);

/*
 * One extraction-contraction split. I selects positions of w (1-based).
 * First component: pack(w[I]). Second: w restricted to the complement,
 * with every letter whose value occurs in w[I] replaced by x0, then packed.
 */
std::pair<PackedWord, PackedWord> extract_contract(const PackedWord& w, const PositionSet& I);

/// All packed words of length n in canonical order. Memoized; throws
/// ResourceLimitError past the cap.
const std::vector<PackedWord>& enumerate_packed(int n, int cap = 8);

/*
 * The unique factorization of w into irreducible packed words
 * (w = f1 * f2 * ... * fk with no factor further splittable). Empty input
 * yields the empty list.
 */
std::vector<PackedWord> irreducible_factorize(const PackedWord& w);

bool is_irreducible(const PackedWord& w);

/// A permutation of {1..n}; images[i-1] = sigma(i).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images.at(i - 1); }
    Permutation inverse() const;

    std::strong_ordering operator<=>(const Permutation&) const = default;
};

enum class ShuffleKind {
    All,          // Bat(n1, n2)
    FirstFixed,   // preimage of 1 is position 1
    SecondFixed,  // preimage of 1 is position n1 + 1
};

/// (n1, n2)-shuffle permutations: increasing on the first n1 positions and
/// on the last n2.
std::vector<Permutation> shuffles(int n1, int n2, ShuffleKind kind = ShuffleKind::All);

/// tau o w o mu^{-1}: tau relabels the values (0 is fixed), mu permutes the
/// positions. Either may be the identity (empty Permutation).
PackedWord relabel_and_permute(const Permutation& tau, const PackedWord& w,
                               const Permutation& mu);

/// All surjective words {1..length} -> {1..k}; building block of the packed
/// word enumeration and of ordered set partitions.
std::vector<std::vector<int>> surjections(int length, int k);

/// All compositions of n (ordered tuples of positive integers summing to n).
std::vector<std::vector<int>> compositions_of(int n);

std::string to_string(const PackedWord& w);

}  // namespace hopfwords

#endif
