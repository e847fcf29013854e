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

#ifndef HOPFWORDS_ISPW_HPP
#define HOPFWORDS_ISPW_HPP

#include <string>
#include <utility>
#include <vector>

#include "hopfwords/composition.hpp"
#include "hopfwords/hopfcore.hpp"
#include "hopfwords/pword.hpp"

namespace hopfwords {

/*
 * The Hopf algebra of increasing strict packed words x1^a1 x2^a2 ... xn^an,
 * encoded loss-free by the composition (a1,...,an) of block sizes. Product
 * concatenates the blocks; the cocommutative coproduct distributes the
 * blocks over the two tensor legs in all 2^n ways.
 */
struct ISPW {
    using Basis = Composition;
    static int degree(const Basis& b) { return b.weight(); }
    static Basis unit() { return Composition(); }
    static std::vector<Basis> enumerate(int n);
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return LinComb<Basis>(concat(a, b));
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "ispw"; }
    static std::string label_str(const Basis& b) { return to_string(b); }
};

/// The increasing strict packed word encoded by a block composition.
PackedWord block_word(const Composition& c);

/// Inverse view; throws if the word is not of block-increasing shape.
Composition block_of_word(const PackedWord& w);

/// Whether w is x1^a1 ... xn^an (weakly increasing, no zeros, packed).
bool is_increasing_strict(const PackedWord& w);

/// Quotient by the ideal of words containing x0, spanned by the x0-free
/// words: kills any word with a zero letter.
LinComb<PackedWord> spw_project(const LinComb<PackedWord>& x);

/*
 * Primitive element attached to gamma = (b1^a1, ..., bn^an) with pairwise
 * distinct bi: a signed binomial sum over permutations of the tail blocks
 * together with a cyclic displacement of the leading block, normalized by
 * 1/(a2! ... an!).
 */
LinComb<Composition> p_gamma(const std::vector<int>& alpha, const std::vector<int>& beta);

/// Second primitive family: full-symmetrization form with binomial weights
/// on the positions of the leading-block values, normalized by
/// 1/(a1! ... an!).
LinComb<Composition> p_lambda_gamma(const std::vector<int>& alpha,
                                    const std::vector<int>& beta);

/// The gamma tuple and its block sizes: (theta, rho) = (sum alpha, tail sum).
std::vector<int> gamma_tuple(const std::vector<int>& alpha, const std::vector<int>& beta);

/// Hopf endomorphism substituting block sizes: a block of size k becomes
/// size beta[k-1] when k <= |beta|, and is kept otherwise.
LinComb<Composition> lambda_beta(const std::vector<int>& beta, const LinComb<Composition>& x);

/// All parameter pairs (alpha, beta) whose gamma has the given weight
/// (sum of alpha_i * beta_i).
std::vector<std::pair<std::vector<int>, std::vector<int>>> gamma_params_of_weight(int weight);

/*
 * The graded dual: product shuffles the two part tuples (no merging),
 * coproduct deconcatenates.
 */
struct ISPWDual {
    using Basis = Zdual<Composition>;
    static int degree(const Basis& b) { return b.primal.weight(); }
    static Basis unit() { return {Composition()}; }
    static std::vector<Basis> enumerate(int n) {
        std::vector<Basis> out;
        for (const auto& c : ISPW::enumerate(n)) out.push_back({c});
        return out;
    }
    static LinComb<Basis> product(const Basis& a, const Basis& b);
    static LinComb<Tensor<Basis>> coproduct(const Basis& c);
    static std::string name() { return "ispw-dual"; }
    static std::string label_str(const Basis& b) { return "Z" + to_string(b.primal); }
};

}  // namespace hopfwords

#endif
