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

#ifndef HOPFWORDS_COMPEXT_HPP
#define HOPFWORDS_COMPEXT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hopfwords/composition.hpp"
#include "hopfwords/hopfcore.hpp"
#include "hopfwords/pword.hpp"
#include "hopfwords/series.hpp"

namespace hopfwords {

/*
 * Extended composition (a0; a1,...,ak): a0 >= 0 counts the letter x0, the
 * positive parts count the other letters. Basis of the quotient of the
 * packed word algebra by the span of word-minus-letter-permutation
 * differences.
 */
struct ExtComposition {
    int a0 = 0;
    Composition parts;

    ExtComposition() = default;
    ExtComposition(int a0_, Composition parts_) : a0(a0_), parts(std::move(parts_)) {
        if (a0 < 0) throw std::invalid_argument("ExtComposition: a0 must be >= 0");
    }

    int degree() const { return a0 + parts.weight(); }

    std::strong_ordering operator<=>(const ExtComposition& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = a0 <=> o.a0; c != 0) return c;
        return parts <=> o.parts;
    }
    bool operator==(const ExtComposition& o) const = default;
};

std::string to_string(const ExtComposition& e);

/// Frequency vector of a packed word: (count of x0; count of x1, ..., count
/// of x_sup). Constant on letter-permutation classes.
ExtComposition pi_project(const PackedWord& w);

LinComb<ExtComposition> pi_project(const LinComb<PackedWord>& x);

/*
 * The extended composition Hopf algebra: product adds the zero counts and
 * concatenates the parts; the coproduct distributes the zero count
 * binomially and extracts sub-blocks from any subset of the parts.
 */
struct Ce {
    using Basis = ExtComposition;
    static int degree(const Basis& b) { return b.degree(); }
    static Basis unit() { return ExtComposition(); }
    static std::vector<Basis> enumerate(int n);
    static LinComb<Basis> product(const Basis& a, const Basis& b);
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "ce"; }
    static std::string label_str(const Basis& b) { return to_string(b); }
};

/// The polynomial Hopf algebra on one primitive generator; basis exponent m.
struct PolyH {
    using Basis = int;
    static int degree(const Basis& b) { return b; }
    static Basis unit() { return 0; }
    static std::vector<Basis> enumerate(int n) { return {n}; }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return LinComb<Basis>(a + b);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& m) {
        LinComb<Tensor<Basis>> out;
        for (int j = 0; j <= m; ++j) out.add(Tensor<Basis>{j, m - j}, Rational(binomial(m, j)));
        return out;
    }
    static std::string name() { return "poly-h"; }
    static std::string label_str(const Basis& b) { return "(" + std::to_string(b) + ")"; }
};

/// The tensor Hopf algebra on the primitive generators indexed by positive
/// integers; a basis word is a composition.
struct TensC {
    using Basis = Composition;
    static int degree(const Basis& b) { return b.weight(); }
    static Basis unit() { return Composition(); }
    static std::vector<Basis> enumerate(int n);
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return LinComb<Basis>(concat(a, b));
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "tens-c"; }
    static std::string label_str(const Basis& b);
};

/// Right coaction of PolyH on TensC: shrinks every letter block and records
/// the total amount removed in the polynomial leg, with binomial weights.
using CHPair = std::pair<Composition, int>;
LinComb<CHPair> rho_coaction(const Composition& c);

/*
 * The smash-coproduct Hopf algebra on PolyH (x) TensC: componentwise
 * product, coproduct twisted through the coaction.
 */
using HCPair = std::pair<int, Composition>;
struct SemiDirect {
    using Basis = HCPair;
    static int degree(const Basis& b) { return b.first + b.second.weight(); }
    static Basis unit() { return {0, Composition()}; }
    static std::vector<Basis> enumerate(int n);
    static LinComb<Basis> product(const Basis& a, const Basis& b);
    static LinComb<Tensor<Basis>> coproduct(const Basis& a);
    static std::string name() { return "semidirect";  }
    static std::string label_str(const Basis& b);
};

/// Basis bijection (a0; a1..ak) <-> (a0) (x) (0,a1,...,ak); a Hopf
/// isomorphism between Ce and the semi-direct algebra.
HCPair upsilon(const ExtComposition& e);
ExtComposition upsilon_inv(const HCPair& p);

/*
 * Transposed coaction: a left action of the dual of PolyH on the dual of
 * TensC. Z_(k) distributes k extra units over the parts with binomial
 * weights; the dual unit acts as the identity and Z_(k) kills the dual
 * unit of C for k >= 1.
 */
LinComb<Zdual<Composition>> rho_star(const Zdual<Composition>& z, int k);

/// Characters as lazily evaluated multiplicative functionals.
struct CharacterC {
    std::function<Rational(const Composition&)> eval;
};
struct CharacterH {
    std::function<Rational(int)> eval;
};

/// (1) -> lambda, hence (m) -> lambda^m.
CharacterH omega_h(const Rational& lambda);
/// Generator (0,s) -> s! a_s.
CharacterC omega_c(const TruncatedSeries& a);
/// Generator (0,s) -> a_s / s!.
CharacterC omega_c_bar(const TruncatedSeries& a);

/*
 * The character-group action on constant-term-free series, computed two
 * ways: through the coaction/character composite, and directly as
 * a * exp(lambda X). Both must agree; the tests assert it.
 */
TruncatedSeries omega_action_composite(const Rational& lambda, const TruncatedSeries& a);
TruncatedSeries omega_action_direct(const Rational& lambda, const TruncatedSeries& a);

/// The alternating primitive family (0; 1^k, 2, 1^(n-k)) with binomial
/// coefficients; degree n + 2.
LinComb<ExtComposition> gamma_2_ones(int n);

/// Images in Ce of the two block-word primitive families (zero x0 count).
LinComb<ExtComposition> gamma_ce(const std::vector<int>& alpha, const std::vector<int>& beta);
LinComb<ExtComposition> gamma_lambda_ce(const std::vector<int>& alpha,
                                        const std::vector<int>& beta);

/// All (g1,...,gp) >= 0 summing to m.
std::vector<std::vector<int>> weak_compositions(int m, int p);

/// Graded dual of Ce, closed forms.
struct CeDual {
    using Basis = Zdual<ExtComposition>;
    static int degree(const Basis& b) { return b.primal.degree(); }
    static Basis unit() { return {ExtComposition()}; }
    static std::vector<Basis> enumerate(int n) {
        std::vector<Basis> out;
        for (const auto& e : Ce::enumerate(n)) out.push_back({e});
        return out;
    }
    static LinComb<Basis> product(const Basis& a, const Basis& b);
    static LinComb<Tensor<Basis>> coproduct(const Basis& c);
    static std::string name() { return "ce-dual"; }
    static std::string label_str(const Basis& b) { return "Z" + to_string(b.primal); }
};

}  // namespace hopfwords

#endif
