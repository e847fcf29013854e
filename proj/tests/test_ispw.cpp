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

#include <map>
#include <set>

#include "doctest.h"
#include "hopfwords/ispw.hpp"
#include "hopfwords/linalg.hpp"
#include "hopfwords/wmat.hpp"

using namespace hopfwords;

namespace {

Composition cp(std::vector<int> v) { return Composition(std::move(v)); }

LinComb<Composition> clc(std::vector<std::pair<std::vector<int>, int>> terms) {
    LinComb<Composition> out;
    for (auto& [p, c] : terms) out.add(cp(p), Rational(c));
    return out;
}

// Partition class of a composition: the sorted multiset of parts.
std::vector<int> partition_class(const Composition& c) {
    std::vector<int> s = c.parts;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("block word encoding round-trips") {
    CHECK(block_word(cp({1, 2, 1, 1})) == PackedWord::from_letters({1, 2, 2, 3, 4}));
    CHECK(block_of_word(PackedWord::from_letters({1, 2, 2, 3, 4})) == cp({1, 2, 1, 1}));
    CHECK(block_word(Composition()) == PackedWord());
    CHECK(is_increasing_strict(PackedWord::from_letters({1, 2, 2, 3})));
    CHECK_FALSE(is_increasing_strict(PackedWord::from_letters({1, 0, 2})));
    CHECK_FALSE(is_increasing_strict(PackedWord::from_letters({2, 2, 1})));
    CHECK_THROWS_AS(block_of_word(PackedWord::from_letters({2, 1})), std::invalid_argument);
}

TEST_CASE("product concatenates blocks") {
    CHECK(ISPW::product(cp({1, 2, 1, 1}), cp({1, 3})) ==
          LinComb<Composition>(cp({1, 2, 1, 1, 1, 3})));
    // Same example at word level: x1x2x2x3x4 * x1x2x2x2.
    CHECK(star(block_word(cp({1, 2, 1, 1})), block_word(cp({1, 3}))) ==
          block_word(cp({1, 2, 1, 1, 1, 3})));
    CHECK(ISPW::product(ISPW::unit(), cp({2})) == LinComb<Composition>(cp({2})));
    CHECK(ISPW::product(cp({2}), cp({2})) == LinComb<Composition>(cp({2, 2})));
}

TEST_CASE("coproduct distributes blocks: worked examples") {
    {
        // One block of three: primitive.
        LinComb<Tensor<Composition>> expect;
        expect.add({cp({3}), Composition()}, 1);
        expect.add({Composition(), cp({3})}, 1);
        CHECK(ISPW::coproduct(cp({3})) == expect);
    }
    {
        const auto d = ISPW::coproduct(cp({1, 2}));
        LinComb<Tensor<Composition>> expect;
        expect.add({cp({1, 2}), Composition()}, 1);
        expect.add({cp({1}), cp({2})}, 1);
        expect.add({cp({2}), cp({1})}, 1);
        expect.add({Composition(), cp({1, 2})}, 1);
        CHECK(d == expect);
    }
}

TEST_CASE("coproduct agrees with the ambient coproduct after killing x0 words (degree <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& alpha : ISPW::enumerate(n)) {
            const PackedWord w = block_word(alpha);
            LinComb<Tensor<Composition>> via_ambient;
            for (const auto& [t, c] : WMat::coproduct(w)) {
                bool zero_free = true;
                for (const auto& leg : t)
                    for (int v : leg.letters())
                        if (v == 0) zero_free = false;
                if (zero_free)
                    via_ambient.add({block_of_word(t[0]), block_of_word(t[1])}, c);
            }
            REQUIRE(via_ambient == ISPW::coproduct(alpha));
        }
    }
}

TEST_CASE("dimensions are 2^(n-1) up to degree 8") {
    CHECK(ISPW::enumerate(0).size() == 1);
    for (int n = 1; n <= 8; ++n)
        REQUIRE(ISPW::enumerate(n).size() == (1u << (n - 1)));
}

TEST_CASE("ISPW is cocommutative (degree <= 6)") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : ISPW::enumerate(n)) {
            const auto d = ISPW::coproduct(a);
            LinComb<Tensor<Composition>> swapped;
            for (const auto& [t, c] : d) swapped.add({t[1], t[0]}, c);
            REQUIRE(swapped == d);
        }
}

TEST_CASE("ISPW Hopf axioms up to degree 5") {
    const Report rep = verify_hopf_axioms<ISPW>(5, 4);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("primitive dimensions follow the free Lie series") {
    const int expected[] = {1, 1, 2, 3, 6, 9, 18, 30};
    for (int n = 1; n <= 8; ++n) {
        const auto prim = primitive_basis<ISPW>(n);
        REQUIRE(static_cast<int>(prim.size()) == expected[n - 1]);
        for (const auto& v : prim) REQUIRE(reduced_coproduct<ISPW>(v).is_zero());
    }
}

TEST_CASE("degree-3 primitives: the two printed generators") {
    const auto prim = primitive_basis<ISPW>(3);
    REQUIRE(prim.size() == 2);
    std::vector<RatVec> coords;
    for (const auto& v : prim) coords.push_back(coordinates<ISPW>(v, 3));
    CHECK(in_span(coords, coordinates<ISPW>(LinComb<Composition>(cp({3})), 3)));
    LinComb<Composition> gen = clc({{{2, 1}, 1}, {{1, 2}, -1}});  // x1x1x2 - x1x2x2
    CHECK(in_span(coords, coordinates<ISPW>(gen, 3)));
}

TEST_CASE("p_gamma: printed expansions") {
    // gamma = (1,1,2,2).
    CHECK(p_gamma({2, 2}, {1, 2}) ==
          clc({{{1, 1, 2, 2}, 1}, {{1, 2, 1, 2}, -2}, {{2, 1, 2, 1}, 2}, {{2, 2, 1, 1}, -1}}));
    // gamma = (1,2): the degree-3 bracket, positive on (1,2).
    CHECK(p_gamma({1, 1}, {1, 2}) == clc({{{1, 2}, 1}, {{2, 1}, -1}}));
    // gamma = (2,2,1,3): eight terms. The sign of (3,1,2,2) is pinned by the
    // primitivity requirement: with +1 the element is no longer in the
    // kernel of the reduced coproduct, with -1 it is.
    CHECK(p_gamma({2, 1, 1}, {2, 1, 3}) ==
          clc({{{2, 2, 1, 3}, 1},
               {{2, 1, 2, 3}, -2},
               {{1, 2, 3, 2}, 2},
               {{1, 3, 2, 2}, -1},
               {{2, 2, 3, 1}, 1},
               {{2, 3, 2, 1}, -2},
               {{3, 2, 1, 2}, 2},
               {{3, 1, 2, 2}, -1}}));
}

TEST_CASE("p_gamma and p_lambda_gamma are primitive for every parameter of weight <= 8") {
    // Zero is possible (gamma = (1,1) collapses to the bracket of x1 with
    // itself); primitivity is the claim under test.
    for (int weight = 1; weight <= 8; ++weight) {
        for (const auto& [alpha, beta] : gamma_params_of_weight(weight)) {
            CAPTURE(weight);
            const auto p = p_gamma(alpha, beta);
            if (!p.is_zero()) REQUIRE(reduced_coproduct<ISPW>(p).is_zero());
            const auto pl = p_lambda_gamma(alpha, beta);
            if (!pl.is_zero()) REQUIRE(reduced_coproduct<ISPW>(pl).is_zero());
        }
    }
}

TEST_CASE("p_lambda_gamma: printed ten-term expansion for gamma = (1,1,3,3,3)") {
    const auto p = p_lambda_gamma({2, 3}, {1, 3});
    CHECK(p == clc({{{1, 1, 3, 3, 3}, -3},
                    {{1, 3, 1, 3, 3}, 7},
                    {{3, 1, 1, 3, 3}, 2},
                    {{1, 3, 3, 1, 3}, -3},
                    {{3, 1, 3, 1, 3}, -8},
                    {{3, 3, 1, 1, 3}, 2},
                    {{1, 3, 3, 3, 1}, 2},
                    {{3, 1, 3, 3, 1}, -3},
                    {{3, 3, 1, 3, 1}, 7},
                    {{3, 3, 3, 1, 1}, -3}}));
}

TEST_CASE("relations between the two families") {
    // (a) alpha_1 = 1: equal.
    CHECK(p_lambda_gamma({1, 2}, {2, 5}) == p_gamma({1, 2}, {2, 5}));
    CHECK(p_lambda_gamma({1, 1, 1}, {1, 2, 3}) == p_gamma({1, 1, 1}, {1, 2, 3}));
    // (b) gamma = (b1,b1,b2,b2) or (b1,b1,b2,b3): factor -2.
    CHECK(p_lambda_gamma({2, 2}, {1, 3}) == Rational(-2) * p_gamma({2, 2}, {1, 3}));
    CHECK(p_lambda_gamma({2, 1, 1}, {2, 1, 3}) == Rational(-2) * p_gamma({2, 1, 1}, {2, 1, 3}));
    // (c) gamma = (b1^a1, b2): factor (-1)^(a1+1).
    CHECK(p_lambda_gamma({2, 1}, {1, 2}) == Rational(-1) * p_gamma({2, 1}, {1, 2}));
    CHECK(p_lambda_gamma({3, 1}, {1, 2}) == p_gamma({3, 1}, {1, 2}));
    CHECK(p_lambda_gamma({4, 1}, {2, 1}) == Rational(-1) * p_gamma({4, 1}, {2, 1}));
}

TEST_CASE("non-proportionality witnesses (d) and (e)") {
    {
        // (d) n = 2, alpha = (2,3), beta = (1,2), theta = 5: the witness
        // composition (b2, b1^a1, b2^(a2-1)) = (2,1,1,2,2) has coefficient 0
        // in p_gamma and (-1)^a1 C(theta-2, a1) - 1 = C(3,2) - 1 = 2 in
        // p_lambda_gamma, so no scalar makes the two proportional.
        const std::vector<int> alpha{2, 3}, beta{1, 2};
        const int theta = 5, a1 = 2;
        const Composition witness = cp({2, 1, 1, 2, 2});
        const Rational stated =
            Rational(((a1 % 2) ? -1 : 1)) * Rational(binomial(theta - 2, a1)) - 1;
        CHECK(p_gamma(alpha, beta).coeff(witness) == 0);
        CHECK(p_lambda_gamma(alpha, beta).coeff(witness) == stated);
        CHECK(stated != 0);
    }
    {
        // (e) n = 2, alpha = (3,2), beta = (1,2), theta = 5: witness
        // (b1, b2, b1^(a1-1), b2^(a2-1)) = (1,2,1,1,2), coefficient 0 in
        // p_gamma and theta - 1 + (-1)^theta = 3 in p_lambda_gamma.
        const std::vector<int> alpha{3, 2}, beta{1, 2};
        const int theta = 5;
        const Composition witness = cp({1, 2, 1, 1, 2});
        CHECK(p_gamma(alpha, beta).coeff(witness) == 0);
        CHECK(p_lambda_gamma(alpha, beta).coeff(witness) ==
              Rational(theta - 1 + ((theta % 2) ? -1 : 1)));
    }
}

TEST_CASE("degree 7: p_gamma family has rank exactly 17, the union stays below 18") {
    const auto basis7 = ISPW::enumerate(7);
    REQUIRE(basis7.size() == 64);
    std::vector<RatVec> pg;
    for (const auto& [alpha, beta] : gamma_params_of_weight(7))
        pg.push_back(coordinates<ISPW>(p_gamma(alpha, beta), 7));
    CHECK(rank_of_vectors(pg) == 17);

    std::vector<RatVec> both = pg;
    for (const auto& [alpha, beta] : gamma_params_of_weight(7))
        both.push_back(coordinates<ISPW>(p_lambda_gamma(alpha, beta), 7));
    CHECK(rank_of_vectors(both) < 18);
    CHECK(primitive_basis<ISPW>(7).size() == 18);
}

TEST_CASE("p_gamma spans the primitives in degree <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<RatVec> pg;
        for (const auto& [alpha, beta] : gamma_params_of_weight(n))
            pg.push_back(coordinates<ISPW>(p_gamma(alpha, beta), n));
        REQUIRE(rank_of_vectors(pg) == static_cast<int>(primitive_basis<ISPW>(n).size()));
    }
}

TEST_CASE("lambda_beta is a Hopf endomorphism on generators and products") {
    const std::vector<int> beta{2, 3};
    // Identity substitution.
    const auto x = clc({{{1, 2}, 1}, {{2, 1}, 3}});
    CHECK(lambda_beta({1, 2, 3, 4}, x) == x);
    // Generator-wise substitution.
    CHECK(lambda_beta(beta, LinComb<Composition>(cp({1, 2}))) ==
          LinComb<Composition>(cp({2, 3})));
    // Commutes with the coproduct on generators (k), k <= 4.
    for (int k = 1; k <= 4; ++k) {
        const std::vector<int> beta4{3, 1, 4, 2};
        const auto lhs = ISPW::coproduct(cp(std::vector<int>{
            k <= 4 ? beta4[k - 1] : k}));
        LinComb<Tensor<Composition>> rhs;
        for (const auto& [t, c] : ISPW::coproduct(cp({k}))) {
            const auto l = lambda_beta(beta4, LinComb<Composition>(t[0]));
            const auto r = lambda_beta(beta4, LinComb<Composition>(t[1]));
            auto prod = lc_tensor(l, r);
            prod *= c;
            rhs += prod;
        }
        REQUIRE(lhs == rhs);
    }
    // Multiplicative by construction; spot-check.
    CHECK(lambda_beta(beta, product_lc<ISPW>(LinComb<Composition>(cp({1})),
                                             LinComb<Composition>(cp({2})))) ==
          product_lc<ISPW>(lambda_beta(beta, LinComb<Composition>(cp({1}))),
                           lambda_beta(beta, LinComb<Composition>(cp({2})))));
}

TEST_CASE("partition support: the canonical primitive basis block-diagonalizes by partition") {
    for (int n = 1; n <= 6; ++n) {
        const auto basis = ISPW::enumerate(n);
        const auto prim = primitive_basis<ISPW>(n);
        const int d = static_cast<int>(prim.size());
        std::vector<RatVec> K;
        for (const auto& v : prim) K.push_back(coordinates<ISPW>(v, n));

        // Group columns by partition class.
        std::map<std::vector<int>, std::set<int>> classes;
        for (std::size_t j = 0; j < basis.size(); ++j)
            classes[partition_class(basis[j])].insert(static_cast<int>(j));

        int total = 0;
        for (const auto& [cls, cols] : classes) {
            // Combinations of kernel vectors supported inside the class:
            // kernel of the coefficient matrix restricted to outside columns.
            RatMat outside;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (cols.count(static_cast<int>(j))) continue;
                RatVec row(d);
                for (int i = 0; i < d; ++i) row[i] = K[i][j];
                outside.push_back(std::move(row));
            }
            total += static_cast<int>(kernel_basis(std::move(outside), d).size());
        }
        REQUIRE(total == d);
    }
}

TEST_CASE("dual: shuffle product worked examples") {
    CHECK(ISPWDual::product(zd(cp({2})), zd(cp({2}))) ==
          Rational(2) * LinComb<Zdual<Composition>>(zd(cp({2, 2}))));
    LinComb<Zdual<Composition>> expect;
    expect.add(zd(cp({1, 2, 2})), 2);
    expect.add(zd(cp({2, 1, 2})), 1);
    CHECK(ISPWDual::product(zd(cp({1, 2})), zd(cp({2}))) == expect);
}

TEST_CASE("dual: deconcatenation worked example") {
    const auto d = ISPWDual::coproduct(zd(cp({2, 1, 3})));
    LinComb<Tensor<Zdual<Composition>>> expect;
    expect.add({zd(Composition()), zd(cp({2, 1, 3}))}, 1);
    expect.add({zd(cp({2})), zd(cp({1, 3}))}, 1);
    expect.add({zd(cp({2, 1})), zd(cp({3}))}, 1);
    expect.add({zd(cp({2, 1, 3})), zd(Composition())}, 1);
    CHECK(d == expect);
}

TEST_CASE("dual closed forms equal the transposition oracles (total degree <= 5)") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& c : ISPW::enumerate(n))
            REQUIRE(ISPWDual::coproduct(zd(c)) == dual_coproduct_oracle<ISPW>(zd(c)));
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d1 + d2 <= 5; ++d2)
            for (const auto& a : ISPW::enumerate(d1))
                for (const auto& b : ISPW::enumerate(d2))
                    REQUIRE(ISPWDual::product(zd(a), zd(b)) ==
                            dual_product_oracle<ISPW>(zd(a), zd(b)));
}

TEST_CASE("dual Hopf axioms up to degree 4") {
    const Report rep = verify_hopf_axioms<ISPWDual>(4, 3);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(p_gamma({1, 1}, {2, 2}), std::invalid_argument);  // repeated beta
    CHECK_THROWS_AS(p_gamma({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(p_gamma({1, 0}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(lambda_beta({0}, LinComb<Composition>(cp({1}))), std::invalid_argument);
}
