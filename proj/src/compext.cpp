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

#include "hopfwords/compext.hpp"

#include <algorithm>

#include "hopfwords/ispw.hpp"

namespace hopfwords {

std::string to_string(const ExtComposition& e) {
    std::string s = "(" + std::to_string(e.a0) + ";";
    for (int i = 0; i < e.parts.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.parts.parts[i]);
    }
    return s + ")";
}

ExtComposition pi_project(const PackedWord& w) {
    const auto st = word_stats(w);
    int zeros = 0;
    if (auto it = st.freq.find(0); it != st.freq.end()) zeros = it->second;
    std::vector<int> parts;
    for (int v = 1; v <= st.sup; ++v) parts.push_back(st.freq.at(v));
    return ExtComposition(zeros, Composition(std::move(parts)));
}

LinComb<ExtComposition> pi_project(const LinComb<PackedWord>& x) {
    LinComb<ExtComposition> out;
    for (const auto& [w, c] : x) out.add(pi_project(w), c);
    return out;
}

std::vector<ExtComposition> Ce::enumerate(int n) {
    if (n > 10)
        throw ResourceLimitError("ce: degree " + std::to_string(n) + " exceeds cap 10");
    std::vector<ExtComposition> out;
    for (int a0 = 0; a0 <= n; ++a0)
        for (auto& parts : compositions_of(n - a0))
            out.push_back(ExtComposition(a0, Composition(std::move(parts))));
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<ExtComposition> Ce::product(const Basis& a, const Basis& b) {
    return LinComb<ExtComposition>(ExtComposition(a.a0 + b.a0, concat(a.parts, b.parts)));
}

LinComb<Tensor<ExtComposition>> Ce::coproduct(const Basis& e) {
    const int p = e.parts.length();
    const auto& parts = e.parts.parts;
    LinComb<Tensor<ExtComposition>> out;
    for (int a = 0; a <= e.a0; ++a) {
        const Rational ca(binomial(e.a0, a));
        for (unsigned mask = 0; mask < (1u << p); ++mask) {
            std::vector<int> in_idx, out_parts;
            for (int i = 0; i < p; ++i)
                if ((mask >> i) & 1u)
                    in_idx.push_back(i);
                else
                    out_parts.push_back(parts[i]);
            // All sub-block sizes 1 <= k_i <= a_i for the selected parts.
            std::vector<int> k(in_idx.size());
            auto rec = [&](auto&& self, std::size_t j, Rational coeff, int removed) -> void {
                if (j == in_idx.size()) {
                    std::vector<int> left_parts;
                    left_parts.reserve(in_idx.size());
                    for (std::size_t t = 0; t < in_idx.size(); ++t) left_parts.push_back(k[t]);
                    ExtComposition left(a, Composition(std::move(left_parts)));
                    ExtComposition right(e.a0 - a + removed, Composition(out_parts));
                    out.add(Tensor<ExtComposition>{std::move(left), std::move(right)},
                            ca * coeff);
                    return;
                }
                const int ai = parts[in_idx[j]];
                for (k[j] = 1; k[j] <= ai; ++k[j])
                    self(self, j + 1, coeff * Rational(binomial(ai, k[j])),
                         removed + ai - k[j]);
            };
            rec(rec, 0, Rational(1), 0);
        }
    }
    return out;
}

std::vector<Composition> TensC::enumerate(int n) {
    if (n > 10)
        throw ResourceLimitError("tens-c: degree " + std::to_string(n) + " exceeds cap 10");
    std::vector<Composition> out;
    for (auto& parts : compositions_of(n)) out.push_back(Composition(std::move(parts)));
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<Tensor<Composition>> TensC::coproduct(const Composition& a) {
    // Generators are primitive; a word of generators splits over subsets.
    const int q = a.length();
    LinComb<Tensor<Composition>> out;
    for (unsigned mask = 0; mask < (1u << q); ++mask) {
        std::vector<int> left, right;
        for (int i = 0; i < q; ++i)
            ((mask >> i) & 1u ? left : right).push_back(a.parts[i]);
        out.add(Tensor<Composition>{Composition(std::move(left)), Composition(std::move(right))},
                1);
    }
    return out;
}

std::string TensC::label_str(const Composition& b) {
    std::string s = "(0;";
    for (int i = 0; i < b.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(b.parts[i]);
    }
    return s + ")";
}

LinComb<CHPair> rho_coaction(const Composition& c) {
    const int q = c.length();
    LinComb<CHPair> out;
    std::vector<int> k(q);
    auto rec = [&](auto&& self, int j, Rational coeff, int removed) -> void {
        if (j == q) {
            out.add({Composition(k), removed}, coeff);
            return;
        }
        for (k[j] = 1; k[j] <= c.parts[j]; ++k[j])
            self(self, j + 1, coeff * Rational(binomial(c.parts[j], k[j])),
                 removed + c.parts[j] - k[j]);
    };
    rec(rec, 0, Rational(1), 0);
    return out;
}

std::vector<HCPair> SemiDirect::enumerate(int n) {
    if (n > 10)
        throw ResourceLimitError("semidirect: degree " + std::to_string(n) + " exceeds cap 10");
    std::vector<HCPair> out;
    for (int m = 0; m <= n; ++m)
        for (auto& parts : compositions_of(n - m)) out.push_back({m, Composition(std::move(parts))});
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<HCPair> SemiDirect::product(const Basis& a, const Basis& b) {
    return LinComb<HCPair>({a.first + b.first, concat(a.second, b.second)});
}

LinComb<Tensor<HCPair>> SemiDirect::coproduct(const Basis& x) {
    const auto& [m, c] = x;
    LinComb<Tensor<HCPair>> out;
    for (const auto& [split, cs] : TensC::coproduct(c)) {
        const Composition& c_left = split[0];
        const Composition& c_right = split[1];
        for (const auto& [rho_term, cr] : rho_coaction(c_left)) {
            for (int j = 0; j <= m; ++j) {
                // Left leg: (j, shrunk word); right leg: the removed amount
                // multiplies into the polynomial side.
                out.add(Tensor<HCPair>{{j, rho_term.first},
                                       {m - j + rho_term.second, c_right}},
                        cs * cr * Rational(binomial(m, j)));
            }
        }
    }
    return out;
}

std::string SemiDirect::label_str(const Basis& b) {
    return PolyH::label_str(b.first) + "#" + TensC::label_str(b.second);
}

HCPair upsilon(const ExtComposition& e) { return {e.a0, e.parts}; }

ExtComposition upsilon_inv(const HCPair& p) { return ExtComposition(p.first, p.second); }

std::vector<std::vector<int>> weak_compositions(int m, int p) {
    std::vector<std::vector<int>> out;
    if (p == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(p);
    auto rec = [&](auto&& self, int j, int rest) -> void {
        if (j == p - 1) {
            cur[j] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[j] = v;
            self(self, j + 1, rest - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

LinComb<Zdual<Composition>> rho_star(const Zdual<Composition>& z, int k) {
    if (k < 0) throw std::invalid_argument("rho_star: negative exponent");
    const int s = z.primal.length();
    LinComb<Zdual<Composition>> out;
    if (s == 0) {
        // The dual unit of C is killed by positive-degree duals and fixed by
        // the dual unit of the polynomial side.
        if (k == 0) out.add(z, 1);
        return out;
    }
    for (const auto& delta : weak_compositions(k, s)) {
        Rational coeff(1);
        std::vector<int> parts(s);
        for (int i = 0; i < s; ++i) {
            parts[i] = z.primal.parts[i] + delta[i];
            coeff *= Rational(binomial(parts[i], z.primal.parts[i]));
        }
        out.add(zd(Composition(std::move(parts))), coeff);
    }
    return out;
}

CharacterH omega_h(const Rational& lambda) {
    return {[lambda](int m) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= lambda;
        return r;
    }};
}

CharacterC omega_c(const TruncatedSeries& a) {
    return {[a](const Composition& c) {
        Rational r(1);
        for (int p : c.parts) r *= Rational(factorial(p)) * a.coeff(p);
        return r;
    }};
}

CharacterC omega_c_bar(const TruncatedSeries& a) {
    return {[a](const Composition& c) {
        Rational r(1);
        for (int p : c.parts) r *= a.coeff(p) / Rational(factorial(p));
        return r;
    }};
}

TruncatedSeries omega_action_composite(const Rational& lambda, const TruncatedSeries& a) {
    if (a.has_constant_term())
        throw std::invalid_argument("omega_action: series must have no constant term");
    const int order = a.order();
    const CharacterC chi = omega_c(a);
    const CharacterH eta = omega_h(lambda);
    // Pair the two characters through the coaction, then read the resulting
    // character back off as a series via the inverse normalization.
    TruncatedSeries paired(order);
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (const auto& [term, c] : rho_coaction(Composition(std::vector<int>{n})))
            acc += c * chi.eval(term.first) * eta.eval(term.second);
        paired.set_coeff(n, acc);
    }
    TruncatedSeries out(order);
    for (int s = 1; s <= order; ++s) {
        // omega_c_bar(paired) evaluated on the generator of size s.
        out.set_coeff(s, omega_c_bar(paired).eval(Composition(std::vector<int>{s})));
    }
    return out;
}

TruncatedSeries omega_action_direct(const Rational& lambda, const TruncatedSeries& a) {
    if (a.has_constant_term())
        throw std::invalid_argument("omega_action: series must have no constant term");
    return a * TruncatedSeries::exponential(lambda, a.order());
}

LinComb<ExtComposition> gamma_2_ones(int n) {
    if (n < 1) throw std::invalid_argument("gamma_2_ones: n must be >= 1");
    LinComb<ExtComposition> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> parts;
        for (int r = 0; r < k; ++r) parts.push_back(1);
        parts.push_back(2);
        for (int r = 0; r < n - k; ++r) parts.push_back(1);
        out.add(ExtComposition(0, Composition(std::move(parts))),
                Rational((k % 2) ? -1 : 1) * Rational(binomial(n, k)));
    }
    return out;
}

namespace {

LinComb<ExtComposition> with_zero_head(const LinComb<Composition>& x) {
    LinComb<ExtComposition> out;
    for (const auto& [c, coeff] : x) out.add(ExtComposition(0, c), coeff);
    return out;
}

}  // namespace

LinComb<ExtComposition> gamma_ce(const std::vector<int>& alpha, const std::vector<int>& beta) {
    return with_zero_head(p_gamma(alpha, beta));
}

LinComb<ExtComposition> gamma_lambda_ce(const std::vector<int>& alpha,
                                        const std::vector<int>& beta) {
    return with_zero_head(p_lambda_gamma(alpha, beta));
}

LinComb<Zdual<ExtComposition>> CeDual::product(const Basis& a, const Basis& b) {
    const ExtComposition& x = a.primal;
    const ExtComposition& y = b.primal;
    const int p = x.parts.length(), q = y.parts.length();
    LinComb<Basis> out;
    for (int mu = 0; mu <= y.a0; ++mu) {
        const Rational c0(binomial(x.a0 + mu, x.a0));
        for (const auto& g : weak_compositions(y.a0 - mu, p)) {
            Rational cg = c0;
            std::vector<int> grown(p);
            for (int i = 0; i < p; ++i) {
                grown[i] = x.parts.parts[i] + g[i];
                cg *= Rational(binomial(grown[i], x.parts.parts[i]));
            }
            std::vector<int> merged = grown;
            merged.insert(merged.end(), y.parts.parts.begin(), y.parts.parts.end());
            for (const auto& tau : shuffles(p, q)) {
                const Permutation inv = tau.inverse();
                std::vector<int> parts(p + q);
                for (int i = 1; i <= p + q; ++i) parts[i - 1] = merged[inv(i) - 1];
                out.add(zd(ExtComposition(x.a0 + mu, Composition(std::move(parts)))), cg);
            }
        }
    }
    return out;
}

LinComb<Tensor<Zdual<ExtComposition>>> CeDual::coproduct(const Basis& z) {
    const ExtComposition& e = z.primal;
    const int s = e.parts.length();
    LinComb<Tensor<Basis>> out;
    for (int a = 0; a <= e.a0; ++a) {
        for (int u = 0; u <= s; ++u) {
            ExtComposition left(
                a, Composition(std::vector<int>(e.parts.parts.begin(), e.parts.parts.begin() + u)));
            ExtComposition right(
                e.a0 - a,
                Composition(std::vector<int>(e.parts.parts.begin() + u, e.parts.parts.end())));
            out.add(Tensor<Basis>{zd(std::move(left)), zd(std::move(right))}, 1);
        }
    }
    return out;
}

}  // namespace hopfwords
