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

#ifndef HOPFWORDS_HOPFCORE_HPP
#define HOPFWORDS_HOPFCORE_HPP

#include <concepts>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hopfwords/lincomb.hpp"
#include "hopfwords/linalg.hpp"
#include "hopfwords/report.hpp"

namespace hopfwords {

/*
 * A graded connected Hopf algebra with an enumerable combinatorial basis.
 * Everything in this header works uniformly against this interface: the
 * degree-0 component must be spanned by unit() alone, product must be
 * degree-additive and coproduct degree-partitioning. The antipode is never
 * part of the interface; it is derived generically below.
 */
template <class A>
concept GradedHopfAlgebra = requires(const typename A::Basis& b, int n) {
    typename A::Basis;
    { A::degree(b) } -> std::convertible_to<int>;
    { A::unit() } -> std::convertible_to<typename A::Basis>;
    { A::enumerate(n) } -> std::convertible_to<std::vector<typename A::Basis>>;
    { A::product(b, b) } -> std::convertible_to<LinComb<typename A::Basis>>;
    { A::coproduct(b) } -> std::convertible_to<LinComb<Tensor<typename A::Basis>>>;
    { A::name() } -> std::convertible_to<std::string>;
    { A::label_str(b) } -> std::convertible_to<std::string>;
};

template <GradedHopfAlgebra A>
Rational counit_label(const typename A::Basis& b) {
    return A::degree(b) == 0 ? Rational(1) : Rational(0);
}

template <GradedHopfAlgebra A>
Rational counit(const LinComb<typename A::Basis>& x) {
    Rational r(0);
    for (const auto& [label, c] : x)
        if (A::degree(label) == 0) r += c;
    return r;
}

template <GradedHopfAlgebra A>
LinComb<typename A::Basis> product_lc(const LinComb<typename A::Basis>& a,
                                      const LinComb<typename A::Basis>& b) {
    LinComb<typename A::Basis> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            auto p = A::product(la, lb);
            p *= ca * cb;
            out += p;
        }
    return out;
}

template <GradedHopfAlgebra A>
LinComb<Tensor<typename A::Basis>> coproduct_lc(const LinComb<typename A::Basis>& x) {
    LinComb<Tensor<typename A::Basis>> out;
    for (const auto& [label, c] : x) {
        auto d = A::coproduct(label);
        d *= c;
        out += d;
    }
    return out;
}

/// Coproduct with a per-algebra write-once cache; the transposition oracles
/// hit the same labels over and over.
template <GradedHopfAlgebra A>
const LinComb<Tensor<typename A::Basis>>& coproduct_cached(const typename A::Basis& b) {
    using B = typename A::Basis;
    static std::map<B, LinComb<Tensor<B>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    return cache.emplace(b, A::coproduct(b)).first->second;
}

/// Reduced coproduct: the coproduct minus the two trivial tensors. Inputs
/// must have no degree-0 component.
template <GradedHopfAlgebra A>
LinComb<Tensor<typename A::Basis>> reduced_coproduct(const LinComb<typename A::Basis>& x) {
    using B = typename A::Basis;
    LinComb<Tensor<B>> out;
    const B one = A::unit();
    for (const auto& [label, c] : x) {
        if (A::degree(label) == 0)
            throw std::invalid_argument("reduced_coproduct: degree-0 component present");
        auto d = A::coproduct(label);
        d.add(Tensor<B>{label, one}, -1);
        d.add(Tensor<B>{one, label}, -1);
        d *= c;
        out += d;
    }
    return out;
}

/// k-fold iterated coproduct: (k+1)-leg tensors; k = 0 is the identity.
template <GradedHopfAlgebra A>
LinComb<Tensor<typename A::Basis>> iterated_coproduct(const LinComb<typename A::Basis>& x,
                                                      int k) {
    using B = typename A::Basis;
    if (k < 0) throw std::invalid_argument("iterated_coproduct: negative iteration count");
    LinComb<Tensor<B>> cur;
    for (const auto& [label, c] : x) cur.add(Tensor<B>{label}, c);
    for (int step = 0; step < k; ++step) {
        LinComb<Tensor<B>> next;
        for (const auto& [legs, c] : cur) {
            // Coassociativity makes the expanded leg irrelevant; expand the last.
            const auto& d = coproduct_cached<A>(legs.back());
            for (const auto& [pair, dc] : d) {
                Tensor<B> t(legs.begin(), legs.end() - 1);
                t.push_back(pair[0]);
                t.push_back(pair[1]);
                next.add(t, c * dc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

/// Componentwise product of 2-tensor combinations ((a x b)(c x d) = ac x bd).
template <GradedHopfAlgebra A>
LinComb<Tensor<typename A::Basis>> tensor2_product(
    const LinComb<Tensor<typename A::Basis>>& s,
    const LinComb<Tensor<typename A::Basis>>& t) {
    using B = typename A::Basis;
    LinComb<Tensor<B>> out;
    for (const auto& [ls, cs] : s)
        for (const auto& [lt, ct] : t) {
            const auto left = A::product(ls[0], lt[0]);
            const auto right = A::product(ls[1], lt[1]);
            auto prod = lc_tensor(left, right);
            prod *= cs * ct;
            out += prod;
        }
    return out;
}

/*
 * Generic antipode by degree recursion: S(unit) = unit and
 * S(b) = -b - sum S(b') b'' over the reduced coproduct of b. This is the
 * convolution inverse of the identity.
 */
template <GradedHopfAlgebra A>
const LinComb<typename A::Basis>& antipode_label(const typename A::Basis& b) {
    using B = typename A::Basis;
    static std::map<B, LinComb<B>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    std::function<const LinComb<B>&(const B&)> go = [&](const B& label) -> const LinComb<B>& {
        auto it = cache.find(label);
        if (it != cache.end()) return it->second;
        LinComb<B> result;
        if (A::degree(label) == 0) {
            result.add(label, 1);
        } else {
            result.add(label, -1);
            const B one = A::unit();
            auto red = A::coproduct(label);
            red.add(Tensor<B>{label, one}, -1);
            red.add(Tensor<B>{one, label}, -1);
            for (const auto& [pair, c] : red) {
                auto term = product_lc<A>(go(pair[0]), LinComb<B>(pair[1]));
                term *= c;
                result -= term;
            }
        }
        return cache.emplace(label, std::move(result)).first->second;
    };
    return go(b);
}

template <GradedHopfAlgebra A>
LinComb<typename A::Basis> antipode(const LinComb<typename A::Basis>& x) {
    LinComb<typename A::Basis> out;
    for (const auto& [label, c] : x) {
        auto s = antipode_label<A>(label);
        s *= c;
        out += s;
    }
    return out;
}

/// Convolution product of two basis-defined endomorphisms applied to x:
/// m o (f x g) o Delta.
template <GradedHopfAlgebra A>
LinComb<typename A::Basis> convolution(
    const std::function<LinComb<typename A::Basis>(const typename A::Basis&)>& f,
    const std::function<LinComb<typename A::Basis>(const typename A::Basis&)>& g,
    const LinComb<typename A::Basis>& x) {
    using B = typename A::Basis;
    LinComb<B> out;
    for (const auto& [label, c] : x) {
        for (const auto& [pair, dc] : A::coproduct(label)) {
            auto term = product_lc<A>(f(pair[0]), g(pair[1]));
            term *= c * dc;
            out += term;
        }
    }
    return out;
}

/// Formal dual-basis label Z_b.
template <class L>
struct Zdual {
    L primal;
    auto operator<=>(const Zdual&) const = default;
};

template <class L>
Zdual<L> zd(L label) {
    return Zdual<L>{std::move(label)};
}

/*
 * Transposed product: <Za Zb, c> = <Za x Zb, Delta(c)>. Brute force over the
 * enumerated basis; this is the ground truth every closed dual formula is
 * checked against.
 */
template <GradedHopfAlgebra A>
LinComb<Zdual<typename A::Basis>> dual_product_oracle(const Zdual<typename A::Basis>& za,
                                                      const Zdual<typename A::Basis>& zb) {
    using B = typename A::Basis;
    LinComb<Zdual<B>> out;
    const int d = A::degree(za.primal) + A::degree(zb.primal);
    const Tensor<B> key{za.primal, zb.primal};
    for (const B& c : A::enumerate(d)) {
        const Rational coeff = coproduct_cached<A>(c).coeff(key);
        if (coeff != 0) out.add(zd(c), coeff);
    }
    return out;
}

/// Transposed coproduct: deconcatenates along <Zc, a b>.
template <GradedHopfAlgebra A>
LinComb<Tensor<Zdual<typename A::Basis>>> dual_coproduct_oracle(
    const Zdual<typename A::Basis>& zc) {
    using B = typename A::Basis;
    LinComb<Tensor<Zdual<B>>> out;
    const int n = A::degree(zc.primal);
    for (int i = 0; i <= n; ++i) {
        for (const B& a : A::enumerate(i)) {
            for (const B& b : A::enumerate(n - i)) {
                const Rational coeff = A::product(a, b).coeff(zc.primal);
                if (coeff != 0) out.add(Tensor<Zdual<B>>{zd(a), zd(b)}, coeff);
            }
        }
    }
    return out;
}

/// The graded dual, materialized through the transposition oracles.
template <GradedHopfAlgebra A>
struct DualOf {
    using Basis = Zdual<typename A::Basis>;
    static int degree(const Basis& b) { return A::degree(b.primal); }
    static Basis unit() { return {A::unit()}; }
    static std::vector<Basis> enumerate(int n) {
        std::vector<Basis> out;
        for (const auto& b : A::enumerate(n)) out.push_back({b});
        return out;
    }
    static LinComb<Basis> product(const Basis& a, const Basis& b) {
        return dual_product_oracle<A>(a, b);
    }
    static LinComb<Tensor<Basis>> coproduct(const Basis& c) {
        return dual_coproduct_oracle<A>(c);
    }
    static std::string name() { return A::name() + "-dual"; }
    static std::string label_str(const Basis& b) { return "Z" + A::label_str(b.primal); }
};

/*
 * Canonical basis of the primitive elements of degree n: the kernel of the
 * reduced coproduct on the degree-n component, in reduced echelon
 * normalization (free variables set to 1 in increasing canonical-basis
 * order).
 */
template <GradedHopfAlgebra A>
std::vector<LinComb<typename A::Basis>> primitive_basis(int n) {
    using B = typename A::Basis;
    if (n < 1) throw std::invalid_argument("primitive_basis: degree must be positive");
    const std::vector<B> basis = A::enumerate(n);
    const int cols = static_cast<int>(basis.size());

    std::map<Tensor<B>, int> row_index;
    std::vector<std::map<int, Rational>> col_entries(cols);
    for (int c = 0; c < cols; ++c) {
        const auto red = reduced_coproduct<A>(LinComb<B>(basis[c]));
        for (const auto& [t, coeff] : red) {
            auto [it, inserted] = row_index.try_emplace(t, static_cast<int>(row_index.size()));
            col_entries[c][it->second] = coeff;
        }
    }
    RatMat m(row_index.size(), RatVec(cols, Rational(0)));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, coeff] : col_entries[c]) m[r][c] = coeff;

    std::vector<LinComb<B>> out;
    for (const RatVec& v : kernel_basis(std::move(m), cols)) {
        LinComb<B> lc;
        for (int c = 0; c < cols; ++c) lc.add(basis[c], v[c]);
        out.push_back(std::move(lc));
    }
    return out;
}

/// Coordinate vector of x in the canonical degree-n basis.
template <GradedHopfAlgebra A>
RatVec coordinates(const LinComb<typename A::Basis>& x, int n) {
    const auto basis = A::enumerate(n);
    RatVec v(basis.size(), Rational(0));
    std::map<typename A::Basis, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    for (const auto& [label, c] : x) {
        auto it = index.find(label);
        if (it == index.end())
            throw std::invalid_argument("coordinates: label of wrong degree");
        v[it->second] = c;
    }
    return v;
}

/*
 * Executable form of the bialgebra/Hopf axioms, exhaustive on the basis up
 * to max_degree (antipode identities up to antipode_degree, which is the
 * expensive part). Returns one line per axiom per degree; failures carry
 * the first counterexample.
 */
template <GradedHopfAlgebra A>
Report verify_hopf_axioms(int max_degree, int antipode_degree = -1) {
    using B = typename A::Basis;
    if (antipode_degree < 0) antipode_degree = std::min(max_degree, 4);
    Report rep;
    const B one = A::unit();
    const std::string nm = A::name();

    {
        const auto deg0 = A::enumerate(0);
        rep.add(nm + ": connectedness (degree 0 = span of unit)",
                deg0.size() == 1 && deg0[0] == one && A::degree(one) == 0);
    }

    for (int d = 0; d <= max_degree; ++d) {
        bool counit_ok = true, coassoc_ok = true, grading_ok = true;
        std::string counit_cex, coassoc_cex, grading_cex;
        for (const B& b : A::enumerate(d)) {
            const auto cop = A::coproduct(b);
            LinComb<B> left_counit, right_counit;
            for (const auto& [t, c] : cop) {
                if (A::degree(t[0]) + A::degree(t[1]) != d && grading_ok) {
                    grading_ok = false;
                    grading_cex = A::label_str(b);
                }
                if (A::degree(t[0]) == 0) left_counit.add(t[1], c);
                if (A::degree(t[1]) == 0) right_counit.add(t[0], c);
            }
            const LinComb<B> expect(b);
            if ((left_counit != expect || right_counit != expect) && counit_ok) {
                counit_ok = false;
                counit_cex = A::label_str(b);
            }
            // (Delta x id) Delta versus (id x Delta) Delta.
            LinComb<Tensor<B>> lhs, rhs;
            for (const auto& [t, c] : cop) {
                for (const auto& [u, cu] : A::coproduct(t[0]))
                    lhs.add(Tensor<B>{u[0], u[1], t[1]}, c * cu);
                for (const auto& [u, cu] : A::coproduct(t[1]))
                    rhs.add(Tensor<B>{t[0], u[0], u[1]}, c * cu);
            }
            if (lhs != rhs && coassoc_ok) {
                coassoc_ok = false;
                coassoc_cex = A::label_str(b);
            }
        }
        const std::string sd = std::to_string(d);
        rep.add(nm + ": counit laws, degree " + sd, counit_ok, counit_cex);
        rep.add(nm + ": coassociativity, degree " + sd, coassoc_ok, coassoc_cex);
        rep.add(nm + ": coproduct grading, degree " + sd, grading_ok, grading_cex);
    }

    for (int total = 0; total <= max_degree; ++total) {
        bool compat_ok = true, grading_ok = true, counit_mult_ok = true;
        std::string compat_cex, grading_cex;
        for (int d1 = 0; d1 <= total; ++d1) {
            for (const B& a : A::enumerate(d1)) {
                for (const B& b : A::enumerate(total - d1)) {
                    const auto prod = A::product(a, b);
                    for (const auto& [label, c] : prod)
                        if (A::degree(label) != total && grading_ok) {
                            grading_ok = false;
                            grading_cex = A::label_str(a) + " , " + A::label_str(b);
                        }
                    const auto lhs = coproduct_lc<A>(prod);
                    const auto rhs = tensor2_product<A>(A::coproduct(a), A::coproduct(b));
                    if (lhs != rhs && compat_ok) {
                        compat_ok = false;
                        compat_cex = A::label_str(a) + " , " + A::label_str(b);
                    }
                    if (counit<A>(prod) != counit_label<A>(a) * counit_label<A>(b))
                        counit_mult_ok = false;
                }
            }
        }
        const std::string sd = std::to_string(total);
        rep.add(nm + ": coproduct is an algebra morphism, total degree " + sd, compat_ok,
                compat_cex);
        rep.add(nm + ": product grading, total degree " + sd, grading_ok, grading_cex);
        rep.add(nm + ": counit multiplicativity, total degree " + sd, counit_mult_ok);
    }

    {
        bool assoc_ok = true, unit_ok = true;
        std::string assoc_cex;
        const int cap = std::min(max_degree, 4);
        for (int d1 = 1; d1 <= cap; ++d1)
            for (int d2 = 1; d1 + d2 <= cap; ++d2)
                for (int d3 = 1; d1 + d2 + d3 <= cap; ++d3)
                    for (const B& a : A::enumerate(d1))
                        for (const B& b : A::enumerate(d2))
                            for (const B& c : A::enumerate(d3)) {
                                const auto lhs = product_lc<A>(A::product(a, b), LinComb<B>(c));
                                const auto rhs = product_lc<A>(LinComb<B>(a), A::product(b, c));
                                if (lhs != rhs && assoc_ok) {
                                    assoc_ok = false;
                                    assoc_cex = A::label_str(a) + " , " + A::label_str(b) +
                                                " , " + A::label_str(c);
                                }
                            }
        for (int d = 0; d <= max_degree && unit_ok; ++d)
            for (const B& b : A::enumerate(d))
                if (A::product(one, b) != LinComb<B>(b) || A::product(b, one) != LinComb<B>(b))
                    unit_ok = false;
        rep.add(nm + ": product associativity (degree <= " + std::to_string(cap) + ")",
                assoc_ok, assoc_cex);
        rep.add(nm + ": unit laws", unit_ok);
    }

    for (int d = 1; d <= antipode_degree; ++d) {
        bool ok = true;
        std::string cex;
        for (const B& b : A::enumerate(d)) {
            LinComb<B> left, right;
            for (const auto& [t, c] : A::coproduct(b)) {
                auto l = product_lc<A>(antipode_label<A>(t[0]), LinComb<B>(t[1]));
                l *= c;
                left += l;
                auto r = product_lc<A>(LinComb<B>(t[0]), antipode_label<A>(t[1]));
                r *= c;
                right += r;
            }
            if (!left.is_zero() || !right.is_zero()) {
                ok = false;
                cex = A::label_str(b);
                break;
            }
        }
        rep.add(nm + ": antipode identity, degree " + std::to_string(d), ok, cex);
    }
    return rep;
}

}  // namespace hopfwords

#endif
