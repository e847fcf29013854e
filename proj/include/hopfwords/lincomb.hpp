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

#ifndef HOPFWORDS_LINCOMB_HPP
#define HOPFWORDS_LINCOMB_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfwords/rational.hpp"

namespace hopfwords {

/// Tensor term: an ordered tuple of basis labels. All terms of one linear
/// combination must share the same arity.
template <class L>
using Tensor = std::vector<L>;

template <class L>
struct tensor_arity {
    static std::size_t get(const L&) { return 0; }  // scalar label
};
template <class L>
struct tensor_arity<Tensor<L>> {
    static std::size_t get(const Tensor<L>& t) { return t.size(); }
};

/*
 * Sparse linear combination of basis labels with rational coefficients.
 * Invariants: no stored coefficient is zero; iteration follows the label
 * type's canonical order (std::map).
 */
template <class L>
class LinComb {
   public:
    using Label = L;
    using Map = std::map<L, Rational>;

    LinComb() = default;
    explicit LinComb(const L& label, Rational c = Rational(1)) { add(label, std::move(c)); }

    static LinComb zero() { return LinComb(); }

    void add(const L& label, const Rational& c) {
        if (c == 0) return;
        check_arity(label);
        auto [it, inserted] = terms_.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [label, c] : other.terms_) add(label, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [label, c] : other.terms_) add(label, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [label, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    bool operator==(const LinComb& other) const { return terms_ == other.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const L& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

   private:
    void check_arity(const L& label) const {
        const std::size_t a = tensor_arity<L>::get(label);
        if (a == 0) return;
        if (!terms_.empty() && tensor_arity<L>::get(terms_.begin()->first) != a)
            throw std::invalid_argument("LinComb: mixed tensor arities");
    }

    Map terms_;
};

/// Bilinear tensor of two scalar-label combinations.
template <class L>
LinComb<Tensor<L>> lc_tensor(const LinComb<L>& a, const LinComb<L>& b) {
    LinComb<Tensor<L>> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) out.add(Tensor<L>{la, lb}, ca * cb);
    return out;
}

/// Appends one more leg to every tensor term of `a`.
template <class L>
LinComb<Tensor<L>> lc_tensor(const LinComb<Tensor<L>>& a, const LinComb<L>& b) {
    LinComb<Tensor<L>> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            Tensor<L> t = la;
            t.push_back(lb);
            out.add(t, ca * cb);
        }
    return out;
}

/// Bilinear extension of a map defined on basis pairs.
template <class L, class F>
LinComb<L> bilinear(F&& f, const LinComb<L>& a, const LinComb<L>& b) {
    LinComb<L> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            LinComb<L> term = f(la, lb);
            term *= ca * cb;
            out += term;
        }
    return out;
}

/// Linear extension of a basis-defined map. Every label in the support must
/// be in the domain of `f`.
template <class LIn, class LOut>
LinComb<LOut> apply_linear(const std::function<LinComb<LOut>(const LIn&)>& f,
                           const LinComb<LIn>& a) {
    LinComb<LOut> out;
    for (const auto& [label, c] : a) {
        LinComb<LOut> img = f(label);
        img *= c;
        out += img;
    }
    return out;
}

}  // namespace hopfwords

#endif
