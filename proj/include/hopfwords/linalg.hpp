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

#ifndef HOPFWORDS_LINALG_HPP
#define HOPFWORDS_LINALG_HPP

#include <vector>

#include "hopfwords/rational.hpp"

namespace hopfwords {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Reduced row echelon form, pivot columns chosen left to right.
/// Returns the pivot column indices in order.
std::vector<int> rref_inplace(RatMat& m);

int rank(const RatMat& m);

/// Rank by fraction-free (Bareiss) elimination over the integers, with a
/// right-to-left pivot sweep. Independent of rref_inplace in both algorithm
/// and elimination order, so the two can cross-check each other.
int rank_bareiss(const RatMat& m);

/*
 * Canonical basis of the right null space {v : M v = 0}. Derived from the
 * reduced echelon form: one vector per free column, that free variable set
 * to 1 (free columns visited in increasing order), the rest solved from the
 * pivot equations. `cols` must be passed explicitly so an empty matrix
 * yields the full identity-sized basis.
 */
std::vector<RatVec> kernel_basis(RatMat m, int cols);

/// Whether v lies in the span of the given vectors (all of equal length).
bool in_span(const std::vector<RatVec>& span, const RatVec& v);

/// Rank of a list of vectors seen as matrix rows.
int rank_of_vectors(const std::vector<RatVec>& vecs);

}  // namespace hopfwords

#endif
