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

#ifndef HOPFWORDS_VERIFY_HPP
#define HOPFWORDS_VERIFY_HPP

#include <string>

#include "hopfwords/report.hpp"

namespace hopfwords {

/*
 * Named verification suites. Each takes a degree budget; sweeps whose
 * documented budget is smaller use the minimum of the two, so small budgets
 * stay fast and large ones cover the full documented range.
 */
Report verify_hopf_suite(int max_degree);
Report verify_antipode_forms(int max_degree);
Report verify_dual_closed_forms(int max_degree);
Report verify_quadri(int max_degree);
Report verify_ispw_prim(int max_degree);
Report verify_ce_structure(int max_degree);
Report verify_semidirect(int max_degree, unsigned seed = 20260810);
Report verify_morphisms(int max_degree);

/// Every worked example from the sources, as exact golden equalities.
Report verify_golden_examples();

Report verify_all(int max_degree, unsigned seed = 20260810);

/// Runs the suite by CLI name; throws std::invalid_argument on unknown
/// names. Known names: hopf, antipode-forms, dual-closed-forms, quadri,
/// ispw-prim, ce-structure, semidirect, morphisms, golden, all.
Report verify_suite(const std::string& name, int max_degree, unsigned seed = 20260810);

}  // namespace hopfwords

#endif
