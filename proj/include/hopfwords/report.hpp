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

#ifndef HOPFWORDS_REPORT_HPP
#define HOPFWORDS_REPORT_HPP

#include <string>
#include <vector>

namespace hopfwords {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample, empty on pass
};

/// Outcome of a verification suite: one line per executed check.
class Report {
   public:
    void add(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    bool ok() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks_)
            if (!c.pass) ++n;
        return n;
    }
    const std::vector<CheckResult>& checks() const { return checks_; }

    std::string to_text() const {
        std::string out;
        for (const auto& c : checks_) {
            out += c.pass ? "PASS " : "FAIL ";
            out += c.name;
            if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
            out += "\n";
        }
        return out;
    }

   private:
    std::vector<CheckResult> checks_;
};

}  // namespace hopfwords

#endif
