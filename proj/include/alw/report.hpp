#pragma once

#include <string>
#include <vector>

namespace alw {

struct Issue {
    std::string rule;    // which invariant or axiom
    std::string detail;  // witness, human readable
};

// Shared by structure validators and axiom checkers. `unknown` marks a run
// that stopped on its work budget: no verdict either way.
struct Report {
    std::vector<Issue> issues;
    bool unknown = false;
    std::size_t checked = 0;

    bool ok() const { return issues.empty() && !unknown; }
    void add(std::string rule, std::string detail) { issues.push_back({std::move(rule), std::move(detail)}); }
    bool has(const std::string& rule) const {
        for (auto& i : issues)
            if (i.rule == rule) return true;
        return false;
    }
    std::size_t count(const std::string& rule) const {
        std::size_t c = 0;
        for (auto& i : issues) c += (i.rule == rule);
        return c;
    }
};

using ValidationReport = Report;
using AxiomReport = Report;

}  // namespace alw
