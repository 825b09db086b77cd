#pragma once

#include <string>
#include <vector>

namespace bdcoh {

struct Check {
    std::string name;
    bool passed = true;
    std::string witness; // empty when there is nothing to show
    std::string detail;
    bool informational = false; // does not affect Report::passed
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const;
    Check& add(std::string name, bool passed, std::string witness = {}, std::string detail = {});
    Check& info(std::string name, bool holds, std::string witness = {}, std::string detail = {});
    // Appends the checks of another report, prefixing their names.
    void merge(const Report& other, const std::string& prefix);
    const Check* first_failure() const;
};

} // namespace bdcoh
