#include "bdcoh/report.hpp"

namespace bdcoh {

bool Report::passed() const
{
    for (const auto& c : checks)
        if (!c.informational && !c.passed)
            return false;
    return true;
}

Check& Report::add(std::string name, bool passed, std::string witness, std::string detail)
{
    checks.push_back(Check{std::move(name), passed, std::move(witness), std::move(detail), false});
    return checks.back();
}

Check& Report::info(std::string name, bool holds, std::string witness, std::string detail)
{
    checks.push_back(Check{std::move(name), holds, std::move(witness), std::move(detail), true});
    return checks.back();
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (Check c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
    for (const auto& n : other.notes)
        notes.push_back(prefix + n);
}

const Check* Report::first_failure() const
{
    for (const auto& c : checks)
        if (!c.informational && !c.passed)
            return &c;
    return nullptr;
}

} // namespace bdcoh
