#include "vmtk/report.hpp"

#include <algorithm>
#include <ostream>

namespace vmtk {

void Report::add(std::string name, int64_t expected, int64_t actual) {
    checks.push_back({std::move(name), expected, actual});
}

void Report::add_bool(std::string name, bool condition) {
    checks.push_back({std::move(name), 1, condition ? 1 : 0});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int Report::passed() const {
    int p = 0;
    for (const auto& c : checks)
        if (c.pass()) ++p;
    return p;
}

void print_report(std::ostream& out, const Report& r) {
    std::vector<Check> sorted = r.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    for (const auto& c : sorted)
        out << "CHECK " << c.name << ' ' << c.expected << ' ' << c.actual << ' '
            << (c.pass() ? "PASS" : "FAIL") << '\n';
    out << "RESULT " << r.passed() << '/' << r.total() << '\n';
}

} // namespace vmtk
