#ifndef VMTK_REPORT_HPP
#define VMTK_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vmtk {

// One integer-exact verification record. A check passes iff
// expected == actual; boolean facts use expected = 1.
struct Check {
    std::string name;
    int64_t expected = 0;
    int64_t actual = 0;
    bool pass() const { return expected == actual; }
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, int64_t expected, int64_t actual);
    void add_bool(std::string name, bool condition);
    void merge(const Report& other);

    int passed() const;
    int total() const { return int(checks.size()); }
    bool all_pass() const { return passed() == total(); }
};

// Emits "CHECK <name> <expected> <actual> <PASS|FAIL>" lines sorted by
// check name, then a "RESULT <passed>/<total>" summary line.
void print_report(std::ostream& out, const Report& r);

} // namespace vmtk

#endif
