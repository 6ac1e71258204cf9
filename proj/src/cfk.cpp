#include "csurg/cfk.hpp"

#include <algorithm>
#include <map>

namespace csurg {

std::vector<std::string> validate_cfk(const CfkData& c) {
    std::vector<std::string> out;
    if (c.genus < 0)
        out.push_back("genus-sign: genus must be nonnegative");

    const std::int64_t bound = 2 * c.genus;
    auto in_range = [&](std::int64_t a) { return a >= -bound && a <= bound; };

    if (c.tau * 2 > bound || c.tau * 2 < -bound)
        out.push_back("tau-genus: |tau| must not exceed the genus");

    std::map<std::int64_t, std::int64_t> multiset;
    multiset[2 * c.tau]++;
    for (const auto& a : c.arrows) {
        if (a.a_start % 2 != 0 || a.a_end % 2 != 0)
            out.push_back("grading-parity: doubled gradings must be even");
        if (!in_range(a.a_start) || !in_range(a.a_end))
            out.push_back("grading-range: |doubled grading| must not exceed 2g");
        if (a.a_start == a.a_end || (a.a_end - a.a_start) % 2 != 0)
            out.push_back("arrow-length: arrows must have positive integral length");
        multiset[a.a_start]++;
        multiset[a.a_end]++;
    }

    bool symmetric = true;
    for (const auto& [g, n] : multiset) {
        auto it = multiset.find(-g);
        if (it == multiset.end() || it->second != n)
            symmetric = false;
    }
    if (!symmetric)
        out.push_back("symmetry: graded dimensions must be symmetric under negation");

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace csurg
