#include <cstdio>

#include "redhom/acceptance.hpp"

int main() {
    std::size_t failed = 0;
    const auto results = redhom::run_acceptance([&](const redhom::CriterionResult& r) {
        std::printf("%s\n", redhom::format_line(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    });
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
