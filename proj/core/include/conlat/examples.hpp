#pragma once

#include <string>
#include <vector>

#include "conlat/classify.hpp"

namespace conlat {

// Bundled pentagon instances with known classification outcomes, used by the
// `examples` command and as test fixtures.
struct WorkedExample {
    std::string name;
    std::string document;  // conlat-algebra v1 source
    std::string gamma, alpha, beta;
    Family expected_family;
    int expected_index;
};

const std::vector<WorkedExample>& worked_examples();

}  // namespace conlat
