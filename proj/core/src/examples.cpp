#include "conlat/examples.hpp"

namespace conlat {

namespace {

const char* kPentagonM2 = R"(conlat-algebra v1
# Ten elements, projections only. The pentagon gamma0 < alpha, beta has a
# relative top, and its chain ascends once before stabilizing below alpha;
# gamma1 is the chain's first step.
universe 10
partition beta   = [[0,1],[2,3],[4,5],[6,8],[7,9]]
partition gamma0 = [[0],[1,2],[3,4],[5],[6,7],[8],[9]]
partition gamma1 = [[0],[1,2],[3,4],[5],[6,7],[8,9]]
partition alpha  = [[0,5],[1,2],[3,4],[6,7],[8,9]]
)";

const char* kPentagonK2 = R"(conlat-algebra v1
# Nine elements, projections only. The chain needs two strict steps to climb
# from gamma0 to alpha; gamma1 is the intermediate congruence.
universe 9
partition beta   = [[0,2,5],[1,3,8],[4,6,7]]
partition gamma0 = [[0],[1],[2],[3],[4],[5,6],[7,8]]
partition gamma1 = [[0],[1],[2,3,4],[5,6],[7,8]]
partition alpha  = [[0,1],[2,3,4],[5,6],[7,8]]
)";

}  // namespace

const std::vector<WorkedExample>& worked_examples() {
    static const std::vector<WorkedExample> examples = {
        {"pentagon-m2", kPentagonM2, "gamma0", "alpha", "beta", Family::M, 2},
        {"pentagon-k2", kPentagonK2, "gamma0", "alpha", "beta", Family::K, 2},
    };
    return examples;
}

}  // namespace conlat
