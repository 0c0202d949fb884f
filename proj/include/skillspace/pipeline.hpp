#pragma once

#include <string>
#include <vector>

#include "skillspace/corpus.hpp"
#include "skillspace/oracle.hpp"

namespace skillspace {

enum class Engine { vectorised, naive };

struct PairSimilarity {
    std::string group_a;
    std::string group_b;
    double weighted = 0.0;
    double cosine = 0.0;
};

// End-to-end run: presence -> RCA -> theta -> one SSS per unordered group
// pair, on the selected engine. Pair order follows the (sorted) group map.
std::vector<PairSimilarity> run_pipeline(const Corpus& corpus, Engine engine);

}  // namespace skillspace
