#pragma once

#include <json.hpp>

#include "bipmc/census.hpp"
#include "bipmc/classify.hpp"
#include "bipmc/ears.hpp"
#include "bipmc/kext.hpp"
#include "bipmc/recognize.hpp"

namespace bipmc::cli {

using Json = nlohmann::ordered_json;

Json to_json(const ExtremalReport& r);
Json to_json(const BoundCheck& b);
Json to_json(const EarDecomposition& ed);
Json to_json(const KExtendReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const LeafMatchingWitness& w);
Json to_json(const CensusRecord& r);
Json to_json(const CensusSummary& s);

}  // namespace bipmc::cli
