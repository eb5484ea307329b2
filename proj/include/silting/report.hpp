#pragma once

// JSON export helpers shared by the command layer and the tests.

#include <json.hpp>

#include "silting/repdim.hpp"

namespace silting {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Mat& m);
Json rep_to_json(const Representation& x);
Json catalog_to_json(const IndecCatalog& cat);
Json torsion_to_json(const TorsionPairReport& rep, const IndecCatalog& cat);
Json dim_to_json(const Dim& d);
Json repdim_to_json(const RepDimReport& rep);
Json resolution_to_json(const ProjResolution& res);

std::vector<std::string> stack_names(const IndecCatalog& cat,
                                     const std::vector<int>& idx);

}  // namespace silting
