#pragma once

#include "witt/derham_witt.hpp"
#include "witt/local_cohomology.hpp"
#include "witt/weyl.hpp"
#include "witt/witt_core.hpp"

#include "json.hpp"

namespace witt {

using json = nlohmann::json;

// {"p", "n", "vars", "neg": [indices], "terms": [{"e": [...], "c": c}]}, n = coefficient exponent
json to_json(const Laurent& f);
Laurent laurent_from_json(const json& j);

// {"p", "n", "coords": [Laurent...]}
json to_json(const WittVec& x);
WittVec witt_from_json(const json& j);

// Laurent layout plus "order" per term
json to_json(const WeylElement& op);
WeylElement weyl_from_json(const json& j);

// {"p", "n", "degree", "terms": [{"weight": [[u, v]...], "partition": [[...]...], "c"}]}
json to_json(const DRWElement& x);
DRWElement drw_from_json(const json& j);

json to_json(const CohClass& c);

json read_json_file(const std::string& path);

}  // namespace witt
