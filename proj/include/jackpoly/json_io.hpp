#pragma once

#include "json.hpp"

#include "jackpoly/ideals.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/ratfun.hpp"
#include "jackpoly/symfunc.hpp"

namespace jackpoly {

// Encodings used by the CLI:
//   RatFun    {"num": ["p/q", ...], "den": [...]}   coefficients lowest power first
//   Partition [3,1]
//   SymFn     {"basis":"m","degree":6,"terms":[{"partition":[2,1],"coeff":RatFun}]}
//   MultiPoly {"variables":["x1","y1"],"terms":[{"monomial":[1,0],"coeff":RatFun}]}
//   Filter    {"generators":[[2,2],[3]]}

nlohmann::json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json symfn_to_json(const SymFn& f);
SymFn symfn_from_json(const nlohmann::json& j);

nlohmann::json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

nlohmann::json filter_to_json(const Filter& f);
Filter filter_from_json(const nlohmann::json& j);

} // namespace jackpoly
