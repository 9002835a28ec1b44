#include "combex/strategies/pack.hpp"

#include "combex/strategies/factor.hpp"
#include "combex/strategies/obstruction_inferral.hpp"
#include "combex/strategies/point_placement.hpp"
#include "combex/strategies/requirement_insertion.hpp"
#include "combex/strategies/separation.hpp"
#include "combex/strategies/verification.hpp"

namespace combex::tilings {

StrategyPack<Tiling> default_tiling_pack(const TilingPackOptions& options) {
  using Result = std::vector<Decomposition<Tiling>>;
  StrategyPack<Tiling> pack;
  pack.inferral.push_back({"row_col_sep", [](const Tiling& t) {
                             Result out;
                             if (auto d = row_column_separation(t)) out.push_back(std::move(*d));
                             return out;
                           }});
  pack.inferral.push_back({"obs_inf", [](const Tiling& t) {
                             Result out;
                             if (auto r = obstruction_inferral(t)) out.push_back({"obs_inf", {std::move(*r)}, Equivalence{}});
                             return out;
                           }});
  if (options.obs_inferral_max_len > 0) {
    const std::size_t len = options.obs_inferral_max_len;
    pack.inferral.push_back({"obs_inf_all", [len](const Tiling& t) {
                               Result out;
                               if (auto r = exhaustive_obstruction_inferral(t, len)) {
                                 out.push_back({"obs_inf_all:" + std::to_string(len), {std::move(*r)}, Equivalence{}});
                               }
                               return out;
                             }});
  }
  const bool partial = options.partial_factor;
  pack.initial.push_back({"factor", [partial](const Tiling& t) { return factorizations(t, partial); }});
  const std::size_t len = options.max_req_insert_len;
  pack.expansion.push_back(
      {{"req_ins", [len](const Tiling& t) { return all_requirement_insertions(t, len); }}});
  pack.expansion.push_back({{"point_pl", [](const Tiling& t) { return all_point_placements(t); }}});
  pack.verification.push_back({"verify", [](const Tiling& t) {
                                 Result out;
                                 if (auto v = verify(t)) {
                                   out.push_back({"verify:" + v->kind, {}, std::move(*v)});
                                 }
                                 return out;
                               }});
  return pack;
}

}  // namespace combex::tilings
