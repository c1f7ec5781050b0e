#pragma once

#include <functional>
#include <vector>

#include "radarrm/model.hpp"

namespace radarrm {

/// Candidate grid for configuration enumeration.
struct ConfigGrid {
  std::vector<double> dwell_choices;    // seconds
  std::vector<double> revisit_choices;  // seconds
};

using UtilityFn = std::function<double(double dwell, double revisit)>;

/// One configuration per (dwell, revisit) pair plus the base entry.
/// Pairs requiring more than the whole timeline (resource > 1) are dropped.
std::vector<Configuration> enumerate_configs(const ConfigGrid& grid, const UtilityFn& utility);

/// Trim a configuration cloud to its job list: the points lying on the upper
/// concave majorant of utility vs resource, sorted by resource, strictly
/// increasing in utility. Resource ties keep the higher utility; utility ties
/// on the hull keep the cheaper point. The base configuration stays first.
JobList concave_majorant(std::vector<Configuration> configs);

}  // namespace radarrm
