#include "radarrm/joblist.hpp"

#include <algorithm>
#include <stdexcept>

namespace radarrm {

std::vector<Configuration> enumerate_configs(const ConfigGrid& grid, const UtilityFn& utility) {
  if (grid.dwell_choices.empty() || grid.revisit_choices.empty())
    throw std::invalid_argument("config grid must not be empty");
  for (double d : grid.dwell_choices)
    if (!(d > 0.0)) throw std::invalid_argument("non-positive dwell choice");
  for (double r : grid.revisit_choices)
    if (!(r > 0.0)) throw std::invalid_argument("non-positive revisit choice");

  std::vector<Configuration> out;
  out.reserve(grid.dwell_choices.size() * grid.revisit_choices.size() + 1);
  out.push_back(base_configuration());
  int id = 1;
  for (double revisit : grid.revisit_choices) {
    for (double dwell : grid.dwell_choices) {
      const double resource = dwell / revisit;
      if (resource > 1.0) continue;
      Configuration c;
      c.id = id++;
      c.dwell_time = dwell;
      c.revisit_interval = revisit;
      c.resource = resource;
      c.utility = utility(dwell, revisit);
      out.push_back(c);
    }
  }
  return out;
}

JobList concave_majorant(std::vector<Configuration> configs) {
  const bool has_base = std::any_of(configs.begin(), configs.end(), [](const Configuration& c) {
    return c.resource == 0.0 && c.utility == 0.0;
  });
  if (!has_base) throw std::invalid_argument("input lacks the base configuration");

  std::sort(configs.begin(), configs.end(), [](const Configuration& a, const Configuration& b) {
    if (a.resource != b.resource) return a.resource < b.resource;
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.id < b.id;
  });

  // Resource ties: only the highest-utility entry can ever be selected.
  std::vector<Configuration> points;
  points.reserve(configs.size());
  for (const Configuration& c : configs)
    if (points.empty() || c.resource != points.back().resource) points.push_back(c);

  // Upper hull scan. Collinear points stay: they sit on the majorant.
  std::vector<Configuration> hull;
  hull.reserve(points.size());
  for (const Configuration& c : points) {
    while (hull.size() >= 2) {
      const Configuration& a = hull[hull.size() - 2];
      const Configuration& b = hull.back();
      const double cross = (b.resource - a.resource) * (c.utility - a.utility) -
                           (b.utility - a.utility) * (c.resource - a.resource);
      if (cross > 0.0) {
        hull.pop_back();  // b lies strictly below the a-c chord
      } else {
        break;
      }
    }
    hull.push_back(c);
  }

  // Keep the strictly increasing utility prefix; anything past the cheapest
  // maximum-utility point costs resource without gaining utility.
  JobList out;
  out.jobs.push_back(hull.front());
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (!(hull[i].utility > out.jobs.back().utility)) break;
    out.jobs.push_back(hull[i]);
  }
  return out;
}

}  // namespace radarrm
