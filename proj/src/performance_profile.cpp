#include "wpart/performance_profile.h"

#include <algorithm>
#include <limits>

#include "wpart/types.h"

namespace wpart {

double ProfileCurve::at(double t) const {
  const auto it = std::upper_bound(tau.begin(), tau.end(), t);
  return it == tau.begin() ? 0.0 : fraction[static_cast<std::size_t>(it - tau.begin()) - 1];
}

std::vector<ProfileCurve> performance_profile(const std::vector<std::string>& algorithms,
                                              const std::vector<std::vector<double>>& quality) {
  if (algorithms.empty() || quality.empty() || quality[0].empty()) {
    throw Error("performance profile needs at least one algorithm and one instance");
  }
  if (algorithms.size() != quality.size()) throw Error("performance profile: algorithm count mismatch");
  const std::size_t instances = quality[0].size();
  for (const auto& row : quality) {
    if (row.size() != instances) throw Error("performance profile: ragged quality table");
    for (double q : row) {
      if (!(q >= 0.0)) throw Error("performance profile: qualities must be non-negative");
    }
  }
  std::vector<double> best(instances, std::numeric_limits<double>::infinity());
  for (const auto& row : quality) {
    for (std::size_t i = 0; i < instances; ++i) best[i] = std::min(best[i], row[i]);
  }

  std::vector<ProfileCurve> curves;
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    std::vector<double> ratios;
    for (std::size_t i = 0; i < instances; ++i) {
      const double q = quality[a][i];
      if (best[i] == 0.0) {
        if (q == 0.0) ratios.push_back(1.0);
      } else {
        ratios.push_back(q / best[i]);
      }
    }
    std::sort(ratios.begin(), ratios.end());
    ProfileCurve curve;
    curve.algorithm = algorithms[a];
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      if (i + 1 < ratios.size() && ratios[i + 1] == ratios[i]) continue;
      curve.tau.push_back(ratios[i]);
      curve.fraction.push_back(static_cast<double>(i + 1) / static_cast<double>(instances));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace wpart
