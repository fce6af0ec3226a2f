#pragma once

#include <string>
#include <vector>

namespace wpart {

// Step function: fraction[i] of instances have ratio <= tau[i]; tau is
// strictly increasing and fraction non-decreasing.
struct ProfileCurve {
  std::string algorithm;
  std::vector<double> tau;
  std::vector<double> fraction;

  double at(double t) const;
};

// quality[a][i] is the (non-negative) quality of algorithm a on instance i.
// On instances whose best quality is 0 an algorithm counts only if its own
// quality is 0 too.
std::vector<ProfileCurve> performance_profile(const std::vector<std::string>& algorithms,
                                              const std::vector<std::vector<double>>& quality);

}  // namespace wpart
