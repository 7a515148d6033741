#include "cuweno/time_integration.hpp"

#include <string>

namespace cuweno {

std::string_view dt_rule_name(DtRule r) {
  return r == DtRule::cfl_over_speed ? "cfl" : "dx43";
}

DtRule parse_dt_rule(std::string_view name) {
  if (name == "cfl") return DtRule::cfl_over_speed;
  if (name == "dx43") return DtRule::cfl_dx_pow_4over3;
  throw std::invalid_argument("unknown dt rule '" + std::string(name) +
                              "' (valid: cfl, dx43)");
}

}  // namespace cuweno
