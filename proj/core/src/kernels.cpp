#include "cuweno/kernels.hpp"

#include <stdexcept>

namespace cuweno {

SchemeConfig SchemeConfig::defaults(Scheme s) {
  SchemeConfig cfg;
  cfg.scheme = s;
  switch (s) {
    case Scheme::weno3_z:
    case Scheme::weno4_za:
    case Scheme::fd4:
      cfg.epsilon = 1e-40;
      break;
    case Scheme::weno3_js:
    case Scheme::weno4_js:
    case Scheme::weno5_js:
      cfg.epsilon = 1e-6;
      break;
  }
  return cfg;
}

void SchemeConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (scheme == Scheme::weno4_za) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
  }
}

std::size_t SchemeConfig::window_size(Scheme s) {
  switch (s) {
    case Scheme::weno3_js:
    case Scheme::weno3_z:
      return 3;
    case Scheme::weno4_js:
    case Scheme::weno4_za:
    case Scheme::fd4:
      return 4;
    case Scheme::weno5_js:
      return 5;
  }
  return 0;
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::weno3_js: return "weno3-js";
    case Scheme::weno3_z: return "weno3-z";
    case Scheme::weno4_js: return "weno4-js";
    case Scheme::weno4_za: return "weno4-za";
    case Scheme::weno5_js: return "weno5-js";
    case Scheme::fd4: return "fd4";
  }
  return "?";
}

std::vector<Scheme> all_schemes() {
  return {Scheme::weno3_js, Scheme::weno3_z, Scheme::weno4_js,
          Scheme::weno4_za, Scheme::weno5_js, Scheme::fd4};
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : all_schemes())
    if (scheme_name(s) == name) return s;
  std::string valid;
  for (Scheme s : all_schemes()) {
    if (!valid.empty()) valid += ", ";
    valid += scheme_name(s);
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (valid: " + valid + ")");
}

}  // namespace cuweno
