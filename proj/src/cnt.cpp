#include "mingate/cnt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mingate {

namespace {

constexpr PhysicalConstants kConstants{};

void check_valid(const Chirality& c) {
  if (c.n1 < 0 || c.n2 < 0) {
    throw std::domain_error("chirality indices must be non-negative");
  }
  if (c.n1 == 0 && c.n2 == 0) {
    throw std::domain_error("invalid chirality (0,0)");
  }
}

}  // namespace

Conduction classify(const Chirality& c) {
  check_valid(c);
  return (c.n1 - c.n2) % 3 == 0 ? Conduction::Metallic
                                : Conduction::Semiconducting;
}

double diameter(const Chirality& c) {
  check_valid(c);
  const double idx = std::sqrt(static_cast<double>(c.n1) * c.n1 +
                               static_cast<double>(c.n2) * c.n2 +
                               static_cast<double>(c.n1) * c.n2);
  return std::numbers::sqrt3 * kConstants.a0_cc_nm * idx / std::numbers::pi;
}

double chiral_length(const Chirality& c) {
  return std::numbers::pi * diameter(c);
}

double threshold_from_diameter(double diameter_nm) {
  if (diameter_nm <= 0.0) {
    throw std::domain_error("diameter must be positive");
  }
  return kConstants.vth_coeff_vnm / diameter_nm;
}

double threshold_voltage(const Chirality& c) {
  if (classify(c) == Conduction::Metallic) {
    throw std::domain_error("no threshold: metallic CNT");
  }
  return threshold_from_diameter(diameter(c));
}

CntDevice make_device(const Chirality& c) {
  CntDevice dev;
  dev.chirality = c;
  dev.kind = classify(c);
  dev.diameter_nm = diameter(c);
  dev.chiral_length_nm = chiral_length(c);
  if (dev.kind == Conduction::Semiconducting) {
    dev.threshold_v = threshold_from_diameter(dev.diameter_nm);
  }
  return dev;
}

}  // namespace mingate
