#ifndef MINGATE_CNT_HPP
#define MINGATE_CNT_HPP

#include <optional>

namespace mingate {

/// Roll-up vector (n1, n2) of a single-walled carbon nanotube.
/// Both indices are non-negative; (0,0) is not a tube.
struct Chirality {
  int n1 = 0;
  int n2 = 0;
};

enum class Conduction { Metallic, Semiconducting };

/// Tight-binding constants behind the geometry and threshold relations.
/// vth_coeff_vnm is the Vth * D product in V*nm for a semiconducting tube.
struct PhysicalConstants {
  double a0_cc_nm = 0.142;      // carbon-carbon bond length
  double v_pi_ev = 3.033;       // pi-pi bond energy
  double vth_coeff_vnm = 0.43;
};

/// Derived per-tube record. threshold_v is present iff the tube is
/// semiconducting.
struct CntDevice {
  Chirality chirality;
  double diameter_nm = 0.0;
  double chiral_length_nm = 0.0;
  Conduction kind = Conduction::Semiconducting;
  std::optional<double> threshold_v;
};

/// Parameter card of the 32 nm compact transistor model used by the
/// reference simulations. Carried as documented metadata only; nothing
/// in this library computes from it.
struct ModelCard {
  double channel_length_nm = 32.0;
  double mean_free_path_nm = 100.0;
  double source_ext_nm = 32.0;
  double drain_ext_nm = 32.0;
  double k_gate = 16.0;
  double t_ox_nm = 4.0;
  double c_sub_f_per_m = 40e-12;
  double e_fermi_ev = 6.0;
};

/// Metallic iff (n1 - n2) is a multiple of 3. Throws std::domain_error
/// for the invalid chirality (0,0).
Conduction classify(const Chirality& c);

/// Tube diameter in nm: sqrt(3) * a0 * sqrt(n1^2 + n2^2 + n1*n2) / pi.
double diameter(const Chirality& c);

/// Circumference of the rolled sheet in nm; equals pi * diameter.
double chiral_length(const Chirality& c);

/// Threshold voltage in V, 0.43 / D(nm). Only defined for
/// semiconducting tubes; metallic input throws std::domain_error.
double threshold_voltage(const Chirality& c);

/// Numeric form of the threshold relation at a given diameter.
double threshold_from_diameter(double diameter_nm);

/// Assembles the full device record for a chirality.
CntDevice make_device(const Chirality& c);

}  // namespace mingate

#endif
