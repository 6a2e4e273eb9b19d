#ifndef MINGATE_MINORITY_HPP
#define MINGATE_MINORITY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace mingate {

/// Ordered binary input assignment. bits[i] is input i and must be 0 or 1.
struct InputVector {
  std::vector<int> bits;

  int width() const { return static_cast<int>(bits.size()); }

  static InputVector from_mask(std::uint32_t mask, int width);
  static InputVector parse(std::string_view s);  // e.g. "0010110"
};

/// Number of 1 entries. Throws on non-binary entries.
int weight(const InputVector& v);

/// n-input minority: 1 iff at most floor(n/2) inputs are 1.
int minority(const InputVector& v);

/// Minority output for a known input weight at a given width.
int minority_of_weight(int weight, int width);

struct MinorityRow {
  int weight = 0;
  int output = 0;
};

/// Weight-compressed truth table: n+1 rows, weights ascending.
struct MinorityTable {
  int width = 0;
  std::vector<MinorityRow> rows;
};

MinorityTable weight_table(int n);

/// Number of true minterms of the n-input minority function,
/// sum of C(n,i) for i = 0..floor(n/2).
std::uint64_t sop_term_count(int n);

/// Two-level static CMOS-style cost of the minority SOP: 2 * S * n.
std::uint64_t conventional_transistor_count(int n);

/// Device count of the capacitive-divider gate: n input devices plus the
/// two-device output inverter. Odd fan-in only.
int proposed_device_count(int n);

struct CostReport {
  int inputs = 0;
  std::uint64_t sop_terms = 0;
  std::uint64_t conventional_transistors = 0;
  int proposed_devices = 0;
  double reduction_pct = 0.0;
};

CostReport cost_report(int n);

enum class DerivedGate { Nand, Nor };

/// k-input NAND/NOR realized on a minority gate of width 2k-1 with the
/// k-1 constant inputs merged into one device of capacitive weight
/// tied_weight (physically, a device with ~(k-1)x the tubes).
struct GateBinding {
  int base_width = 0;    // 2k-1
  int free_inputs = 0;   // k
  int tied_constant = 0; // 0 for NAND, 1 for NOR
  int tied_count = 0;    // k-1
  int tied_weight = 0;   // weight of the merged tied input
  DerivedGate target = DerivedGate::Nand;
};

GateBinding derive_nand(int k);
GateBinding derive_nor(int k);

/// Output of the bound minority function for an assignment of the free
/// inputs (tied constant folded in at its weight).
int evaluate_binding(const GateBinding& b, const InputVector& free_bits);

/// Exhaustive 2^k equivalence check of the binding against boolean
/// NAND_k / NOR_k. Returns false on a semantic mismatch.
bool verify_binding(const GateBinding& b);

}  // namespace mingate

#endif
