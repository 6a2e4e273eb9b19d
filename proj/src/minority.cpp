#include "mingate/minority.hpp"

#include <limits>
#include <stdexcept>

namespace mingate {

namespace {

constexpr int kEnumerationLimit = 24;  // cap on 2^k exhaustive loops

void check_bits(const InputVector& v) {
  if (v.bits.empty()) {
    throw std::domain_error("empty input vector");
  }
  for (int b : v.bits) {
    if (b != 0 && b != 1) {
      throw std::domain_error("input vector entries must be 0 or 1");
    }
  }
}

void check_width(int n) {
  if (n < 1) {
    throw std::domain_error("fan-in must be at least 1");
  }
}

std::uint64_t binomial(int n, int k) {
  // exact for the ranges guarded below
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace

InputVector InputVector::from_mask(std::uint32_t mask, int width) {
  if (width < 1 || width > 32) {
    throw std::domain_error("vector width out of range");
  }
  InputVector v;
  v.bits.resize(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) {
    v.bits[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
  }
  return v;
}

InputVector InputVector::parse(std::string_view s) {
  InputVector v;
  v.bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw std::domain_error("input vector string must contain only 0/1");
    }
    v.bits.push_back(ch - '0');
  }
  if (v.bits.empty()) {
    throw std::domain_error("empty input vector");
  }
  return v;
}

int weight(const InputVector& v) {
  check_bits(v);
  int w = 0;
  for (int b : v.bits) w += b;
  return w;
}

int minority_of_weight(int w, int width) {
  check_width(width);
  if (w < 0 || w > width) {
    throw std::domain_error("weight out of range");
  }
  return w <= width / 2 ? 1 : 0;
}

int minority(const InputVector& v) {
  return minority_of_weight(weight(v), v.width());
}

MinorityTable weight_table(int n) {
  check_width(n);
  MinorityTable t;
  t.width = n;
  t.rows.reserve(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    t.rows.push_back({w, minority_of_weight(w, n)});
  }
  return t;
}

std::uint64_t sop_term_count(int n) {
  check_width(n);
  if (n > 62) {
    throw std::overflow_error("fan-in too large for 64-bit term count");
  }
  std::uint64_t s = 0;
  for (int i = 0; i <= n / 2; ++i) {
    s += binomial(n, i);
  }
  return s;
}

std::uint64_t conventional_transistor_count(int n) {
  const std::uint64_t s = sop_term_count(n);
  const std::uint64_t factor = 2ull * static_cast<std::uint64_t>(n);
  if (s > std::numeric_limits<std::uint64_t>::max() / factor) {
    throw std::overflow_error("transistor count overflows 64 bits");
  }
  return factor * s;
}

int proposed_device_count(int n) {
  check_width(n);
  if (n % 2 == 0) {
    throw std::domain_error("even fan-in unsupported by gate topology");
  }
  return n + 2;
}

CostReport cost_report(int n) {
  CostReport r;
  r.inputs = n;
  r.proposed_devices = proposed_device_count(n);
  r.sop_terms = sop_term_count(n);
  r.conventional_transistors = conventional_transistor_count(n);
  r.reduction_pct = 100.0 * (1.0 - static_cast<double>(r.proposed_devices) /
                                       static_cast<double>(r.conventional_transistors));
  return r;
}

namespace {

GateBinding make_binding(int k, DerivedGate target) {
  if (k < 1) {
    throw std::domain_error("derived gate needs at least one input");
  }
  GateBinding b;
  b.base_width = 2 * k - 1;
  b.free_inputs = k;
  b.tied_count = k - 1;
  b.tied_weight = k - 1;
  b.tied_constant = target == DerivedGate::Nand ? 0 : 1;
  b.target = target;
  return b;
}

void check_binding(const GateBinding& b) {
  if (b.free_inputs < 1 || b.tied_count < 0 || b.tied_weight < 0) {
    throw std::domain_error("malformed gate binding");
  }
  if (b.base_width != b.free_inputs + b.tied_count) {
    throw std::domain_error("binding width mismatch");
  }
  if (b.tied_constant != 0 && b.tied_constant != 1) {
    throw std::domain_error("tied constant must be 0 or 1");
  }
}

}  // namespace

GateBinding derive_nand(int k) { return make_binding(k, DerivedGate::Nand); }

GateBinding derive_nor(int k) { return make_binding(k, DerivedGate::Nor); }

int evaluate_binding(const GateBinding& b, const InputVector& free_bits) {
  check_binding(b);
  if (free_bits.width() != b.free_inputs) {
    throw std::domain_error("free input vector width mismatch");
  }
  const int w = weight(free_bits) + b.tied_constant * b.tied_weight;
  return minority_of_weight(w, b.base_width);
}

bool verify_binding(const GateBinding& b) {
  check_binding(b);
  const int k = b.free_inputs;
  if (k > kEnumerationLimit) {
    throw std::domain_error("free input count exceeds enumeration guard");
  }
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const InputVector v = InputVector::from_mask(mask, k);
    const int ones = weight(v);
    const int expected = b.target == DerivedGate::Nand ? (ones == k ? 0 : 1)
                                                       : (ones == 0 ? 1 : 0);
    if (evaluate_binding(b, v) != expected) {
      return false;
    }
  }
  return true;
}

}  // namespace mingate
