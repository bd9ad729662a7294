#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gmult/groupalg/algebra.hpp"

namespace gmult::scalar {

using coeff::QtScalar;
using groupalg::AlgebraElement;
using groupalg::PolyCharacter;
using rootsys::RootSystem;

enum class KernelKind {
  Macdonald,  // Δ_k = Π_{α∈R} Π_{i<k} (1 − q^i e^α)
  Cherednik,  // C_k = Π_{α∈R} Π_{i<k} (1 − q^{i+χ(α)} e^{−α})
};

// Largest k accepted by kernel construction; GMULT_MAX_K overrides the default 3.
int max_k();

// Cap on kernel support size; GMULT_MAX_KERNEL_TERMS overrides the default 10^6.
std::size_t max_kernel_terms();

PolyCharacter build_kernel(const RootSystem& rs, int k, KernelKind kind);
// Cached per (type, k, kind); safe to call from several threads.
std::shared_ptr<const PolyCharacter> kernel(const RootSystem& rs, int k, KernelKind kind);

// [f ḡ Δ_k]_0 at t = q^{-k/2}, optionally divided by |W|.
QtScalar macdonald_product(const RootSystem& rs, const AlgebraElement& f, const AlgebraElement& g,
                           int k, bool normalized = false);
// [f ḡ^ι C_k]_0 at t = q^{-k/2}. Defined only up to a constant factor, so
// callers compare ratios.
QtScalar cherednik_product(const RootSystem& rs, const AlgebraElement& f, const AlgebraElement& g,
                           int k);
// (f, 1)_k / (1, 1)_k
QtScalar cherednik_ratio(const RootSystem& rs, const AlgebraElement& f, int k);

// The value t^{-2 ht α}(t^2 − 1)/(q t^{-2 d_r} − 1) at generic t.
QtScalar theorem2_value(const RootSystem& rs, int height);
// q t^{2 ht α − 2(d_r+1)}(t^2 − 1)/(q t^{-2 d_r} − 1)
QtScalar corollary_value(const RootSystem& rs, int height);

struct Report {
  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  bool skipped = false;  // out of budget or not applicable; passed stays true
  std::size_t checked = 0;
  std::string detail;  // first failure, or a summary
};

Report verify_theorem2(const RootSystem& rs, int k);
Report verify_corollary(const RootSystem& rs, int k);
Report verify_convexity_theorem(const RootSystem& rs, int k);
// (T_i f, g) = (f, T_i⁻¹ g) on `pairs` sampled pairs of exponentials.
Report verify_unitarity(const RootSystem& rs, int k, int sample_bound, int pairs,
                        std::uint64_t seed);
// (Y^{θ∨} e^{θ_s}, 1) = (e^{θ_s}, Y^{−θ∨} 1) written out through the
// Proposition; non-simply-laced types only.
Report verify_unitarity_identity(const RootSystem& rs, int k);
// (f, g)/(1,1) = ((g, f)/(1,1))^ι on sampled pairs.
Report verify_cherednik_symmetry(const RootSystem& rs, int k, int sample_bound, int pairs,
                                 std::uint64_t seed);

// Exponentials e^μ with |ht μ| ≤ bound, drawn from the box of fundamental
// weight coordinates [-bound, bound]^r.
std::vector<rootsys::Weight> sample_weights(const RootSystem& rs, int bound, int count,
                                            std::uint64_t seed);

}  // namespace gmult::scalar
