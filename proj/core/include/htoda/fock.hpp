#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "htoda/param_scalar.hpp"
#include "htoda/partition.hpp"
#include "htoda/tseries.hpp"

namespace htoda {

// Basis vector of the charged fermion space, written |lambda, s>: the set of
// occupied levels is { lambda_i + s - i + 1 : i >= 1 }, which below the
// excited range becomes the full tail s - len(lambda), s - len(lambda) - 1, ...
struct WedgeState {
  Partition lambda;
  long charge = 0;

  bool occupied(long level) const;
  bool operator==(const WedgeState&) const = default;
};

// One fermion mode applied to a basis vector gives zero (sign == 0) or
// +/- another basis vector with the charge moved by one.
struct ModeResult {
  int sign = 0;
  WedgeState state;
};

// Fills the given level (zero if already occupied); charge goes up by one.
// The sign counts the occupied levels above the insertion point.
ModeResult create_level(const WedgeState& state, long level);

// Empties the given level (zero if vacant); charge goes down by one.
ModeResult annihilate_level(const WedgeState& state, long level);

// Charge-preserving quadratic operator, stored band by band: the band with
// offset m acts as sum_n w(n) x (annihilate level n, create level n - m),
// normal-ordered so the vacuum expectation of the m = 0 band vanishes.
struct BilinearBand {
  int offset = 0;
  std::function<ParamScalar(long)> weight;
};

struct BilinearSpec {
  std::vector<BilinearBand> bands;
};

// Band algebra on the underlying infinite matrices: offsets add under
// product, and the bracket picks up a central term (see cocycle below).
BilinearSpec spec_add(const BilinearSpec& a, const BilinearSpec& b);
BilinearSpec spec_mul(const BilinearSpec& a, const BilinearSpec& b);
BilinearSpec spec_scale(const BilinearSpec& a, const ParamScalar& c);

// Central term of the bracket of two quantized bilinears:
//   [hat a, hat b] = hat([a, b]) + cocycle(a, b) * Id,
// a finite double sum pairing each lowering band with its opposite offset.
ParamScalar cocycle(const BilinearSpec& a, const BilinearSpec& b);

// Standard generators.
BilinearSpec current_spec(int m);               // J_m: offset m, weight 1
BilinearSpec charge_spec();                     // J_0
BilinearSpec energy_spec();                     // L_0: weight n
BilinearSpec energy_sq_spec();                  // W_0: weight n^2
BilinearSpec half_shift_energy_spec();          // weight (n - 1/2)^2 / 2
// Offset m band with weight exp_beta(k n); the m = +/-k cases conjugate the
// shift matrix by the diagonal exponential.
BilinearSpec shift_exp_spec(int m, int k, int nbeta);
// Quantum torus generator: offset m, weight exp_beta(k (n - m)).
BilinearSpec torus_spec(int k, int m, int nbeta);

// A quadratic operator compressed to the partitions of size <= d_max at a
// fixed charge.  Entries are keyed (target index, source index) in the
// table's order.  Columns with source size <= safe_src hold entries equal to
// those of the uncompressed operator; `rise` bounds how much a product can
// grow the partition size, which is what erodes safe_src under composition.
struct BilinearOp {
  std::shared_ptr<const PartitionTable> table;
  long charge = 0;
  int rise = 0;
  int safe_src = 0;
  std::map<std::pair<int, int>, ParamScalar> entries;

  int d_max() const { return table->max_size(); }
  ParamScalar entry(int target, int source) const;
  ParamScalar diagonal(const Partition& lambda) const;
};

// Materializes a band spec on the compressed space.
BilinearOp bilinear(const BilinearSpec& spec,
                    std::shared_ptr<const PartitionTable> table, long charge);

// Diagonal operator from an explicit eigenvalue function.
BilinearOp diagonal_op(const std::function<ParamScalar(const Partition&, long)>& eigen,
                       std::shared_ptr<const PartitionTable> table, long charge);

BilinearOp identity_op(std::shared_ptr<const PartitionTable> table, long charge);

BilinearOp op_add(const BilinearOp& a, const BilinearOp& b);
BilinearOp op_sub(const BilinearOp& a, const BilinearOp& b);
BilinearOp op_scale(const BilinearOp& a, const ParamScalar& c);
BilinearOp op_mul(const BilinearOp& a, const BilinearOp& b);
BilinearOp op_commutator(const BilinearOp& a, const BilinearOp& b);

// Entry-by-entry comparison restricted to columns both sides compute
// exactly; detail names the first mismatch.
struct MatchReport {
  bool ok = true;
  std::string detail;
};
MatchReport agree_on_exact(const BilinearOp& a, const BilinearOp& b);

// Diagonal kernel exp(beta W_0 / 2) Q^{L_0} at the given charge.
BilinearOp build_g(std::shared_ptr<const PartitionTable> table, long charge,
                   int nbeta);

// Vacuum-to-vacuum expansion of the tau function at integer lattice site s:
//   tau(s) = sum_lambda g_{lambda lambda} s_lambda[t] s_lambda[-tbar].
TSeries tau_expand(int D, long s, int nbeta);

// Coefficients of e^{sum_k t_k J_{-k}} |s> on the basis |lambda, s>; each
// coefficient reproduces the Schur polynomial s_lambda[t] for every s.
std::map<Partition, TSeries> current_exp_coeffs(long s, int D);

}  // namespace htoda
