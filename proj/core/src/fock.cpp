#include "htoda/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "htoda/schur.hpp"

namespace htoda {

namespace {

// Smallest level strictly above the untouched part of the tail when the
// operation involves `level`: everything at or below this base is occupied
// in both the old and the new state.
long tail_base(const WedgeState& st, long level) {
  long tail_top = st.charge - st.lambda.length();
  return std::min(tail_top, level) - 1;
}

// Occupied levels strictly above `base`, in decreasing order.
std::vector<long> occupied_above(const WedgeState& st, long base) {
  std::vector<long> out;
  long len = st.lambda.length();
  for (long i = 1; i <= len; ++i)
    out.push_back(st.lambda.part(static_cast<int>(i)) + st.charge - i + 1);
  for (long v = st.charge - len; v > base; --v) out.push_back(v);
  return out;
}

// Rebuilds (lambda, charge) from the occupied levels above `base` plus the
// full tail below it, checking the wedge bookkeeping along the way.
WedgeState rebuild(std::vector<long> levels, long base, long charge) {
  if (base + static_cast<long>(levels.size()) != charge)
    throw std::logic_error("fermion state lost track of its charge");
  std::vector<int> parts;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    long part = levels[i] - (charge - static_cast<long>(i));
    if (part < 0 || (i > 0 && levels[i - 1] <= levels[i]))
      throw std::logic_error("fermion levels out of order");
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  return WedgeState{Partition(parts), charge};
}

}  // namespace

bool WedgeState::occupied(long level) const {
  long len = lambda.length();
  if (level <= charge - len) return true;
  for (long i = 1; i <= len; ++i)
    if (lambda.part(static_cast<int>(i)) + charge - i + 1 == level) return true;
  return false;
}

ModeResult create_level(const WedgeState& state, long level) {
  if (state.occupied(level)) return {0, state};
  long base = tail_base(state, level);
  std::vector<long> levels = occupied_above(state, base);
  auto pos = std::find_if(levels.begin(), levels.end(),
                          [&](long v) { return v < level; });
  int sign = (pos - levels.begin()) % 2 == 0 ? 1 : -1;
  levels.insert(pos, level);
  return {sign, rebuild(std::move(levels), base, state.charge + 1)};
}

ModeResult annihilate_level(const WedgeState& state, long level) {
  if (!state.occupied(level)) return {0, state};
  long base = tail_base(state, level);
  std::vector<long> levels = occupied_above(state, base);
  auto pos = std::find(levels.begin(), levels.end(), level);
  int sign = (pos - levels.begin()) % 2 == 0 ? 1 : -1;
  levels.erase(pos);
  return {sign, rebuild(std::move(levels), base, state.charge - 1)};
}

BilinearSpec spec_add(const BilinearSpec& a, const BilinearSpec& b) {
  BilinearSpec out = a;
  out.bands.insert(out.bands.end(), b.bands.begin(), b.bands.end());
  return out;
}

BilinearSpec spec_mul(const BilinearSpec& a, const BilinearSpec& b) {
  BilinearSpec out;
  for (const auto& ba : a.bands)
    for (const auto& bb : b.bands) {
      auto wa = ba.weight;
      auto wb = bb.weight;
      int mb = bb.offset;
      out.bands.push_back({ba.offset + bb.offset, [wa, wb, mb](long n) {
                             return wa(n - mb) * wb(n);
                           }});
    }
  return out;
}

BilinearSpec spec_scale(const BilinearSpec& a, const ParamScalar& c) {
  BilinearSpec out;
  for (const auto& band : a.bands) {
    auto w = band.weight;
    out.bands.push_back({band.offset, [w, c](long n) { return w(n) * c; }});
  }
  return out;
}

ParamScalar cocycle(const BilinearSpec& a, const BilinearSpec& b) {
  // Pairs each lowering band (offset < 0) of one factor with the opposite
  // band of the other across the block cut between levels 0 and 1.
  auto crossing = [](const BilinearSpec& lower, const BilinearSpec& upper) {
    ParamScalar sum;
    for (const auto& lo : lower.bands) {
      if (lo.offset >= 0) continue;
      for (const auto& up : upper.bands) {
        if (up.offset != -lo.offset) continue;
        for (long j = lo.offset + 1; j <= 0; ++j)
          sum += lo.weight(j) * up.weight(j - lo.offset);
      }
    }
    return sum;
  };
  return crossing(b, a) - crossing(a, b);
}

BilinearSpec current_spec(int m) {
  return {{{m, [](long) { return ParamScalar::one(); }}}};
}

BilinearSpec charge_spec() { return current_spec(0); }

BilinearSpec energy_spec() {
  return {{{0, [](long n) { return ParamScalar(Rat(n)); }}}};
}

BilinearSpec energy_sq_spec() {
  return {{{0, [](long n) { return ParamScalar(Rat(n) * Rat(n)); }}}};
}

BilinearSpec half_shift_energy_spec() {
  return {{{0, [](long n) {
             Rat h = Rat(2 * n - 1) * Rat(2 * n - 1) / 8;
             return ParamScalar(h);
           }}}};
}

BilinearSpec shift_exp_spec(int m, int k, int nbeta) {
  return {{{m, [k, nbeta](long n) {
             return ParamScalar::exp_beta(Rat(k) * Rat(n), nbeta);
           }}}};
}

BilinearSpec torus_spec(int k, int m, int nbeta) {
  return {{{m, [k, m, nbeta](long n) {
             return ParamScalar::exp_beta(Rat(k) * Rat(n - m), nbeta);
           }}}};
}

ParamScalar BilinearOp::entry(int target, int source) const {
  auto it = entries.find({target, source});
  return it == entries.end() ? ParamScalar::zero() : it->second;
}

ParamScalar BilinearOp::diagonal(const Partition& lambda) const {
  int idx = table->index_of(lambda);
  if (idx < 0) throw std::invalid_argument("partition beyond table");
  return entry(idx, idx);
}

BilinearOp bilinear(const BilinearSpec& spec,
                    std::shared_ptr<const PartitionTable> table, long charge) {
  BilinearOp op;
  op.table = table;
  op.charge = charge;
  op.safe_src = table->max_size();
  for (const auto& band : spec.bands)
    op.rise = std::max(op.rise, -band.offset);

  for (int src = 0; src < table->count(); ++src) {
    WedgeState state{(*table)[src], charge};
    long tail_top = charge - state.lambda.length();
    for (const auto& band : spec.bands) {
      if (band.offset == 0) {
        // Normal-ordered diagonal: occupied positive levels count with the
        // weight, vacant non-positive levels with minus the weight.
        ParamScalar diag;
        for (long v : occupied_above(state, 0))
          if (v > 0) diag += band.weight(v);
        for (long v = tail_top + 1; v <= 0; ++v)
          if (!state.occupied(v)) diag -= band.weight(v);
        if (!diag.is_zero()) {
          auto key = std::make_pair(src, src);
          auto it = op.entries.find(key);
          if (it == op.entries.end())
            op.entries.emplace(key, diag);
          else if ((it->second += diag).is_zero())
            op.entries.erase(it);
        }
        continue;
      }
      int m = band.offset;
      long window = std::abs(static_cast<long>(m));
      for (long n : occupied_above(state, tail_top - window - 1)) {
        if (state.occupied(n - m)) continue;
        ModeResult cut = annihilate_level(state, n);
        ModeResult put = create_level(cut.state, n - m);
        int idx = table->index_of(put.state.lambda);
        if (idx < 0) continue;  // grows past the window; compression drops it
        ParamScalar val = band.weight(n).mul_rat(Rat(cut.sign * put.sign));
        if (val.is_zero()) continue;
        auto key = std::make_pair(idx, src);
        auto it = op.entries.find(key);
        if (it == op.entries.end())
          op.entries.emplace(key, val);
        else if ((it->second += val).is_zero())
          op.entries.erase(it);
      }
    }
  }
  return op;
}

BilinearOp diagonal_op(
    const std::function<ParamScalar(const Partition&, long)>& eigen,
    std::shared_ptr<const PartitionTable> table, long charge) {
  BilinearOp op;
  op.table = table;
  op.charge = charge;
  op.safe_src = table->max_size();
  for (int i = 0; i < table->count(); ++i) {
    ParamScalar v = eigen((*table)[i], charge);
    if (!v.is_zero()) op.entries.emplace(std::make_pair(i, i), v);
  }
  return op;
}

BilinearOp identity_op(std::shared_ptr<const PartitionTable> table,
                       long charge) {
  return diagonal_op([](const Partition&, long) { return ParamScalar::one(); },
                     std::move(table), charge);
}

namespace {

void check_same_space(const BilinearOp& a, const BilinearOp& b) {
  if (a.table->max_size() != b.table->max_size() || a.charge != b.charge)
    throw std::invalid_argument("operators live on different spaces");
}

}  // namespace

BilinearOp op_add(const BilinearOp& a, const BilinearOp& b) {
  check_same_space(a, b);
  BilinearOp out = a;
  out.rise = std::max(a.rise, b.rise);
  out.safe_src = std::min(a.safe_src, b.safe_src);
  for (const auto& [key, val] : b.entries) {
    auto it = out.entries.find(key);
    if (it == out.entries.end())
      out.entries.emplace(key, val);
    else if ((it->second += val).is_zero())
      out.entries.erase(it);
  }
  return out;
}

BilinearOp op_sub(const BilinearOp& a, const BilinearOp& b) {
  return op_add(a, op_scale(b, ParamScalar(Rat(-1))));
}

BilinearOp op_scale(const BilinearOp& a, const ParamScalar& c) {
  BilinearOp out = a;
  out.entries.clear();
  for (const auto& [key, val] : a.entries) {
    ParamScalar v = val * c;
    if (!v.is_zero()) out.entries.emplace(key, v);
  }
  return out;
}

BilinearOp op_mul(const BilinearOp& a, const BilinearOp& b) {
  check_same_space(a, b);
  BilinearOp out;
  out.table = a.table;
  out.charge = a.charge;
  out.rise = a.rise + b.rise;
  out.safe_src = std::min(b.safe_src, a.safe_src - b.rise);

  // Column index over a: col -> list of (row, value).
  std::map<int, std::vector<std::pair<int, const ParamScalar*>>> a_cols;
  for (const auto& [key, val] : a.entries)
    a_cols[key.second].emplace_back(key.first, &val);

  for (const auto& [bkey, bval] : b.entries) {
    auto mid = a_cols.find(bkey.first);
    if (mid == a_cols.end()) continue;
    for (const auto& [row, aval] : mid->second) {
      ParamScalar v = (*aval) * bval;
      if (v.is_zero()) continue;
      auto key = std::make_pair(row, bkey.second);
      auto it = out.entries.find(key);
      if (it == out.entries.end())
        out.entries.emplace(key, v);
      else if ((it->second += v).is_zero())
        out.entries.erase(it);
    }
  }
  return out;
}

BilinearOp op_commutator(const BilinearOp& a, const BilinearOp& b) {
  return op_sub(op_mul(a, b), op_mul(b, a));
}

MatchReport agree_on_exact(const BilinearOp& a, const BilinearOp& b) {
  check_same_space(a, b);
  int safe = std::min(a.safe_src, b.safe_src);
  for (const auto& [key, val] : a.entries) {
    if ((*a.table)[key.second].size() > safe) continue;
    if (!(val == b.entry(key.first, key.second))) {
      std::ostringstream os;
      os << "entry (" << (*a.table)[key.first].str() << " <- "
         << (*a.table)[key.second].str() << "): " << val.str() << " vs "
         << b.entry(key.first, key.second).str();
      return {false, os.str()};
    }
  }
  for (const auto& [key, val] : b.entries) {
    if ((*b.table)[key.second].size() > safe) continue;
    if (a.entries.find(key) == a.entries.end() && !val.is_zero()) {
      std::ostringstream os;
      os << "entry (" << (*b.table)[key.first].str() << " <- "
         << (*b.table)[key.second].str() << "): 0 vs " << val.str();
      return {false, os.str()};
    }
  }
  return {};
}

BilinearOp build_g(std::shared_ptr<const PartitionTable> table, long charge,
                   int nbeta) {
  return diagonal_op(
      [nbeta](const Partition& lambda, long s) {
        Rat half_w = (Rat(kappa(lambda)) + Rat(2 * s + 1) * Rat(lambda.size()) +
                      rat(s * (s + 1) * (2 * s + 1), 6)) /
                     2;
        long level = lambda.size() + s * (s + 1) / 2;
        return ParamScalar::exp_beta(half_w, nbeta)
            .shift(0, 0, static_cast<int>(level), 0);
      },
      std::move(table), charge);
}

TSeries tau_expand(int D, long s, int nbeta) {
  TSeries out = TSeries::zero(D);
  for (int d = 0; 2 * d <= D; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      Rat half_w = (Rat(kappa(lambda)) + Rat(2 * s + 1) * Rat(d) +
                    rat(s * (s + 1) * (2 * s + 1), 6)) /
                   2;
      ParamScalar amp =
          ParamScalar::exp_beta(half_w, nbeta)
              .shift(0, 0, static_cast<int>(d + s * (s + 1) / 2), 0);
      TSeries pair = schur(lambda, D) * schur_neg(lambda, D, true);
      out = out + pair.mul_scalar(amp);
    }
  }
  return out;
}

std::map<Partition, TSeries> current_exp_coeffs(long s, int D) {
  auto table = std::make_shared<const PartitionTable>(D);
  std::vector<BilinearOp> lowering;
  for (int k = 1; k <= D; ++k)
    lowering.push_back(bilinear(current_spec(-k), table, s));

  int count = table->count();
  std::vector<TSeries> acc(count, TSeries::zero(D));
  std::vector<TSeries> term(count, TSeries::zero(D));
  acc[0] = TSeries::one(D);
  term[0] = TSeries::one(D);

  for (int round = 1; round <= D; ++round) {
    std::vector<TSeries> next(count, TSeries::zero(D));
    for (int k = 1; k <= D; ++k) {
      TSeries tk = TSeries::var_t(D, k);
      for (const auto& [key, val] : lowering[k - 1].entries) {
        if (term[key.second].is_zero()) continue;
        next[key.first] += (tk * term[key.second]).mul_scalar(val);
      }
    }
    bool all_zero = true;
    for (int i = 0; i < count; ++i) {
      term[i] = next[i].div_rat(Rat(round));
      if (!term[i].is_zero()) all_zero = false;
      acc[i] += term[i];
    }
    if (all_zero) break;
  }

  std::map<Partition, TSeries> out;
  for (int i = 0; i < count; ++i) out.emplace((*table)[i], acc[i]);
  return out;
}

}  // namespace htoda
