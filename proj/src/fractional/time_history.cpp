#include "fracporo/fractional/time_history.hpp"

#include <string>

#include "fracporo/errors.hpp"

namespace fracporo {

void TimeHistory::push(Vec v) {
  if (!states_.empty() && v.size() != dimension())
    throw ContractError("time history dimension mismatch: " + std::to_string(v.size()) + " vs " +
                        std::to_string(dimension()));
  states_.push_back(std::move(v));
}

Vec memory_sum(const L1Weights& w, const TimeHistory& hist) {
  const int n = hist.size();
  if (n < 1) throw ContractError("memory sum needs at least the initial state");
  Vec sum = Vec::Zero(hist.dimension());
  if (w.alpha() == 1.0) return sum;
  for (int j = 2; j <= n; ++j) sum += w.memory(j - 1) * (hist[n - j + 1] - hist[n - j]);
  return sum;
}

Vec caputo_apply(const L1Weights& w, const TimeHistory& hist, const Vec& v_n) {
  if (hist.empty()) throw ContractError("Caputo derivative needs at least one past state");
  if (v_n.size() != hist.dimension()) throw ContractError("Caputo derivative: dimension mismatch");
  Vec out = v_n - hist.back();
  if (w.alpha() != 1.0) out += memory_sum(w, hist);
  return w.scale() * out;
}

}  // namespace fracporo
