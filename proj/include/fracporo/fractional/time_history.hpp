#pragma once

#include <vector>

#include "fracporo/fractional/l1_weights.hpp"

namespace fracporo {

/// Every past state v^0 .. v^{n-1} of one field, as needed by the L1 memory sum.
class TimeHistory {
 public:
  TimeHistory() = default;
  explicit TimeHistory(Vec initial) { push(std::move(initial)); }

  void push(Vec v);
  int size() const { return static_cast<int>(states_.size()); }
  bool empty() const { return states_.empty(); }
  Eigen::Index dimension() const { return states_.empty() ? 0 : states_.front().size(); }
  const Vec& operator[](int k) const { return states_[k]; }
  const Vec& back() const { return states_.back(); }

 private:
  std::vector<Vec> states_;
};

/// sum_{j=2}^{n} w_{j-1} (v^{n-j+1} - v^{n-j}) for the step n = hist.size().
/// Zero vector when n == 1.
Vec memory_sum(const L1Weights& w, const TimeHistory& hist);

/// Discrete Caputo derivative at step n = hist.size() given the new value v_n.
Vec caputo_apply(const L1Weights& w, const TimeHistory& hist, const Vec& v_n);

}  // namespace fracporo
