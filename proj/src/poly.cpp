#include "qv/poly.hpp"

namespace qv {

VarLayout VarLayout::roots(const std::vector<int>& sizes) {
  VarLayout l;
  l.group_sizes = sizes;
  for (int s : sizes) {
    l.offsets.push_back(l.total);
    l.total += s;
  }
  l.weights.assign(l.total, 1);
  return l;
}

VarLayout VarLayout::chern_classes(const std::vector<int>& sizes) {
  VarLayout l = roots(sizes);
  for (size_t g = 0; g < sizes.size(); ++g)
    for (int k = 0; k < sizes[g]; ++k) l.weights[l.offsets[g] + k] = k + 1;
  return l;
}

long long VarLayout::degree(const Mono& m) const {
  long long d = 0;
  for (int i = 0; i < total; ++i) d += static_cast<long long>(m[i]) * weights[i];
  return d;
}

}  // namespace qv
