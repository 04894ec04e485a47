#include "monocomp/bounds.hpp"

#include <cmath>

#include "monocomp/errors.hpp"

namespace monocomp {

double sparseness_delta(double d, double c) {
  if (!(c > 1.0)) throw config_error("sparseness_delta needs c > 1");
  if (!(d > c)) throw config_error("sparseness_delta needs d > c");
  // ((1/3) * c^c / (e^(1+c) * d^c))^(1/(c-1)), evaluated in log space
  const double log_base =
      -std::log(3.0) + c * std::log(c) - (1.0 + c) - c * std::log(d);
  return std::exp(log_base / (c - 1.0));
}

CycleBound long_cycle_bound(double c1, double c2, double k) {
  if (!(c2 > 0.0) || !(c1 >= c2)) throw config_error("long_cycle_bound needs c1 >= c2 > 0");
  if (!(k > 0.0)) throw config_error("long_cycle_bound needs k > 0");
  CycleBound b;
  b.value = (k / 2.0 - 1.0) * (std::sqrt(c1 / c2) - 1.0);
  b.hypothesis_holds = b.value >= 2.0;
  return b;
}

double CycleLawConstants::guaranteed_length(double n) const {
  return (delta * n / 2.0 - 1.0) * (std::sqrt(c1 / c2) - 1.0);
}

CycleLawConstants regular_cycle_constants(int r) {
  if (r < 1) throw config_error("regular cycle constants need r >= 1");
  CycleLawConstants k;
  k.r = r;
  k.degree = 2 * r + 1;
  k.c1 = 1.0 + 1.0 / (2.0 * r);
  k.c2 = 1.0 + 1.0 / (4.0 * r);
  k.delta = sparseness_delta(k.degree, k.c2);
  return k;
}

CycleLawConstants kout_cycle_constants(int r) {
  if (r < 2) throw config_error("digraph-sum cycle constants need r >= 2");
  CycleLawConstants k;
  k.r = r;
  k.degree = r + 1;  // out-degree of the summed digraphs
  k.c1 = 1.0 + 1.0 / r;
  k.c2 = 1.0 + 1.0 / (2.0 * r);
  k.delta = sparseness_delta(k.degree, k.c2);
  return k;
}

}  // namespace monocomp
