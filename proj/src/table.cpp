#include "steiner/table.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "steiner/bounds.hpp"

namespace steiner {

TableGrid TableGrid::default_grid() {
  TableGrid grid;
  grid.n_values = {3, 4, 5, 6, 8, 10};
  grid.k_values = {1, 2, 3, 4, 5, 6};
  grid.eps_values = {1e-3, 1e-2, 0.05, 0.1, 0.2, 0.3, 0.5, kPi / 6.0, 1.0, kPi / 3.0, 1.3, kPi / 2.0};
  return grid;
}

namespace {

std::string num(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void emit(std::ostringstream& out, const char* formula, const std::string& n,
          const std::string& k, double eps, const std::function<double()>& eval) {
  out << formula << "," << n << "," << k << "," << num(eps) << ",";
  try {
    double value = eval();
    out << num(value) << ",1\n";
  } catch (const RangeViolation&) {
    out << ",0\n";
  }
}

}  // namespace

std::string root_probe_csv(int k_max) {
  if (k_max < 1) throw Error("root_probe_csv: empty grid");
  std::ostringstream out;
  out << "poly,k,h,min_dist_to_1,min_dist_times_k2\n";
  for (int k = 1; k <= k_max; ++k) {
    for (int h = 1; h <= k; ++h) {
      for (PolyKind kind : {PolyKind::p, PolyKind::q}) {
        auto probe = poly_root_probe(k, h, kind);
        out << (kind == PolyKind::p ? "p" : "q") << "," << k << "," << h << ","
            << num(probe.min_dist_to_1) << "," << num(probe.min_dist_to_1 * k * k) << "\n";
      }
    }
  }
  return out.str();
}

std::string bound_table_csv(const TableGrid& grid) {
  if (grid.eps_values.empty() || (grid.n_values.empty() && grid.k_values.empty())) {
    throw Error("bound_table_csv: empty grid");
  }
  std::ostringstream out;
  out << "formula,n,k,eps,value,applicable\n";
  for (double eps : grid.eps_values) {
    for (int n : grid.n_values) {
      std::string ns = std::to_string(n);
      emit(out, "ub_plane_small_eps", ns, "", eps, [&] { return ub_plane_small_eps(n, eps); });
      emit(out, "ub_plane_moderate", ns, "", eps, [&] { return ub_plane_moderate(n, eps); });
      emit(out, "ub_exponential", ns, "", eps, [&] { return ub_exponential(n, eps); });
    }
    emit(out, "exact_n3", "3", "", eps, [&] { return exact_n3(eps); });
    emit(out, "exact_n4", "4", "", eps, [&] { return exact_n4(eps); });
    for (int k : grid.k_values) {
      std::string ks = std::to_string(k);
      emit(out, "lb_small_eps", "", ks, eps, [&] { return lb_small_eps(k, eps); });
      emit(out, "lb_large_eps", "", ks, eps, [&] { return lb_large_eps(k, eps); });
    }
  }
  return out.str();
}

}  // namespace steiner
