#include <algorithm>
#include <cmath>
#include <string>

#include "steiner/melzak.hpp"

namespace steiner {

Point fermat_point(Point a, Point b, Point c) {
  double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  // Coincident pairs: the repeated point wins (weight 2 beats weight 1).
  if (std::abs(a - b) <= 1e-14 * scale) return a;
  if (std::abs(a - c) <= 1e-14 * scale) return a;
  if (std::abs(b - c) <= 1e-14 * scale) return b;

  if (angle_at(a, b, c) >= kSteinerAngle) return a;
  if (angle_at(b, a, c) >= kSteinerAngle) return b;
  if (angle_at(c, a, b) >= kSteinerAngle) return c;

  // Torricelli construction: intersect two Simpson lines, which always meet
  // at an angle of pi/3.
  Point ec = third_equilateral_point(a, b, cross(b - a, c - a) > 0.0 ? Side::right : Side::left);
  Point ea = third_equilateral_point(b, c, cross(c - b, a - b) > 0.0 ? Side::right : Side::left);
  Point d1 = c - ec;
  Point d2 = a - ea;
  double t = cross(ea - ec, d2) / cross(d1, d2);
  return ec + t * d1;
}

OracleResult numeric_oracle(const FullTopology& topology, const std::vector<Point>& terminals,
                            int max_iter, double tol, const std::vector<Point>* initial) {
  topology.validate();
  if (static_cast<int>(terminals.size()) != topology.node_count()) {
    throw Error("numeric_oracle: positions must be indexed by node id");
  }

  int n = topology.node_count();
  std::vector<Point> pos = terminals;
  std::vector<int> steiner_nodes;
  for (int i = 0; i < n; ++i) {
    if (!topology.is_terminal(i)) steiner_nodes.push_back(i);
  }
  if (initial != nullptr) {
    for (int i : steiner_nodes) pos[i] = (*initial)[i];
  } else {
    Point centroid = 0.0;
    for (int i = 0; i < n; ++i) {
      if (topology.is_terminal(i)) centroid += terminals[i];
    }
    centroid /= static_cast<double>(topology.n_terminals());
    for (int i : steiner_nodes) pos[i] = centroid;
  }

  auto total_length = [&]() {
    double sum = 0.0;
    for (auto [u, v] : topology.edges()) sum += std::abs(pos[u] - pos[v]);
    return sum;
  };

  // Warm start on the smoothed objective sum sqrt(|e|^2 + mu^2), annealing
  // mu down.  Exact Fermat updates alone can stall on a coordinate-wise
  // fixed point when Steiner points coincide (the degenerate optima); the
  // smoothed problem has no kinks, so its sweeps track the true minimizer
  // and drop the exact phase into the right basin.
  for (double mu = 1e-1; mu > 1e-13; mu *= 1e-2) {
    for (int sweep = 0; sweep < 60; ++sweep) {
      double max_move = 0.0;
      for (int node : steiner_nodes) {
        const auto& nbrs = topology.neighbors(node);
        Point x = pos[node];
        for (int inner = 0; inner < 2; ++inner) {
          double weight_sum = 0.0;
          Point weighted{0.0, 0.0};
          for (int v : nbrs) {
            double w = 1.0 / std::sqrt(std::norm(x - pos[v]) + mu * mu);
            weight_sum += w;
            weighted += w * pos[v];
          }
          x = weighted / weight_sum;
        }
        max_move = std::max(max_move, std::abs(x - pos[node]));
        pos[node] = x;
      }
      if (max_move < std::max(tol, 1e-3 * mu)) break;
    }
  }

  // Weiszfeld-style geometric median of a point set, used for the joint
  // relocation of collapsed Steiner clusters.
  auto geometric_median = [](const std::vector<Point>& points, Point start) {
    Point x = start;
    for (int iter = 0; iter < 100; ++iter) {
      double weight_sum = 0.0;
      Point weighted{0.0, 0.0};
      for (Point p : points) {
        double w = 1.0 / std::max(std::abs(x - p), 1e-15);
        weight_sum += w;
        weighted += w * p;
      }
      Point next = weighted / weight_sum;
      if (std::abs(next - x) < 1e-14) return next;
      x = next;
    }
    return x;
  };

  // A cluster of mutually coincident Steiner points acts as one junction;
  // per-node Fermat updates cannot move it even when the whole cluster is
  // off the median of its outside neighbors, so relocate it jointly.
  auto relocate_clusters = [&](double scale) {
    double moved = 0.0;
    std::vector<char> visited(n, 0);
    for (int seed : steiner_nodes) {
      if (visited[seed]) continue;
      std::vector<int> cluster{seed};
      visited[seed] = 1;
      for (size_t i = 0; i < cluster.size(); ++i) {
        for (int v : topology.neighbors(cluster[i])) {
          if (topology.is_terminal(v) || visited[v]) continue;
          if (std::abs(pos[v] - pos[cluster[i]]) < 1e-7 * scale) {
            visited[v] = 1;
            cluster.push_back(v);
          }
        }
      }
      if (cluster.size() < 2) continue;
      std::vector<char> inside(n, 0);
      for (int node : cluster) inside[node] = 1;
      std::vector<Point> outside;
      for (int node : cluster) {
        for (int v : topology.neighbors(node)) {
          if (!inside[v]) outside.push_back(pos[v]);
        }
      }
      Point median = geometric_median(outside, pos[seed]);
      for (int node : cluster) {
        moved = std::max(moved, std::abs(median - pos[node]));
        pos[node] = median;
      }
    }
    return moved;
  };

  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(pos[i]));

  std::vector<Point> last_move(n, Point{0.0, 0.0});
  OracleResult result;
  for (int sweep = 0; sweep < max_iter; ++sweep) {
    double max_move = 0.0;
    bool forward = (sweep % 2) == 0;
    for (size_t idx = 0; idx < steiner_nodes.size(); ++idx) {
      int node = forward ? steiner_nodes[idx] : steiner_nodes[steiner_nodes.size() - 1 - idx];
      const auto& nbrs = topology.neighbors(node);
      Point target = fermat_point(pos[nbrs[0]], pos[nbrs[1]], pos[nbrs[2]]);
      Point move = target - pos[node];
      if (dot(move, last_move[node]) < 0.0) move *= 0.5;
      pos[node] += move;
      last_move[node] = move;
      max_move = std::max(max_move, std::abs(move));
    }
    max_move = std::max(max_move, relocate_clusters(scale));
    result.sweeps = sweep + 1;
    if (max_move < tol) {
      result.converged = true;
      break;
    }
  }
  result.length = total_length();
  result.positions = std::move(pos);
  if (!result.converged) {
    throw OracleNoConvergence("numeric_oracle: no convergence after " + std::to_string(max_iter) +
                                  " sweeps; last length " + std::to_string(result.length),
                              std::move(result));
  }
  return result;
}

}  // namespace steiner
