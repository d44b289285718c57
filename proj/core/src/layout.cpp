#include "indcol/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace indcol {

namespace {

std::vector<Point> circle(std::size_t n) {
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    out[i] = {0.5 + 0.45 * std::cos(a), 0.5 + 0.45 * std::sin(a)};
  }
  return out;
}

void normalize(std::vector<Point>& pts) {
  if (pts.empty()) return;
  double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
  for (auto p : pts) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  for (auto& p : pts) {
    p.x = 0.05 + 0.9 * (p.x - x0) / span;
    p.y = 0.05 + 0.9 * (p.y - y0) / span;
  }
}

}  // namespace

std::vector<Point> layout(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  if (n == 0) return {};
  if (n == 1) return {{0.5, 0.5}};
  if (n > 400) return circle(n);

  // Fruchterman-Reingold with linear cooling.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pos(n);
  for (auto& p : pos) p = {unit(rng), unit(rng)};
  const double k = std::sqrt(1.0 / static_cast<double>(n));
  const auto edges = g.edges();
  constexpr int kIterations = 300;
  std::vector<Point> disp(n);
  for (int it = 0; it < kIterations; ++it) {
    const double temp = 0.1 * (1.0 - static_cast<double>(it) / kIterations);
    std::fill(disp.begin(), disp.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const double d2 = std::max(dx * dx + dy * dy, 1e-12);
        const double f = k * k / d2;
        disp[i].x += dx * f, disp[i].y += dy * f;
        disp[j].x -= dx * f, disp[j].y -= dy * f;
      }
    }
    for (auto [u, v] : edges) {
      auto& a = pos[static_cast<std::size_t>(u)];
      auto& b = pos[static_cast<std::size_t>(v)];
      const double dx = a.x - b.x, dy = a.y - b.y;
      const double d = std::max(std::sqrt(dx * dx + dy * dy), 1e-6);
      const double f = d / k;
      disp[static_cast<std::size_t>(u)].x -= dx * f, disp[static_cast<std::size_t>(u)].y -= dy * f;
      disp[static_cast<std::size_t>(v)].x += dx * f, disp[static_cast<std::size_t>(v)].y += dy * f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::max(std::hypot(disp[i].x, disp[i].y), 1e-12);
      const double step = std::min(len, temp);
      pos[i].x += disp[i].x / len * step;
      pos[i].y += disp[i].y / len * step;
    }
  }
  normalize(pos);
  return pos;
}

}  // namespace indcol
