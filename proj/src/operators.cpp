#include "whlab/operators.hpp"

#include <cmath>
#include <deque>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "whlab/smooth.hpp"

namespace whlab {

Symbol::Symbol(Grid grid, Eigen::ArrayXcd values) : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "symbol size must equal N^n");
  require(values_.isFinite().all(), "symbol values must be finite");
  sup_norm_ = values_.abs().maxCoeff();
}

Symbol Symbol::constant(const Grid& grid, Complex c) {
  return Symbol(grid, Eigen::ArrayXcd::Constant(grid.size(), c));
}

Symbol Symbol::gaussian(const Grid& grid, const Point& center, double sigma, double peak) {
  require(sigma > 0.0, "Gaussian symbol width must be positive");
  return sampled(grid, [&](const Point& xi) {
    double r = grid.norm(xi - center);
    return Complex(peak * std::exp(-r * r / (2.0 * sigma * sigma)));
  });
}

Symbol Symbol::smoothed_step(const Grid& grid, double edge, double width) {
  require(width > 0.0, "step smoothing width must be positive");
  return sampled(grid, [&](const Point& xi) {
    return Complex(smooth_glue((xi(0) - edge) / width + 0.5));
  });
}

Symbol Symbol::sampled(const Grid& grid, const std::function<Complex(const Point&)>& rule) {
  Eigen::ArrayXcd values(grid.size());
  for (Index i = 0; i < grid.size(); ++i) values(i) = rule(grid.frequency_node(i));
  return Symbol(grid, std::move(values));
}

Symbol Symbol::operator+(const Symbol& other) const {
  require(grid_ == other.grid_, "symbol grid mismatch");
  return Symbol(grid_, values_ + other.values_);
}

Point Symbol::lebesgue_point() const {
  const Index size = grid_.size();
  const int N = grid_.points_per_axis();
  const double threshold = sup_norm_ * (1.0 - 1e-12);
  Eigen::ArrayXd mag = values_.abs();

  // Multi-source BFS on the frequency torus from the non-maximal nodes.
  std::vector<int> dist(std::size_t(size), -1);
  std::deque<Index> queue;
  for (Index i = 0; i < size; ++i)
    if (mag(i) < threshold) {
      dist[std::size_t(i)] = 0;
      queue.push_back(i);
    }
  if (queue.empty()) return grid_.frequency_node(grid_.flat_index(N / 2, grid_.dimension() == 2 ? N / 2 : 0));

  while (!queue.empty()) {
    Index i = queue.front();
    queue.pop_front();
    int i0 = grid_.axis_index(i, 0);
    int i1 = grid_.axis_index(i, 1);
    for (int d0 = -1; d0 <= 1; ++d0)
      for (int d1 = -1; d1 <= 1; ++d1) {
        if (grid_.dimension() == 1 && d1 != 0) continue;
        int n0 = (i0 + d0 + N) % N;
        int n1 = grid_.dimension() == 1 ? 0 : (i1 + d1 + N) % N;
        Index j = grid_.flat_index(n0, n1);
        if (dist[std::size_t(j)] < 0) {
          dist[std::size_t(j)] = dist[std::size_t(i)] + 1;
          queue.push_back(j);
        }
      }
  }
  Index best = 0;
  for (Index i = 1; i < size; ++i)
    if (dist[std::size_t(i)] > dist[std::size_t(best)]) best = i;
  return grid_.frequency_node(best);
}

namespace {

enum class Direction { forward, inverse };

// Continuum-normalised transform along one axis of a row-major array. On the
// forward pass slot j receives h (-1)^j DFT[(j + N/2) mod N]; the inverse pass
// undoes it exactly.
void transform_axis(Eigen::ArrayXcd& data, const Grid& grid, int axis, Direction dir) {
  thread_local Eigen::FFT<double> fft;
  const int N = grid.points_per_axis();
  const Index lines = grid.size() / N;
  const Index stride = (grid.dimension() == 2 && axis == 0) ? N : 1;
  const double h = grid.spacing();
  std::vector<Complex> in(static_cast<std::size_t>(N)), out(static_cast<std::size_t>(N));

  for (Index line = 0; line < lines; ++line) {
    Index base = stride == 1 ? line * N : line;
    if (dir == Direction::forward) {
      for (int m = 0; m < N; ++m) in[std::size_t(m)] = data(base + m * stride);
      fft.fwd(out, in);
      for (int j = 0; j < N; ++j) {
        double sign = (j % 2 == 0) ? h : -h;
        data(base + j * stride) = sign * out[std::size_t((j + N / 2) % N)];
      }
    } else {
      for (int j = 0; j < N; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        in[std::size_t((j + N / 2) % N)] = sign * data(base + j * stride);
      }
      fft.inv(out, in);
      for (int m = 0; m < N; ++m) data(base + m * stride) = out[std::size_t(m)] / h;
    }
  }
}

} // namespace

GridFunction fourier(const GridFunction& u) {
  require(u.side() == Side::spatial, "fourier expects a spatial-side function");
  Eigen::ArrayXcd data = u.values();
  for (int axis = 0; axis < u.grid().dimension(); ++axis)
    transform_axis(data, u.grid(), axis, Direction::forward);
  return GridFunction(u.grid(), std::move(data), Side::frequency);
}

GridFunction inverse_fourier(const GridFunction& v) {
  require(v.side() == Side::frequency, "inverse_fourier expects a frequency-side function");
  Eigen::ArrayXcd data = v.values();
  for (int axis = 0; axis < v.grid().dimension(); ++axis)
    transform_axis(data, v.grid(), axis, Direction::inverse);
  return GridFunction(v.grid(), std::move(data), Side::spatial);
}

GridFunction apply_multiplier(const Symbol& a, const GridFunction& u) {
  require(a.grid() == u.grid(), "symbol and function live on different grids");
  GridFunction spectrum = fourier(u);
  return inverse_fourier(GridFunction(u.grid(), a.values() * spectrum.values(), Side::frequency));
}

GridFunction wiener_hopf_apply(const Symbol& a, const DomainMask& omega, const GridFunction& u) {
  return restrict_to(apply_multiplier(a, extend_by_zero(u, omega)), omega);
}

double norm_probe(const Symbol& a, const SpaceSpec& space, std::span<const GridFunction> probes) {
  const DomainMask& omega = space.domain();
  double best = -1.0;
  for (const GridFunction& u : probes) {
    GridFunction on_omega = restrict_to(u, omega);
    double denom = luxemburg_norm(on_omega, space);
    if (denom == 0.0) continue;
    double numer = luxemburg_norm(wiener_hopf_apply(a, omega, on_omega), space);
    best = std::max(best, numer / denom);
  }
  require(best >= 0.0, "all probes vanish on the domain");
  return best;
}

bool within_support_margin(const Ball& support, const Grid& grid) {
  const double L = grid.half_width();
  if (2.0 * support.radius > 0.5 * L) return false;
  for (int axis = 0; axis < grid.dimension(); ++axis) {
    double c = std::abs(support.center(axis));
    if (c > 0.75 * L || c + support.radius > L) return false;
  }
  return true;
}

} // namespace whlab
