#include "superjam/independence.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "superjam/kernels.hpp"

namespace superjam {
namespace {

constexpr double kDegenerateTrace = 1e-12;

double frobenius(const GramMatrix& a, const GramMatrix& b) {
  return kernels::active().dot(a.values.data(), b.values.data(), a.values.size());
}

}  // namespace

SampleMatrix::SampleMatrix(std::size_t n, std::size_t d, std::vector<double> values)
    : n_(n), d_(d), values_(std::move(values)) {
  if (n_ < 2) throw std::invalid_argument("sample matrix needs at least 2 rows");
  if (d_ == 0) throw std::invalid_argument("sample matrix needs at least 1 column");
  if (values_.size() != n_ * d_) throw std::invalid_argument("sample matrix size mismatch");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("sample matrix entry is not finite");
  }
}

SampleMatrix SampleMatrix::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || cell.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::runtime_error(path.string() + ":" + std::to_string(rows + 1) +
                                 ": not a real number '" + cell + "'");
      }
      values.push_back(v);
      ++c;
    }
    if (rows == 0) {
      cols = c;
    } else if (c != cols) {
      throw std::runtime_error(path.string() + ":" + std::to_string(rows + 1) +
                               ": inconsistent column count");
    }
    ++rows;
  }
  return SampleMatrix(rows, cols, std::move(values));
}

GramMatrix gram_linear(const SampleMatrix& x) {
  const std::size_t n = x.rows();
  const auto& k = kernels::active();
  GramMatrix g{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = k.dot(x.row(i), x.row(j), x.cols());
      g.values[i * n + j] = v;
      g.values[j * n + i] = v;
    }
  }
  return g;
}

GramMatrix center(const GramMatrix& k) {
  const std::size_t n = k.n;
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += k(i, j);
    row_mean[i] = s / static_cast<double>(n);
    grand += s;
  }
  grand /= static_cast<double>(n * n);
  // K symmetric: column means equal row means.
  GramMatrix out{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.values[i * n + j] = k(i, j) - row_mean[i] - row_mean[j] + grand;
    }
  }
  return out;
}

double nhsic(const SampleMatrix& x, const SampleMatrix& y, Centering centering) {
  if (x.rows() != y.rows()) throw std::invalid_argument("nhsic: sample counts differ");
  GramMatrix kx = gram_linear(x);
  GramMatrix ky = gram_linear(y);
  if (centering == Centering::centered) {
    kx = center(kx);
    ky = center(ky);
  }
  const double xx = frobenius(kx, kx);
  const double yy = frobenius(ky, ky);
  if (xx < kDegenerateTrace || yy < kDegenerateTrace) return 0.0;
  return frobenius(kx, ky) / std::sqrt(xx * yy);
}

void check_weights(const LossWeights& w) {
  if (!(w.lambda1 >= 0.0 && w.lambda2 >= 0.0 && w.lambda3 >= 0.0)) {
    throw std::invalid_argument("loss weights must be nonnegative");
  }
}

double loss_stage1(double mse_bob, double nhsic_val, const LossWeights& w) {
  check_weights(w);
  return mse_bob + w.lambda1 * nhsic_val;
}

double loss_stage2(double mse_eve) { return mse_eve; }

double loss_stage3(double mse_bob, double nhsic_val, double mse_y2, double mse_eve,
                   const LossWeights& w) {
  check_weights(w);
  return mse_bob + w.lambda1 * nhsic_val + w.lambda2 * mse_y2 - w.lambda3 * mse_eve;
}

}  // namespace superjam
