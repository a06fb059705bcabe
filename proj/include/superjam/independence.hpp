#pragma once

#include <filesystem>
#include <vector>

namespace superjam {

/// n x d row-major matrix of reals, one sample per row.
class SampleMatrix {
 public:
  /// Throws std::invalid_argument if n < 2, d == 0, the value count is not
  /// n * d, or an entry is not finite.
  SampleMatrix(std::size_t n, std::size_t d, std::vector<double> values);

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return d_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * d_ + j]; }
  const double* row(std::size_t i) const noexcept { return values_.data() + i * d_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Headerless CSV of reals, one sample per row.
  static SampleMatrix read_csv(const std::filesystem::path& path);

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> values_;
};

/// Dense n x n matrix, row-major.
struct GramMatrix {
  std::size_t n = 0;
  std::vector<double> values;
  double operator()(std::size_t i, std::size_t j) const noexcept { return values[i * n + j]; }
};

/// K[i][j] = <x_i, x_j>.
GramMatrix gram_linear(const SampleMatrix& x);

/// H K H with H = I - 11^T / n.
GramMatrix center(const GramMatrix& k);

enum class Centering { centered, uncentered };

/// tr(Kx Ky) / sqrt(tr(Kx Kx) tr(Ky Ky)) over linear-kernel Gram matrices,
/// double-centered by default. Returns 0 when either self-trace is below
/// 1e-12. Throws std::invalid_argument when sample counts differ.
double nhsic(const SampleMatrix& x, const SampleMatrix& y,
             Centering centering = Centering::centered);

struct LossWeights {
  double lambda1 = 0.01;
  double lambda2 = 1.0;
  double lambda3 = 1.5;
};

/// Throws std::invalid_argument for a negative weight.
void check_weights(const LossWeights& w);

double loss_stage1(double mse_bob, double nhsic_val, const LossWeights& w);
double loss_stage2(double mse_eve);
/// May be negative: the eavesdropper term is subtracted.
double loss_stage3(double mse_bob, double nhsic_val, double mse_y2, double mse_eve,
                   const LossWeights& w);

}  // namespace superjam
