#include "superjam/constellation.hpp"

#include <cmath>
#include <stdexcept>

#include "superjam/kernels.hpp"

namespace superjam {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const double* as_doubles(std::span<const ComplexSample> s) {
  return reinterpret_cast<const double*>(s.data());
}
double* as_doubles(std::span<ComplexSample> s) { return reinterpret_cast<double*>(s.data()); }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

// Outer bit of one axis for the 16-point rectangle decision.
bool outer_axis_negative(double x, double d2) { return x < 0.0 ? x < -d2 : x < d2; }

}  // namespace

Pac::Pac(double a) : a_(a) {
  if (!(a > 0.0 && a < 0.5)) {
    throw std::invalid_argument("power allocation coefficient must lie in (0, 0.5), got " +
                                std::to_string(a));
  }
  sqrt_a_ = std::sqrt(a);
  sqrt_1ma_ = std::sqrt(1.0 - a);
}

double Pac::d1() const noexcept { return std::sqrt(a_ / 2.0); }
double Pac::d2() const noexcept { return std::sqrt((1.0 - a_) / 2.0); }

OuterLabel::OuterLabel(unsigned bits) {
  if (bits > 3) throw std::invalid_argument("4-QAM label out of range");
  bits_ = static_cast<std::uint8_t>(bits);
}

OuterLabel OuterLabel::parse(const std::string& text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') ||
      (text[1] != '0' && text[1] != '1')) {
    throw std::invalid_argument("bad 4-QAM label '" + text + "'");
  }
  return OuterLabel(static_cast<unsigned>((text[0] - '0') * 2 + (text[1] - '0')));
}

std::string OuterLabel::to_string() const {
  return {static_cast<char>('0' + (bits_ >> 1)), static_cast<char>('0' + (bits_ & 1))};
}

SuperLabel::SuperLabel(unsigned packed) {
  if (packed > 15) throw std::invalid_argument("superposition label out of range");
  inner_ = OuterLabel(packed / 4);
  outer_ = OuterLabel(packed % 4);
}

SuperLabel SuperLabel::parse(const std::string& text) {
  if (text.size() != 4) throw std::invalid_argument("bad superposition label '" + text + "'");
  return {OuterLabel::parse(text.substr(0, 2)), OuterLabel::parse(text.substr(2, 2))};
}

std::string SuperLabel::to_string() const { return inner_.to_string() + outer_.to_string(); }

SymbolSeq SymbolSeq::from_labels(std::vector<std::uint8_t> labels) {
  SymbolSeq seq;
  seq.points.reserve(labels.size());
  for (auto l : labels) seq.points.push_back(outer_point(OuterLabel(l)));
  seq.labels = std::move(labels);
  return seq;
}

ComplexSample outer_point(OuterLabel label) {
  const double re = (label.bits() & 1) ? -kInvSqrt2 : kInvSqrt2;
  const double im = (label.bits() & 2) ? -kInvSqrt2 : kInvSqrt2;
  return {re, im};
}

ComplexSample superpose(ComplexSample y1, ComplexSample y2, const Pac& a) {
  const double sa = a.outer_amplitude();
  const double sb = a.inner_amplitude();
  return {sa * y1.real() + sb * y2.real(), sa * y1.imag() + sb * y2.imag()};
}

ComplexSample super_point(SuperLabel label, const Pac& a) {
  return superpose(outer_point(label.outer()), outer_point(label.inner()), a);
}

OuterLabel ml_detect_outer(ComplexSample sample) {
  return OuterLabel((sample.real() < 0.0 ? 1u : 0u) | (sample.imag() < 0.0 ? 2u : 0u));
}

SuperLabel ml_detect_super(ComplexSample sample, const Pac& a) {
  const double d2 = a.d2();
  const OuterLabel inner = ml_detect_outer(sample);
  const unsigned outer = (outer_axis_negative(sample.real(), d2) ? 1u : 0u) |
                         (outer_axis_negative(sample.imag(), d2) ? 2u : 0u);
  return {inner, OuterLabel(outer)};
}

OuterLabel eve_detect_outer(ComplexSample sample, const Pac& a) {
  return ml_detect_super(sample, a).outer();
}

ComplexSample cancel_interference(ComplexSample s1, ComplexSample y2_hat, const Pac& a) {
  const double sa = a.outer_amplitude();
  const double sb = a.inner_amplitude();
  return {(s1.real() - sb * y2_hat.real()) / sa, (s1.imag() - sb * y2_hat.imag()) / sa};
}

void superpose(std::span<const ComplexSample> y1, std::span<const ComplexSample> y2,
               const Pac& a, std::span<ComplexSample> out) {
  require_same_size(y1.size(), y2.size(), "superpose");
  require_same_size(y1.size(), out.size(), "superpose");
  kernels::active().axpby(as_doubles(y1), as_doubles(y2), a.outer_amplitude(),
                          a.inner_amplitude(), as_doubles(out), 2 * y1.size());
}

void cancel_interference(std::span<const ComplexSample> s1,
                         std::span<const ComplexSample> y2_hat, const Pac& a,
                         std::span<ComplexSample> out) {
  require_same_size(s1.size(), y2_hat.size(), "cancel_interference");
  require_same_size(s1.size(), out.size(), "cancel_interference");
  kernels::active().cancel(as_doubles(s1), as_doubles(y2_hat), a.outer_amplitude(),
                           a.inner_amplitude(), as_doubles(out), 2 * s1.size());
}

void ml_detect_outer(std::span<const ComplexSample> samples, std::span<std::uint8_t> labels) {
  require_same_size(samples.size(), labels.size(), "ml_detect_outer");
  kernels::active().detect_quadrant(as_doubles(samples), labels.data(), samples.size());
}

void eve_detect_outer(std::span<const ComplexSample> samples, const Pac& a,
                      std::span<std::uint8_t> labels) {
  require_same_size(samples.size(), labels.size(), "eve_detect_outer");
  kernels::active().detect_super_outer(as_doubles(samples), a.d2(), labels.data(),
                                       samples.size());
}

}  // namespace superjam
