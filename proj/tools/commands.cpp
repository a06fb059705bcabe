#include "commands.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "superjam/codec.hpp"
#include "superjam/independence.hpp"
#include "superjam/jamming_codebook.hpp"
#include "superjam/link_pipeline.hpp"
#include "superjam/metrics.hpp"
#include "superjam/sep_analysis.hpp"

#ifndef SUPERJAM_VERSION
#define SUPERJAM_VERSION "0.0.0"
#endif

namespace superjam::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Files are staged under temporary names and renamed into place only when
/// every output of the command has been written.
class OutputSet {
 public:
  OutputSet() = default;
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    for (const auto& [tmp, dst] : staged_) {
      std::error_code ec;
      fs::remove(tmp, ec);
    }
  }

  void add(const fs::path& dst, const std::string& bytes) {
    const fs::path tmp = dst.string() + ".tmp" + std::to_string(::getpid());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + dst.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw std::runtime_error("cannot write " + dst.string());
    staged_.emplace_back(tmp, dst);
  }

  void commit() {
    for (const auto& [tmp, dst] : staged_) fs::rename(tmp, dst);
    staged_.clear();
  }

 private:
  std::vector<std::pair<fs::path, fs::path>> staged_;
};

class Manifest {
 public:
  explicit Manifest(const std::string& command) {
    add("command", command);
    add("tool_version", SUPERJAM_VERSION);
  }
  Manifest& add(const std::string& key, const std::string& value) {
    text_ << key << '=' << value << '\n';
    return *this;
  }
  Manifest& add(const std::string& key, double value) { return add(key, format_real(value)); }
  Manifest& add_int(const std::string& key, std::uint64_t value) {
    return add(key, std::to_string(value));
  }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

std::string manifest_path(const std::string& out) { return out + ".manifest"; }

std::string to_string(const std::vector<std::uint8_t>& bytes) {
  return {bytes.begin(), bytes.end()};
}

void require_pac_range(double a, const char* flag) {
  if (!(a > 0.0 && a < 0.5)) {
    throw UsageError(std::string(flag) + " must lie in (0, 0.5)");
  }
}

void require_finite(double v, const char* flag) {
  if (!std::isfinite(v)) throw UsageError(std::string(flag) + " must be finite");
}

CodecSpec parse_codec(const std::string& text) {
  if (text == "raw") return CodecSpec::raw();
  const std::string prefix = "block:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string k = text.substr(prefix.size());
    if (!k.empty() && k.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long block = std::stoul(k);
      if (block >= 1 && block <= 4096) return CodecSpec::block_mean(block);
    }
  }
  throw UsageError("--codec must be 'raw' or 'block:K' with K >= 1");
}

std::string codec_name(const CodecSpec& c) {
  return c.mode == CodecMode::raw ? "raw" : "block:" + std::to_string(c.block);
}

std::string render_svg(const SepCurve& curve) {
  constexpr double W = 640, H = 400, L = 60, R = 20, T = 30, B = 50;
  const double a0 = curve.points.front().a;
  const double a1 = curve.points.back().a;
  const auto px = [&](double a) { return L + (a - a0) / (a1 - a0) * (W - L - R); };
  const auto py = [&](double p) { return T + (1.0 - p) * (H - T - B); };
  std::ostringstream s;
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << L << "\" y1=\"" << py(0) << "\" x2=\"" << W - R << "\" y2=\"" << py(0)
    << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << L << "\" y1=\"" << py(0) << "\" x2=\"" << L << "\" y2=\"" << py(1)
    << "\" stroke=\"black\"/>\n";
  for (double p = 0.0; p <= 1.0001; p += 0.2) {
    s << "<text x=\"" << L - 8 << "\" y=\"" << py(p) + 4
      << "\" font-size=\"11\" text-anchor=\"end\">" << p << "</text>\n";
  }
  s << "<text x=\"" << L << "\" y=\"" << H - 20 << "\" font-size=\"11\">" << a0 << "</text>\n"
    << "<text x=\"" << W - R << "\" y=\"" << H - 20 << "\" font-size=\"11\" text-anchor=\"end\">"
    << a1 << "</text>\n"
    << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
    << "\" font-size=\"12\" text-anchor=\"middle\">PAC a</text>\n"
    << "<text x=\"" << W / 2 << "\" y=\"18\" font-size=\"13\" text-anchor=\"middle\">SEP at "
    << curve.snr_db << " dB</text>\n";
  const auto polyline = [&](const char* colour, auto value) {
    s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : curve.points) s << px(p.a) << ',' << py(value(p)) << ' ';
    s << "\"/>\n";
  };
  polyline("red", [](const SepPoint& p) { return p.sep_leg; });
  polyline("blue", [](const SepPoint& p) { return p.sep_eve; });
  s << "<text x=\"" << W - R - 120 << "\" y=\"" << T + 15
    << "\" font-size=\"11\" fill=\"red\">legitimate</text>\n"
    << "<text x=\"" << W - R - 120 << "\" y=\"" << T + 30
    << "\" font-size=\"11\" fill=\"blue\">eavesdropper</text>\n</svg>\n";
  return s.str();
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InfeasiblePlan& e) {
    std::cerr << "superjam: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "superjam: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("SUPERJAM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::runtime_error("SUPERJAM_SEED must be an unsigned integer");
  }
  return std::stoull(text);
}

int sep_curve(const SepCurveOptions& o) {
  return guarded([&] {
    require_finite(o.snr_db, "--snr-db");
    require_pac_range(o.a_min, "--a-min");
    require_pac_range(o.a_max, "--a-max");
    if (o.steps < 2) throw UsageError("--steps must be at least 2");
    if (!(o.a_min < o.a_max)) throw UsageError("--a-min must be below --a-max");

    const SepCurve curve = sweep_curve(o.snr_db, linear_grid(o.a_min, o.a_max, o.steps));
    std::ostringstream csv;
    csv << "a,snr_db,sep_leg,sep_eve\n";
    for (const auto& p : curve.points) {
      csv << format_real(p.a) << ',' << format_real(p.snr_db) << ',' << format_real(p.sep_leg)
          << ',' << format_real(p.sep_eve) << '\n';
    }

    OutputSet outputs;
    Manifest m("sep-curve");
    m.add("snr_db", o.snr_db).add("a_min", o.a_min).add("a_max", o.a_max).add_int("steps",
                                                                                  o.steps);
    if (!o.svg.empty()) outputs.add(o.svg, render_svg(curve));
    if (o.out.empty()) {
      outputs.commit();
      std::cout << csv.str();
    } else {
      outputs.add(o.out, csv.str());
      outputs.add(manifest_path(o.out), m.str());
      outputs.commit();
    }
    return kExitOk;
  });
}

int pac_plan(const PacPlanOptions& o) {
  return guarded([&] {
    require_finite(o.snr_db, "--snr-db");
    if (!(o.min_eve_sep > 0.0 && o.min_eve_sep < 1.0)) {
      throw UsageError("--min-eve-sep must lie in (0, 1)");
    }
    if (o.max_leg_sep && !(*o.max_leg_sep > 0.0 && *o.max_leg_sep < 1.0)) {
      throw UsageError("--max-leg-sep must lie in (0, 1)");
    }
    const PacPlan plan = plan_pac(o.snr_db, o.min_eve_sep, o.max_leg_sep);
    std::cout << "a=" << format_real(plan.a.value()) << " sep_leg=" << format_real(plan.sep_leg)
              << " sep_eve=" << format_real(plan.sep_eve) << '\n';
    return kExitOk;
  });
}

int simulate(const SimulateOptions& o) {
  return guarded([&] {
    require_pac_range(o.a, "--a");
    require_finite(o.snr_leg_db, "--snr-leg");
    require_finite(o.snr_eve_db, "--snr-eve");
    if (o.symbols < 1) throw UsageError("--symbols must be at least 1");
    if (o.workers < 1) throw UsageError("--workers must be at least 1");

    SimulationConfig cfg{Pac(o.a), o.snr_leg_db, o.snr_eve_db,
                         static_cast<std::uint64_t>(o.symbols), o.seed, o.workers};
    const SimulationResult r = simulate_sep(cfg);
    std::ostringstream csv;
    csv << "a,snr_leg_db,snr_eve_db,symbols,seed,"
           "sep_leg_analytic,sep_leg_empirical,sep_leg_halfwidth3,sep_leg_within,"
           "sep_eve_analytic,sep_eve_empirical,sep_eve_halfwidth3,sep_eve_within\n";
    csv << format_real(o.a) << ',' << format_real(o.snr_leg_db) << ','
        << format_real(o.snr_eve_db) << ',' << r.symbols << ',' << o.seed << ','
        << format_real(r.sep_leg_analytic) << ',' << format_real(r.sep_leg_empirical()) << ','
        << format_real(r.halfwidth_leg()) << ',' << (r.leg_within() ? "true" : "false") << ','
        << format_real(r.sep_eve_analytic) << ',' << format_real(r.sep_eve_empirical()) << ','
        << format_real(r.halfwidth_eve()) << ',' << (r.eve_within() ? "true" : "false") << '\n';

    if (o.out.empty()) {
      std::cout << csv.str();
      return kExitOk;
    }
    Manifest m("simulate");
    m.add("a", o.a).add("snr_leg_db", o.snr_leg_db).add("snr_eve_db", o.snr_eve_db);
    m.add_int("symbols", r.symbols).add_int("seed", o.seed);
    OutputSet outputs;
    outputs.add(o.out, csv.str());
    outputs.add(manifest_path(o.out), m.str());
    outputs.commit();
    return kExitOk;
  });
}

int transmit(const TransmitOptions& o) {
  return guarded([&] {
    require_pac_range(o.a, "--a");
    require_finite(o.snr_leg_db, "--snr-leg");
    require_finite(o.snr_eve_db, "--snr-eve");
    if (!(o.regen_error >= 0.0 && o.regen_error <= 1.0)) {
      throw UsageError("--regen-error must lie in [0, 1]");
    }
    const CodecSpec codec = parse_codec(o.codec);
    const Image img = read_pnm(o.image);
    const KnowledgeBase kb = KnowledgeBase::from_directory(o.kb);
    if (kb.empty()) throw UsageError("knowledge base directory " + o.kb + " has no files");

    const std::size_t length = codec.symbol_count({img.width, img.height, img.channels});
    const Codebook codebook = build_codebook(kb, length);
    LinkConfig cfg{Pac(o.a), o.snr_leg_db, o.snr_eve_db, o.seed, codec, o.index_seed,
                   o.regen_error};
    const FrameResult frame = transmit_frame(img, codebook, cfg);
    const LinkReport& r = frame.report;

    std::ostringstream csv;
    csv << "a,snr_leg_db,snr_eve_db,index,symbol_count,sep_emp_leg,sep_emp_eve,"
           "sep_leg_analytic,sep_eve_analytic,psnr_bob_db,psnr_eve_db\n";
    csv << format_real(o.a) << ',' << format_real(o.snr_leg_db) << ','
        << format_real(o.snr_eve_db) << ',' << r.index.value() << ',' << r.symbol_count << ','
        << format_real(r.sep_emp_leg) << ',' << format_real(r.sep_emp_eve) << ','
        << format_real(sep_legitimate(cfg.a, sigma_from_snr(o.snr_leg_db))) << ','
        << format_real(sep_eavesdropper(cfg.a, sigma_from_snr(o.snr_eve_db))) << ','
        << r.psnr_bob.to_string() << ',' << r.psnr_eve.to_string() << '\n';

    Manifest m("transmit");
    m.add("image", o.image).add("kb", o.kb).add("kb_digest", to_hex(codebook.kb_digest()));
    m.add("a", o.a).add("snr_leg_db", o.snr_leg_db).add("snr_eve_db", o.snr_eve_db);
    m.add_int("seed", o.seed).add_int("index_seed", o.index_seed);
    m.add("codec", codec_name(codec)).add("regen_error", o.regen_error);
    m.add("out_bob", o.out_bob).add("out_eve", o.out_eve);

    OutputSet outputs;
    outputs.add(o.out_bob, to_string(encode_pnm(frame.bob)));
    outputs.add(o.out_eve, to_string(encode_pnm(frame.eve)));
    outputs.add(o.report, csv.str());
    outputs.add(manifest_path(o.report), m.str());
    outputs.commit();
    return kExitOk;
  });
}

int nhsic(const NhsicOptions& o) {
  return guarded([&] {
    const SampleMatrix x = SampleMatrix::read_csv(o.x);
    const SampleMatrix y = SampleMatrix::read_csv(o.y);
    if (x.rows() != y.rows()) {
      throw UsageError("row counts differ: " + std::to_string(x.rows()) + " vs " +
                       std::to_string(y.rows()));
    }
    const double v =
        superjam::nhsic(x, y, o.uncentered ? Centering::uncentered : Centering::centered);
    std::cout << format_real(v) << '\n';
    return kExitOk;
  });
}

}  // namespace superjam::cli
