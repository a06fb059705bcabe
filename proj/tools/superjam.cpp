// superjam: SEP curves, PAC planning, Monte Carlo validation, end-to-end
// transmission and the nHSIC statistic from the command line.

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace superjam::cli;

  CLI::App app{"Coding-enhanced jamming link toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SUPERJAM_VERSION);

  std::uint64_t seed_default = 0;
  try {
    seed_default = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "superjam: " << e.what() << '\n';
    return kExitUsage;
  }

  SepCurveOptions curve;
  auto* c = app.add_subcommand("sep-curve", "Analytic SEP of both receivers over a PAC grid (CSV)");
  c->add_option("--snr-db", curve.snr_db, "Channel SNR in dB")->capture_default_str();
  c->add_option("--a-min", curve.a_min, "Smallest PAC")->capture_default_str();
  c->add_option("--a-max", curve.a_max, "Largest PAC")->capture_default_str();
  c->add_option("--steps", curve.steps, "Grid points, at least 2")->capture_default_str();
  c->add_option("--out", curve.out, "CSV path (default: standard output)");
  c->add_option("--svg", curve.svg, "Optional SVG plot path");

  PacPlanOptions plan;
  double max_leg = -1.0;
  auto* p = app.add_subcommand("pac-plan", "Largest PAC meeting an eavesdropper SEP floor");
  p->add_option("--snr-db", plan.snr_db, "Channel SNR in dB")->capture_default_str();
  p->add_option("--min-eve-sep", plan.min_eve_sep, "Required eavesdropper SEP")->required();
  auto* max_leg_opt = p->add_option("--max-leg-sep", max_leg, "Optional legitimate SEP ceiling");

  SimulateOptions sim;
  sim.seed = seed_default;
  auto* s = app.add_subcommand("simulate", "Monte Carlo SEPs against the closed forms (CSV)");
  s->add_option("--a", sim.a, "PAC in (0, 0.5)")->capture_default_str();
  s->add_option("--snr-leg", sim.snr_leg_db, "Legitimate SNR in dB")->capture_default_str();
  s->add_option("--snr-eve", sim.snr_eve_db, "Eavesdropper SNR in dB")->capture_default_str();
  s->add_option("--symbols", sim.symbols, "Symbols to simulate")->capture_default_str();
  s->add_option("--seed", sim.seed, "Master seed (default: SUPERJAM_SEED or 0)");
  s->add_option("--workers", sim.workers, "Worker threads")->capture_default_str();
  s->add_option("--out", sim.out, "CSV path (default: standard output)");

  TransmitOptions tx;
  tx.seed = seed_default;
  auto* t = app.add_subcommand("transmit", "Send one PGM/PPM image to Bob and Eve");
  t->add_option("--image", tx.image, "Input PGM (P5) or PPM (P6)")->required();
  t->add_option("--kb", tx.kb, "Knowledge-base directory")->required();
  t->add_option("--a", tx.a, "PAC in (0, 0.5)")->capture_default_str();
  t->add_option("--snr-leg", tx.snr_leg_db, "Legitimate SNR in dB")->capture_default_str();
  t->add_option("--snr-eve", tx.snr_eve_db, "Eavesdropper SNR in dB")->capture_default_str();
  t->add_option("--seed", tx.seed, "Master seed (default: SUPERJAM_SEED or 0)");
  t->add_option("--index-seed", tx.index_seed, "Seed for the codeword index")
      ->capture_default_str();
  t->add_option("--codec", tx.codec, "raw or block:K")->capture_default_str();
  t->add_option("--regen-error", tx.regen_error,
                "Probability of a wrong regenerated jamming label at Bob")
      ->capture_default_str();
  t->add_option("--out-bob", tx.out_bob, "Bob's recovered image")->required();
  t->add_option("--out-eve", tx.out_eve, "Eve's recovered image")->required();
  t->add_option("--report", tx.report, "Report CSV path")->required();

  NhsicOptions nh;
  auto* n = app.add_subcommand("nhsic", "Normalized HSIC between two sample CSVs");
  n->add_option("--x", nh.x, "First sample CSV")->required();
  n->add_option("--y", nh.y, "Second sample CSV")->required();
  n->add_flag("--uncentered", nh.uncentered, "Use uncentered Gram matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*c) return sep_curve(curve);
  if (*p) {
    if (*max_leg_opt) plan.max_leg_sep = max_leg;
    return pac_plan(plan);
  }
  if (*s) return simulate(sim);
  if (*t) return transmit(tx);
  if (*n) return nhsic(nh);
  return kExitUsage;
}
