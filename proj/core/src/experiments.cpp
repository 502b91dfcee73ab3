#include "bieig/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/lu.hpp"
#include "bieig/oracle.hpp"
#include "bieig/power.hpp"
#include "bieig/rng.hpp"
#include "bieig/serialize.hpp"

namespace bieig {

namespace {

// Printed H_theta at N=7, theta=0.4: zeros on the odd-parity checkerboard,
// purely imaginary on the (i+j even, i != j, |i-j| = 2 mod 4) couplings.
CMatrix printed_swanson() {
  CMatrix H(7);
  auto set = [&](std::size_t i, std::size_t j, double re, double im) {
    H(i - 1, j - 1) = cplx{re, im};
  };
  set(1, 1, 0.348126, 0);
  set(1, 3, 0, -0.510541);
  set(1, 5, 0.0140773, 0);
  set(1, 7, 0, 0.0216558);
  set(2, 2, 1.05673, 0);
  set(2, 4, 0, -0.805139);
  set(2, 6, -0.145695, 0);
  set(3, 1, 0, -0.510541);
  set(3, 3, 1.79157, 0);
  set(3, 5, 0, -1.01756);
  set(3, 7, -0.372785, 0);
  set(4, 2, 0, -0.805139);
  set(4, 4, 1.9337, 0);
  set(4, 6, 0, -2.76093);
  set(5, 1, 0.0140773, 0);
  set(5, 3, 0, -1.01756);
  set(5, 5, 2.0337, 0);
  set(5, 7, 0, -4.04439);
  set(6, 2, -0.145695, 0);
  set(6, 4, 0, -2.76093);
  set(6, 6, 7.50957, 0);
  set(7, 1, 0, 0.0216558);
  set(7, 3, -0.372785, 0);
  set(7, 5, 0, -4.04439);
  set(7, 7, 9.8266, 0);
  return H;
}

struct Runner {
  ExperimentReport rep;
  std::string out_dir;
  SpectralData oracle;
  CMatrix A;

  void attach_ranks(EigRecord& r) const {
    if (oracle.eigenvalues.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < oracle.eigenvalues.size(); ++i)
      if (std::abs(oracle.eigenvalues[i] - r.lambda) <
          std::abs(oracle.eigenvalues[best] - r.lambda))
        best = i;
    r.has_oracle = true;
    r.oracle_lambda = oracle.eigenvalues[best];
    r.oracle_delta = std::abs(r.lambda - r.oracle_lambda);
    int rank_real = 1, rank_mod = 1;
    for (std::size_t i = 0; i < oracle.eigenvalues.size(); ++i) {
      if (i == best) continue;
      if (oracle.eigenvalues[i].real() > r.oracle_lambda.real()) ++rank_real;
      if (std::abs(oracle.eigenvalues[i]) > std::abs(r.oracle_lambda)) ++rank_mod;
    }
    r.rank_by_real = rank_real;
    r.rank_by_modulus = rank_mod;
  }

  void check_target(EigRecord& r, cplx target, double tol, bool relative) const {
    r.has_target = true;
    r.target = target;
    r.tolerance = tol;
    r.tolerance_relative = relative;
    const double bound = relative ? tol * std::abs(target) : tol;
    r.pass = std::abs(r.lambda - target) <= bound;
  }

  void save_trace(const std::string& label, const ConvergenceTrace& tr) const {
    if (out_dir.empty()) return;
    write_trace_file(out_dir + "/" + rep.experiment_id + "_" + label + "_trace.jsonl", tr);
  }

  void add(EigRecord r) { rep.records.push_back(std::move(r)); }
};

EigRecord flow_record(Runner& run, const std::string& label, const FlowResult& fr) {
  EigRecord r;
  r.method = label.find("smallest") != std::string::npos ? "flow-smallest" : "flow";
  r.label = label;
  r.lambda = fr.pair.lambda;
  if (!fr.pair.phi.empty()) r.residual = residual(run.A, fr.pair.lambda, fr.pair.phi);
  r.iterations_or_time = fr.trace.samples.empty() ? 0.0 : fr.trace.samples.back().t_or_iter;
  if (fr.status != FlowStatus::converged) r.note = "flow status not converged: " + fr.diagnostic;
  run.attach_ranks(r);
  run.save_trace(label, fr.trace);
  return r;
}

EigRecord power_record(Runner& run, const std::string& label, const std::string& method,
                       const PowerResult& pr) {
  EigRecord r;
  r.method = method;
  r.label = label;
  r.lambda = pr.pair.lambda;
  if (!pr.pair.phi.empty() && pr.status == PowerStatus::converged)
    r.residual = residual(run.A, pr.pair.lambda, pr.pair.phi);
  r.iterations_or_time = static_cast<double>(pr.iterations);
  if (pr.status != PowerStatus::converged)
    r.note = "status not converged: " + pr.diagnostic;
  run.attach_ranks(r);
  run.save_trace(label, pr.trace);
  return r;
}

// Tiny-eigenvalue runs stagnate at the machine residual floor; fall back to
// the best traced sample and record the floor.
PowerResult best_effort(PowerResult pr, const CMatrix& A, double pairing_floor) {
  if (pr.status == PowerStatus::converged || pr.trace.samples.empty()) return pr;
  std::size_t best = 0;
  for (std::size_t i = 1; i < pr.trace.samples.size(); ++i)
    if (std::max(pr.trace.samples[i].residual_phi, pr.trace.samples[i].residual_psi) <
        std::max(pr.trace.samples[best].residual_phi, pr.trace.samples[best].residual_psi))
      best = i;
  pr.pair.lambda = pr.trace.samples[best].lambda_est;
  pr.diagnostic += " (best traced sample at step " +
                   std::to_string(static_cast<std::size_t>(pr.trace.samples[best].t_or_iter)) +
                   ")";
  (void)A;
  (void)pairing_floor;
  return pr;
}

std::string spectrum_note(const std::string& tag, const CMatrix& D) {
  SpectralData s = qr_spectrum(D);
  std::vector<cplx> top(s.eigenvalues);
  std::sort(top.begin(), top.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  std::ostringstream os;
  os << tag << " top-3 by modulus:";
  for (int i = 0; i < 3 && i < static_cast<int>(top.size()); ++i)
    os << " (" << format_double(top[i].real()) << ", " << format_double(top[i].imag()) << ")";
  return os.str();
}

ExperimentReport run_e1(const std::string& out_dir, std::uint64_t seed) {
  Runner run;
  run.rep.experiment_id = "e1";
  run.rep.matrix_description = "fixed 7x7 A = R + iT";
  run.rep.seed = seed;
  run.out_dir = out_dir;
  run.A = e1_fixture().A;
  run.oracle = qr_spectrum(run.A);
  if (!out_dir.empty()) write_matrix_file(out_dir + "/e1_matrix.json", run.A);

  const cplx l1{1.5181, -1.2564}, l2{0.9604, -2.2206}, l5{-0.7583, -1.154},
      l7{-1.3201, 1.2896};
  const double tol = 1e-3;

  SolverConfig cfg;
  cfg.seed = seed;
  cfg.delta_tol = 1e-8;

  {
    FlowResult fr = solve_flow(run.A, cfg);
    EigRecord r = flow_record(run, "flow_largest", fr);
    run.check_target(r, l1, tol, false);
    r.pass = r.pass && fr.status == FlowStatus::converged;
    run.add(r);
  }
  {
    FlowResult fr = solve_flow_smallest(run.A, cfg);
    EigRecord r = flow_record(run, "flow_smallest", fr);
    run.check_target(r, l7, tol, false);
    r.pass = r.pass && fr.status == FlowStatus::converged;
    run.add(r);
  }
  {
    Rng rng(seed);
    PowerResult pr = power_iterate(run.A, rng.next_cvector(7), cfg);
    EigRecord r = power_record(run, "power_dominant", "power", pr);
    run.check_target(r, l2, tol, false);
    r.pass = r.pass && pr.status == PowerStatus::converged;
    run.add(r);
  }
  {
    // documented shift policy: seeded uniform draws from the Gershgorin disk
    // union, rejecting shifts near already-found eigenvalues, until both
    // target eigenvalues are recovered or the 10n attempt budget runs out
    Rng rng(seed + 1);
    std::vector<std::pair<cplx, double>> disks;
    for (std::size_t i = 0; i < 7; ++i) {
      double rad = 0.0;
      for (std::size_t j = 0; j < 7; ++j)
        if (j != i) rad += std::abs(run.A(i, j));
      disks.emplace_back(run.A(i, i), rad);
    }
    bool got5 = false, got7 = false;
    int attempts = 0;
    std::vector<cplx> found;
    while ((!got5 || !got7) && attempts < 70) {
      ++attempts;
      const std::size_t di = static_cast<std::size_t>(rng.next_unit() * 7.0) % 7;
      const double rr = disks[di].second * std::sqrt(rng.next_unit());
      const double th = 2.0 * 3.14159265358979323846 * rng.next_unit();
      const cplx q = disks[di].first + cplx{rr * std::cos(th), rr * std::sin(th)};
      bool skip = false;
      for (cplx f : found)
        if (std::abs(f - q) < 1e-6) skip = true;
      if (skip) continue;
      PowerResult pr;
      try {
        pr = shifted_inverse_power(run.A, q, rng.next_cvector(7), cfg);
      } catch (const Error&) {
        continue;
      }
      if (pr.status != PowerStatus::converged) continue;
      found.push_back(pr.pair.lambda);
      auto matches = [&](cplx t) { return std::abs(pr.pair.lambda - t) <= tol; };
      if (matches(l5) && !got5) {
        got5 = true;
        EigRecord r = power_record(run, "inverse_lambda5", "inverse", pr);
        run.check_target(r, l5, tol, false);
        run.add(r);
      } else if (matches(l7) && !got7) {
        got7 = true;
        EigRecord r = power_record(run, "inverse_lambda7", "inverse", pr);
        run.check_target(r, l7, tol, false);
        run.add(r);
      }
    }
    run.rep.notes.push_back("shifted inverse sweep used " + std::to_string(attempts) +
                            " random shifts to recover lambda_5 and lambda_7");
    if (!got5 || !got7) {
      EigRecord r;
      r.method = "inverse";
      r.label = "inverse_sweep_incomplete";
      r.note = "shift sweep budget exhausted before recovering both eigenvalues";
      r.pass = false;
      run.add(r);
    }
  }
  {
    SpectrumResult sp = full_spectrum(run.A, cfg);
    // the seven printed eigenvalues, real-part descending
    const cplx printed[7] = {{1.5181, -1.2564}, {0.9604, -2.2206}, {0.9394, -0.6078},
                             {0.8326, 2.0418},  {-0.7583, -1.154}, {-0.8380, 0.1978},
                             {-1.3201, 1.2896}};
    for (int i = 0; i < 7; ++i) {
      EigRecord r;
      r.method = "full_spectrum";
      r.label = "full_spectrum_lambda" + std::to_string(i + 1);
      std::size_t best = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < sp.pairs.size(); ++k)
        if (std::abs(sp.pairs[k].lambda - printed[i]) < bd) {
          bd = std::abs(sp.pairs[k].lambda - printed[i]);
          best = k;
        }
      if (!sp.pairs.empty()) {
        r.lambda = sp.pairs[best].lambda;
        r.residual = residual(run.A, r.lambda, sp.pairs[best].phi);
      }
      run.attach_ranks(r);
      run.check_target(r, printed[i], tol, false);
      run.add(r);
    }
    for (const std::string& d : sp.diagnostics) run.rep.notes.push_back("full_spectrum: " + d);
  }
  return run.rep;
}

ExperimentReport run_e2(const std::string& out_dir, std::uint64_t seed) {
  Runner run;
  run.rep.experiment_id = "e2";
  run.rep.matrix_description = "Hessenberg D{alpha} families, n = 15";
  run.rep.seed = seed;
  run.out_dir = out_dir;

  struct Family {
    std::string name;
    AlphaSequence alpha;
    cplx top3[3];        // modulus-descending targets
    cplx largest_real;   // dynamical target, largest real part
    cplx smallest_real;  // dynamical target, smallest real part
  };
  const std::size_t n = 15;
  std::vector<Family> families;
  families.push_back({"exp-k2",
                      AlphaSequence::exp_minus_k_squared(n),
                      {cplx{-0.0233, 0}, cplx{0.0059, 0}, cplx{-0.00069, 0}},
                      cplx{0.0059, 0},
                      cplx{-0.0233, 0}});
  families.push_back({"k2-factorial",
                      AlphaSequence::inverse_factorial_k_squared(n),
                      {cplx{-0.0417, 0}, cplx{6.58e-5, 0}, cplx{1.81e-8, 0}},
                      cplx{6.58e-5, 0},
                      cplx{-0.0417, 0}});

  for (const Family& fam : families) {
    const CMatrix D = hessenberg(fam.alpha, n);
    run.A = D;
    run.oracle = qr_spectrum(D);
    if (!out_dir.empty()) write_matrix_file(out_dir + "/e2_" + fam.name + "_matrix.json", D);

    // The carrier of the reference values is the QR path: these matrices are
    // shift-like with machine-precision pseudospectra engulfing the tiny
    // eigenvalues, so similarity-based QR (graded backward error) resolves
    // them while vector iterations bottom out on pseudo-eigenpairs.
    {
      std::vector<cplx> top(run.oracle.eigenvalues);
      std::sort(top.begin(), top.end(),
                [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
      for (int k = 0; k < 3; ++k) {
        EigRecord r;
        r.method = "oracle";
        r.label = fam.name + "_oracle_lambda" + std::to_string(k + 1);
        r.lambda = top[static_cast<std::size_t>(k)];
        run.attach_ranks(r);
        run.check_target(r, fam.top3[k], 0.05, true);
        run.add(r);
      }
    }

    // The eigenpairs are almost self-orthogonal (pairing condition 1e-26 and
    // below), so the flow runs in the right-side Rayleigh mode.
    SolverConfig fcfg;
    fcfg.seed = seed;
    fcfg.delta_tol = 1e-10;
    fcfg.max_time = 1e5;
    fcfg.right_side_only = true;

    auto solver_note = [&](EigRecord& r) {
      if (r.pass) return;
      if (r.has_oracle && r.oracle_delta <= 1e-6 * std::max(1.0, std::abs(r.lambda)))
        r.note += (r.note.empty() ? "" : "; ") +
                  std::string("agrees with the oracle to ~machine precision; the printed "
                              "reference value is not reproducible from the display-literal "
                              "matrix (see report notes)");
      else
        r.note += (r.note.empty() ? "" : "; ") +
                  std::string("vector iteration bottoms out on the machine-precision "
                              "pseudospectrum of this shift-like matrix; the oracle records "
                              "carry the reference values");
    };

    {
      FlowResult fr = solve_flow(D, fcfg);
      EigRecord r = flow_record(run, fam.name + "_flow_largest", fr);
      run.check_target(r, fam.largest_real, 0.05, true);
      solver_note(r);
      run.add(r);
    }
    {
      FlowResult fr = solve_flow_smallest(D, fcfg);
      EigRecord r = flow_record(run, fam.name + "_flow_smallest", fr);
      run.check_target(r, fam.smallest_real, 0.05, true);
      solver_note(r);
      run.add(r);
    }

    // fixed-point route: the dominant (largest-modulus) eigenvalue by plain
    // power iteration with the tolerance escalation the reference uses. The
    // sub-dominant eigenvalues of these families sit inside the machine
    // pseudospectrum (inverse iteration reaches residual < 1e-15 at ANY shift
    // in the central region), so no residual-based iterate can certify them
    // and the oracle records above carry those values.
    Rng rng(seed + 7);
    {
      SolverConfig pcfg;
      pcfg.seed = seed;
      pcfg.delta_tol = 1e-10;
      pcfg.max_iter = 5000;
      PowerResult pr = best_effort(power_iterate(D, rng.next_cvector(n), pcfg), D,
                                   pcfg.pairing_floor);
      EigRecord r = power_record(run, fam.name + "_power_lambda1", "power", pr);
      run.check_target(r, fam.top3[0], 0.05, true);
      solver_note(r);
      run.add(r);
    }
  }
  run.rep.notes.push_back(
      "sub-dominant E2 eigenvalues are certified by the QR oracle only: the matrices are "
      "near-shift (Jordan-like) and their 1e-16-pseudospectra engulf the tiny eigenvalues, "
      "so any residual-stopped vector iteration accepts pseudo-eigenpairs there");

  // both candidate readings, for the record (see the experiment notes)
  {
    AlphaSequence plain_exp = AlphaSequence::exp_minus_k_squared(n);
    for (auto& v : plain_exp.values) v = std::abs(v);
    run.rep.notes.push_back(
        spectrum_note("exp-k2 alternate (plain-sign) reading:", hessenberg(plain_exp, n)));
    AlphaSequence sq = AlphaSequence::custom_values([] {
      std::vector<cplx> v(15);
      for (std::size_t j = 1; j <= 15; ++j) {
        double f = 1.0;
        for (std::size_t i = 2; i <= j + 1; ++i) f /= static_cast<double>(i * i);
        v[j - 1] = ((j % 2 == 1) ? 1.0 : -1.0) * f;
      }
      return v;
    }());
    run.rep.notes.push_back(
        spectrum_note("1/(k!)^2 alternate reading:", hessenberg(sq, n)));
    run.rep.notes.push_back(
        "built-in sequences start at k = 2 with alternating signs (the k = 1 head has "
        "|alpha| = 1 for the factorial family); validated against the reference "
        "k2-factorial eigenvalues");
  }
  return run.rep;
}

ExperimentReport run_e3(const std::string& out_dir, std::uint64_t seed) {
  Runner run;
  run.rep.experiment_id = "e3";
  run.rep.matrix_description = "truncated Swanson H_theta, N = 7, theta = 0.4";
  run.rep.seed = seed;
  run.out_dir = out_dir;
  const CMatrix H = swanson(SwansonParams{7, 0.4});
  run.A = H;
  run.oracle = qr_spectrum(H);
  if (!out_dir.empty()) write_matrix_file(out_dir + "/e3_matrix.json", H);

  // entrywise agreement with the reference matrix to 3 significant figures
  {
    const CMatrix P = printed_swanson();
    double worst = 0.0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        const double mag = std::abs(P(i, j));
        const double delta = std::abs(H(i, j) - P(i, j));
        if (mag > 0.0) worst = std::max(worst, delta / mag);
      }
    EigRecord r;
    r.method = "generator";
    r.label = "swanson_entrywise";
    r.note = "max relative entry deviation vs printed matrix: " + format_double(worst);
    r.pass = worst < 5e-3;  // 3 significant figures
    r.oracle_skip_reason = "structural check, no eigenvalue";
    run.add(r);
  }

  SolverConfig cfg;
  cfg.seed = seed;
  cfg.delta_tol = 1e-9;

  const double tol = 1e-6;
  auto mu = [](int k) { return cplx{(2.0 * (k - 1) + 1.0) / 2.0, 0.0}; };  // k = 1..7

  // dynamical route: largest by the plain flow, then a deflation chain walking
  // down the spectrum; smallest independently through -A
  {
    std::vector<BiorthoPair> found;
    for (int step = 0; step < 7; ++step) {
      FlowResult fr;
      if (found.empty()) {
        fr = solve_flow(H, cfg);
      } else {
        auto [p0, q0] = deflated_initials(found, 7, seed + step);
        fr = solve_flow_from(H, p0, q0, cfg, found);
      }
      EigRecord r = flow_record(run, "flow_chain_" + std::to_string(step + 1), fr);
      run.check_target(r, mu(7 - step), tol, false);
      r.pass = r.pass && std::abs(fr.pair.lambda.imag()) < tol;
      run.add(r);
      if (fr.status != FlowStatus::converged) break;
      found.push_back(refine_pair(H, fr.pair));
    }
  }
  {
    FlowResult fr = solve_flow_smallest(H, cfg);
    EigRecord r = flow_record(run, "flow_smallest", fr);
    run.check_target(r, mu(1), tol, false);
    r.pass = r.pass && std::abs(fr.pair.lambda.imag()) < tol;
    run.add(r);
  }

  // fixed-point route: shifted inverse power sweep collecting all seven
  {
    SpectrumResult sp = full_spectrum(H, cfg);
    for (int k = 1; k <= 7; ++k) {
      EigRecord r;
      r.method = "full_spectrum";
      r.label = "power_mu" + std::to_string(k);
      std::size_t best = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < sp.pairs.size(); ++i)
        if (std::abs(sp.pairs[i].lambda - mu(k)) < bd) {
          bd = std::abs(sp.pairs[i].lambda - mu(k));
          best = i;
        }
      if (!sp.pairs.empty()) {
        r.lambda = sp.pairs[best].lambda;
        r.residual = residual(H, r.lambda, sp.pairs[best].phi);
      }
      run.attach_ranks(r);
      run.check_target(r, mu(k), tol, false);
      r.pass = r.pass && std::abs(r.lambda.imag()) < tol;
      run.add(r);
    }
    for (const std::string& d : sp.diagnostics) run.rep.notes.push_back("full_spectrum: " + d);
  }
  return run.rep;
}

}  // namespace

CMatrix swanson_printed_reference() { return printed_swanson(); }

ExperimentReport run_experiment(const std::string& id, const std::string& out_dir,
                                std::uint64_t seed, bool deterministic) {
  ExperimentReport rep;
  if (id == "e1")
    rep = run_e1(out_dir, seed);
  else if (id == "e2")
    rep = run_e2(out_dir, seed);
  else if (id == "e3")
    rep = run_e3(out_dir, seed);
  else
    throw Error("unknown experiment id: " + id + " (expected e1|e2|e3)");
  if (!out_dir.empty())
    write_text_file(out_dir + "/" + id + "_report.json", report_to_json(rep, deterministic));
  return rep;
}

std::string report_to_json(const ExperimentReport& rep, bool deterministic) {
  using nlohmann::json;
  json j;
  j["experiment_id"] = rep.experiment_id;
  j["matrix"] = rep.matrix_description;
  j["seed"] = rep.seed;
  if (!deterministic) {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
  json records = json::array();
  for (const EigRecord& r : rep.records) {
    json e;
    e["method"] = r.method;
    e["label"] = r.label;
    e["lambda_re"] = format_double(r.lambda.real());
    e["lambda_im"] = format_double(r.lambda.imag());
    e["residual"] = format_double(r.residual);
    e["iterations_or_time"] = format_double(r.iterations_or_time);
    if (r.has_oracle) {
      e["oracle_re"] = format_double(r.oracle_lambda.real());
      e["oracle_im"] = format_double(r.oracle_lambda.imag());
      e["oracle_delta"] = format_double(r.oracle_delta);
      e["rank_by_real_part"] = r.rank_by_real;
      e["rank_by_modulus"] = r.rank_by_modulus;
    } else {
      e["oracle_skip_reason"] =
          r.oracle_skip_reason.empty() ? "no oracle comparison" : r.oracle_skip_reason;
    }
    if (r.has_target) {
      e["target_re"] = format_double(r.target.real());
      e["target_im"] = format_double(r.target.imag());
      e["tolerance"] = format_double(r.tolerance);
      e["tolerance_kind"] = r.tolerance_relative ? "relative" : "absolute";
    }
    e["pass"] = r.pass;
    if (!r.note.empty()) e["note"] = r.note;
    records.push_back(e);
  }
  j["records"] = records;
  j["notes"] = rep.notes;
  j["all_passed"] = rep.all_passed();
  return j.dump(2) + "\n";
}

}  // namespace bieig
