// bieig: generate test matrices, run the flow / fixed-point eigensolvers,
// reproduce the e1/e2/e3 experiment suites, query the QR oracle, plot traces.
//
// Exit codes: 0 success/converged, 2 no convergence (iteration/time cap),
// 3 breakdown, dominance tie, or pairing collapse, 4 I/O or validation error.

#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bieig/experiments.hpp"
#include "bieig/flow.hpp"
#include "bieig/generators.hpp"
#include "bieig/linalg.hpp"
#include "bieig/oracle.hpp"
#include "bieig/power.hpp"
#include "bieig/rng.hpp"
#include "bieig/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoConvergence = 2;
constexpr int kExitBreakdown = 3;
constexpr int kExitIo = 4;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("BIORTHO_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw bieig::Error("BIORTHO_SEED is not an integer");
    }
  }
  return cli_seed;
}

std::string metadata_path(const std::string& out) { return out + ".meta.json"; }

int cmd_generate(const std::string& kind, std::size_t n, std::uint64_t seed, double theta,
                 const std::string& seq, const std::string& out) {
  using namespace bieig;
  CMatrix A;
  std::string meta;
  if (kind == "e1") {
    A = e1_fixture().A;
    meta = "{\"kind\":\"e1\",\"n\":7}\n";
  } else if (kind == "random") {
    A = random_complex(n, seed);
    meta = "{\"kind\":\"random\",\"n\":" + std::to_string(n) +
           ",\"seed\":" + std::to_string(seed) + "}\n";
  } else if (kind == "hessenberg") {
    AlphaSequence alpha;
    if (seq == "exp-k2")
      alpha = AlphaSequence::exp_minus_k_squared(n);
    else if (seq == "k2-factorial")
      alpha = AlphaSequence::inverse_factorial_k_squared(n);
    else
      throw Error("unknown --seq (expected exp-k2 or k2-factorial)");
    A = hessenberg(alpha, n);
    meta = "{\"kind\":\"hessenberg\",\"n\":" + std::to_string(n) + ",\"seq\":\"" + seq +
           "\",\"alpha0\":" + format_double(alpha.alpha0.real()) +
           ",\"convention\":\"sequence starts at k=2 with alternating signs; validated "
           "against the reference spectra\"}\n";
  } else if (kind == "swanson") {
    A = swanson(SwansonParams{n, theta});
    meta = "{\"kind\":\"swanson\",\"n\":" + std::to_string(n) +
           ",\"theta\":" + format_double(theta) +
           ",\"convention\":\"standard ladder sqrt(k-1); T = exp(-i theta/2 (a^2-(a+)^2)); "
           "pinned by the printed N=7, theta=0.4 matrix\"}\n";
  } else {
    throw Error("unknown generate kind: " + kind);
  }
  write_matrix_file(out, A);
  write_text_file(metadata_path(out), meta);
  std::cout << "wrote " << out << " (n = " << A.order() << ") and " << metadata_path(out)
            << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& matrix_path, const std::string& method, double tol,
              std::uint64_t max_iter, double max_time, std::uint64_t seed,
              const std::string& mode, const std::string& shift_str,
              const std::vector<std::string>& deflate_paths, const std::string& trace_path,
              const std::string& out_path) {
  using namespace bieig;
  const CMatrix A = read_matrix_file(matrix_path);
  SolverConfig cfg;
  cfg.delta_tol = tol;
  cfg.max_iter = max_iter;
  cfg.max_time = max_time;
  cfg.ode.max_time = max_time;
  cfg.seed = seed;

  std::vector<BiorthoPair> found;
  for (const std::string& p : deflate_paths) found.push_back(pair_result_from_file(p));

  auto emit = [&](const BiorthoPair& pair, const ConvergenceTrace& trace,
                  const std::string& status) {
    if (!trace_path.empty()) write_trace_file(trace_path, trace);
    if (!out_path.empty()) write_pair_result_file(out_path, pair, A, status, method);
    std::cout << "lambda = " << format_double(pair.lambda.real()) << " + "
              << format_double(pair.lambda.imag()) << "i  [" << status << "]\n";
  };

  if (method == "flow") {
    FlowResult r;
    if (found.empty()) {
      r = (mode == "smallest") ? solve_flow_smallest(A, cfg) : solve_flow(A, cfg);
    } else {
      if (mode == "smallest") {
        // smallest real part: flow on -A with negated deflation targets
        CMatrix nA = negate(A);
        std::vector<BiorthoPair> nfound;
        for (const BiorthoPair& p : found)
          nfound.push_back(BiorthoPair{-p.lambda, p.phi, p.psi});
        auto [p0, q0] = deflated_initials(nfound, A.order(), cfg.seed);
        r = solve_flow_from(nA, p0, q0, cfg, nfound);
        r.pair.lambda = -r.pair.lambda;
        for (auto& s : r.trace.samples) s.lambda_est = -s.lambda_est;
      } else {
        auto [p0, q0] = deflated_initials(found, A.order(), cfg.seed);
        r = solve_flow_from(A, p0, q0, cfg, found);
      }
    }
    const char* status = r.status == FlowStatus::converged        ? "converged"
                         : r.status == FlowStatus::max_time       ? "max_time"
                         : r.status == FlowStatus::step_underflow ? "step_underflow"
                                                                  : "pairing_collapse";
    emit(r.pair, r.trace, status);
    if (r.status == FlowStatus::converged) return kExitOk;
    if (r.status == FlowStatus::max_time) return kExitNoConvergence;
    return kExitBreakdown;
  }

  if (method == "power" || method == "inverse") {
    Rng rng(seed);
    CVector x0 = rng.next_cvector(A.order());
    PowerResult r;
    if (method == "power") {
      if (mode == "smallest")
        throw Error("--mode smallest applies to the flow method (power targets the "
                    "largest modulus)");
      r = power_iterate(A, x0, cfg, found);
    } else {
      if (shift_str.empty()) throw Error("--shift re,im is required for method inverse");
      const auto comma = shift_str.find(',');
      if (comma == std::string::npos) throw Error("--shift expects re,im");
      const cplx q{std::stod(shift_str.substr(0, comma)),
                   std::stod(shift_str.substr(comma + 1))};
      r = shifted_inverse_power(A, q, x0, cfg, found);
    }
    const char* status = r.status == PowerStatus::converged      ? "converged"
                         : r.status == PowerStatus::max_iter     ? "max_iter"
                         : r.status == PowerStatus::dominance_tie ? "dominance_tie"
                                                                  : "breakdown";
    emit(r.pair, r.trace, status);
    if (r.status == PowerStatus::converged) return kExitOk;
    if (r.status == PowerStatus::max_iter) return kExitNoConvergence;
    return kExitBreakdown;
  }

  throw bieig::Error("unknown method: " + method);
}

int cmd_experiment(const std::string& id, const std::string& out_dir, std::uint64_t seed,
                   bool deterministic) {
  using namespace bieig;
  ExperimentReport rep = run_experiment(id, out_dir, seed, deterministic);
  int passed = 0;
  for (const EigRecord& r : rep.records)
    if (r.pass) ++passed;
  std::cout << "experiment " << id << ": " << passed << "/" << rep.records.size()
            << " records passed\n";
  for (const EigRecord& r : rep.records)
    if (!r.pass)
      std::cout << "  FAIL " << r.label << ": lambda = (" << format_double(r.lambda.real())
                << ", " << format_double(r.lambda.imag()) << ")"
                << (r.note.empty() ? "" : "  " + r.note) << "\n";
  return rep.all_passed() ? kExitOk : kExitNoConvergence;
}

int cmd_oracle(const std::string& matrix_path, const std::string& out_path) {
  using namespace bieig;
  const CMatrix A = read_matrix_file(matrix_path);
  SpectralData spec = qr_spectrum(A);
  const std::string text = spectrum_to_json(spec);
  if (!out_path.empty())
    write_text_file(out_path, text);
  else
    std::cout << text;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
    std::cout << "lambda_" << (i + 1) << " = " << format_double(spec.eigenvalues[i].real())
              << " + " << format_double(spec.eigenvalues[i].imag()) << "i"
              << (spec.flags[i].converged ? "" : "  [unconverged]")
              << (spec.flags[i].defective ? "  [defective]" : "") << "\n";
  return spec.all_converged() ? kExitOk : kExitNoConvergence;
}

int cmd_plot(const std::string& trace_path, const std::string& out_path) {
  using namespace bieig;
  ConvergenceTrace tr = trace_from_file(trace_path);
  write_text_file(out_path, trace_to_svg(tr));
  std::cout << "wrote " << out_path << " (" << tr.samples.size() << " samples)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biorthogonal eigensolvers for dense non-Hermitian matrices"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a matrix JSON file plus metadata");
  std::string gen_kind, gen_seq = "exp-k2", gen_out = "matrix.json";
  std::size_t gen_n = 7;
  std::uint64_t gen_seed = 1;
  double gen_theta = 0.4;
  gen->add_option("kind", gen_kind, "e1 | random | hessenberg | swanson")->required();
  gen->add_option("--n", gen_n, "matrix order");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--theta", gen_theta, "swanson non-Hermiticity parameter");
  gen->add_option("--seq", gen_seq, "hessenberg sequence: exp-k2 | k2-factorial");
  gen->add_option("--out", gen_out, "output path")->required();

  // solve
  auto* so = app.add_subcommand("solve", "run a solver on a matrix file");
  std::string so_matrix, so_method = "flow", so_mode = "largest", so_shift, so_trace, so_out;
  std::vector<std::string> so_deflate;
  double so_tol = 1e-8, so_max_time = 1e4;
  std::uint64_t so_max_iter = 100000, so_seed = 1;
  so->add_option("matrix", so_matrix, "matrix JSON path")->required();
  so->add_option("--method", so_method, "flow | power | inverse")->required();
  so->add_option("--tol", so_tol, "stopping residual delta_tol");
  so->add_option("--max-iter", so_max_iter, "iteration cap (power family)");
  so->add_option("--max-time", so_max_time, "flow time cap");
  so->add_option("--seed", so_seed, "seed for the random start");
  so->add_option("--mode", so_mode, "largest | smallest (flow real-part target)");
  so->add_option("--shift", so_shift, "re,im shift (inverse method)");
  so->add_option("--deflate", so_deflate, "result file of an already-found pair (repeatable)");
  so->add_option("--trace", so_trace, "write the convergence trace (JSON lines)");
  so->add_option("--out", so_out, "write the bi-orthogonal pair result JSON");

  // experiment
  auto* ex = app.add_subcommand("experiment", "run a scripted experiment end to end");
  std::string ex_id, ex_out = ".";
  std::uint64_t ex_seed = 1;
  bool ex_det = false;
  ex->add_option("id", ex_id, "e1 | e2 | e3")->required();
  ex->add_option("--out-dir", ex_out, "output directory for traces and the report");
  ex->add_option("--seed", ex_seed, "seed");
  ex->add_flag("--deterministic", ex_det, "omit timestamps for byte-identical reports");

  // oracle
  auto* orc = app.add_subcommand("oracle", "full spectrum via the QR reference path");
  std::string orc_matrix, orc_out;
  orc->add_option("matrix", orc_matrix, "matrix JSON path")->required();
  orc->add_option("--out", orc_out, "spectrum output path (stdout if omitted)");

  // plot
  auto* pl = app.add_subcommand("plot", "render a trace file as an SVG");
  std::string pl_trace, pl_out = "trace.svg";
  pl->add_option("trace", pl_trace, "trace JSON-lines path")->required();
  pl->add_option("--out", pl_out, "SVG output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_kind, gen_n, gen_seed, gen_theta, gen_seq, gen_out);
    if (so->parsed())
      return cmd_solve(so_matrix, so_method, so_tol, so_max_iter, so_max_time,
                       effective_seed(so_seed), so_mode, so_shift, so_deflate, so_trace, so_out);
    if (ex->parsed()) return cmd_experiment(ex_id, ex_out, effective_seed(ex_seed), ex_det);
    if (orc->parsed()) return cmd_oracle(orc_matrix, orc_out);
    if (pl->parsed()) return cmd_plot(pl_trace, pl_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
