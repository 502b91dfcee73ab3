#include "bieig/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bieig/linalg.hpp"

namespace bieig {

namespace {

using nlohmann::json;

json vector_to_j(const CVector& x) {
  json re = json::array(), im = json::array();
  for (const cplx& v : x) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"re", re}, {"im", im}};
}

CVector vector_from_j(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size()) throw Error("vector json: re/im size mismatch");
  CVector x(re.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = cplx{re[i].get<double>(), im[i].get<double>()};
  if (!all_finite(x)) throw Error("vector json: non-finite entries");
  return x;
}

// json emission with pinned float formatting
std::string dump17(const json& j) {
  switch (j.type()) {
    case json::value_t::number_float:
      return format_double(j.get<double>());
    case json::value_t::array: {
      std::string out = "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",";
        first = false;
        out += dump17(v);
      }
      return out + "]";
    }
    case json::value_t::object: {
      std::string out = "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        first = false;
        out += json(it.key()).dump() + ":" + dump17(it.value());
      }
      return out + "}";
    }
    default:
      return j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string matrix_to_json(const CMatrix& A) {
  const std::size_t n = A.order();
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json rrow = json::array(), irow = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      rrow.push_back(A(i, j).real());
      irow.push_back(A(i, j).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  json j{{"n", n}, {"re", re}, {"im", im}};
  return dump17(j) + "\n";
}

CMatrix matrix_from_json(const std::string& text) {
  json j = json::parse(text);
  const std::size_t n = j.at("n").get<std::size_t>();
  if (n == 0) throw Error("matrix json: n must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != n || im.size() != n) throw Error("matrix json: row count != n");
  CMatrix A(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (re[i].size() != n || im[i].size() != n) throw Error("matrix json: column count != n");
    for (std::size_t jj = 0; jj < n; ++jj)
      A(i, jj) = cplx{re[i][jj].get<double>(), im[i][jj].get<double>()};
  }
  if (!all_finite(A)) throw Error("matrix json: non-finite entries");
  return A;
}

void write_matrix_file(const std::string& path, const CMatrix& A) {
  write_text_file(path, matrix_to_json(A));
}

CMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(read_text_file(path));
}

std::string vector_to_json(const CVector& x) { return dump17(vector_to_j(x)); }

CVector vector_from_json_text(const std::string& text) {
  return vector_from_j(json::parse(text));
}

std::string pair_result_to_json(const BiorthoPair& pair, const CMatrix& A,
                                const std::string& status, const std::string& method) {
  json j;
  j["lambda_re"] = pair.lambda.real();
  j["lambda_im"] = pair.lambda.imag();
  j["phi"] = json::parse(vector_to_json(pair.phi));
  j["psi"] = json::parse(vector_to_json(pair.psi));
  j["residual_phi"] = residual(A, pair.lambda, pair.phi);
  j["residual_psi"] = residual(adjoint(A), std::conj(pair.lambda), pair.psi);
  j["status"] = status;
  j["method"] = method;
  return dump17(j) + "\n";
}

BiorthoPair pair_result_from_file(const std::string& path) {
  json j = json::parse(read_text_file(path));
  BiorthoPair p;
  p.lambda = cplx{j.at("lambda_re").get<double>(), j.at("lambda_im").get<double>()};
  p.phi = vector_from_j(j.at("phi"));
  p.psi = vector_from_j(j.at("psi"));
  return p;
}

void write_pair_result_file(const std::string& path, const BiorthoPair& pair, const CMatrix& A,
                            const std::string& status, const std::string& method) {
  write_text_file(path, pair_result_to_json(pair, A, status, method));
}

std::string trace_to_json_lines(const ConvergenceTrace& trace) {
  std::string out;
  for (const ConvergencePoint& p : trace.samples) {
    out += "{\"step\":" + format_double(p.t_or_iter) +
           ",\"lambda_re\":" + format_double(p.lambda_est.real()) +
           ",\"lambda_im\":" + format_double(p.lambda_est.imag()) +
           ",\"residual\":" + format_double(std::max(p.residual_phi, p.residual_psi)) + "}\n";
  }
  return out;
}

void write_trace_file(const std::string& path, const ConvergenceTrace& trace) {
  write_text_file(path, trace_to_json_lines(trace));
}

ConvergenceTrace trace_from_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  ConvergenceTrace tr;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    ConvergencePoint p;
    p.t_or_iter = j.at("step").get<double>();
    p.lambda_est = cplx{j.at("lambda_re").get<double>(), j.at("lambda_im").get<double>()};
    p.residual_phi = j.at("residual").get<double>();
    p.residual_psi = p.residual_phi;
    tr.samples.push_back(p);
  }
  return tr;
}

std::string spectrum_to_json(const SpectralData& spec) {
  json eigs = json::array();
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    json e;
    e["re"] = spec.eigenvalues[i].real();
    e["im"] = spec.eigenvalues[i].imag();
    e["right"] = json::parse(vector_to_json(spec.right_vectors[i]));
    e["left"] = json::parse(vector_to_json(spec.left_vectors[i]));
    e["converged"] = spec.flags[i].converged;
    e["defective"] = spec.flags[i].defective;
    e["pairing"] = spec.flags[i].pairing;
    eigs.push_back(e);
  }
  bool real_spectrum = true;
  for (const cplx& l : spec.eigenvalues)
    if (std::abs(l.imag()) > 1e-8) real_spectrum = false;
  json j{{"n", spec.eigenvalues.size()}, {"eigenpairs", eigs}, {"real_spectrum", real_spectrum}};
  return dump17(j) + "\n";
}

void write_spectrum_file(const std::string& path, const SpectralData& spec) {
  write_text_file(path, spectrum_to_json(spec));
}

std::string trace_to_svg(const ConvergenceTrace& trace) {
  const int W = 900, H = 500, ML = 70, MR = 20, MT = 30, MB = 50;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (trace.samples.size() >= 2) {
    double t0 = trace.samples.front().t_or_iter, t1 = trace.samples.back().t_or_iter;
    if (t1 <= t0) t1 = t0 + 1.0;
    double lo = 0.0, hi = 0.0;
    for (const auto& p : trace.samples) {
      lo = std::min({lo, p.lambda_est.real(), p.lambda_est.imag()});
      hi = std::max({hi, p.lambda_est.real(), p.lambda_est.imag()});
    }
    if (hi <= lo) hi = lo + 1.0;
    auto px = [&](double t) { return ML + (t - t0) / (t1 - t0) * (W - ML - MR); };
    auto py = [&](double v) { return H - MB - (v - lo) / (hi - lo) * (H - MT - MB); };
    auto poly = [&](auto value, const char* color) {
      std::ostringstream pts;
      for (const auto& p : trace.samples)
        pts << px(p.t_or_iter) << "," << py(value(p)) << " ";
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
          << pts.str() << "\"/>\n";
    };
    poly([](const ConvergencePoint& p) { return p.lambda_est.real(); }, "#1f77b4");
    poly([](const ConvergencePoint& p) { return p.lambda_est.imag(); }, "#d62728");
    svg << "<text x=\"" << ML << "\" y=\"20\" font-size=\"13\">lambda(t): re (blue), im (red);"
        << " t in [" << format_double(t0) << ", " << format_double(t1) << "]</text>\n";
    svg << "<text x=\"10\" y=\"" << py(lo) << "\" font-size=\"11\">" << format_double(lo)
        << "</text>\n";
    svg << "<text x=\"10\" y=\"" << py(hi) + 4 << "\" font-size=\"11\">" << format_double(hi)
        << "</text>\n";
  } else {
    svg << "<text x=\"20\" y=\"40\">trace has fewer than two samples</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bieig
