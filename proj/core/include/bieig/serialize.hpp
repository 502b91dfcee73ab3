#ifndef BIEIG_SERIALIZE_HPP
#define BIEIG_SERIALIZE_HPP

#include <optional>
#include <string>

#include "bieig/flow.hpp"
#include "bieig/oracle.hpp"
#include "bieig/power.hpp"
#include "bieig/types.hpp"

namespace bieig {

/// All writers emit floats with 17 significant digits (lossless double round
/// trip). Matrix schema: {"n": int, "re": [[...]], "im": [[...]]};
/// vector schema: {"re": [...], "im": [...]}.

std::string format_double(double v);  // %.17g

std::string matrix_to_json(const CMatrix& A);
CMatrix matrix_from_json(const std::string& text);
void write_matrix_file(const std::string& path, const CMatrix& A);
CMatrix read_matrix_file(const std::string& path);

std::string vector_to_json(const CVector& x);
CVector vector_from_json_text(const std::string& text);

/// Bi-orthogonal pair result file (lambda, phi, psi, residuals, status string).
std::string pair_result_to_json(const BiorthoPair& pair, const CMatrix& A,
                                const std::string& status, const std::string& method);
BiorthoPair pair_result_from_file(const std::string& path);
void write_pair_result_file(const std::string& path, const BiorthoPair& pair, const CMatrix& A,
                            const std::string& status, const std::string& method);

/// Convergence trace as JSON lines:
/// {"step": ..., "lambda_re": ..., "lambda_im": ..., "residual": ...}
std::string trace_to_json_lines(const ConvergenceTrace& trace);
void write_trace_file(const std::string& path, const ConvergenceTrace& trace);
ConvergenceTrace trace_from_file(const std::string& path);

/// Oracle spectrum file: eigenvalues sorted by descending real part plus flags.
std::string spectrum_to_json(const SpectralData& spec);
void write_spectrum_file(const std::string& path, const SpectralData& spec);

/// Minimal SVG plot of lambda(t) real/imag plus residual from a trace.
std::string trace_to_svg(const ConvergenceTrace& trace);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace bieig

#endif
