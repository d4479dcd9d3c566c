#pragma once

#include <string>

#include <json.hpp>

#include "numrad/block_ops.hpp"
#include "numrad/numerical_range.hpp"
#include "numrad/report.hpp"
#include "numrad/types.hpp"

namespace numrad {

using ordered_json = nlohmann::ordered_json;

/// Matrix file schema: {"rows": n, "cols": m, "entries": [[re, im], ...]},
/// entries row-major. Parsing round-trips doubles bit-exactly.
ordered_json matrix_to_json(const CMatrix& M);
CMatrix matrix_from_json(const ordered_json& j);

/// Block matrix schema: {"blockRows": n, "blockDim": d, "blocks": [[m, ...], ...]}.
ordered_json block_to_json(const BlockMatrix& T);
BlockMatrix block_from_json(const ordered_json& j);

CMatrix read_matrix_file(const std::string& path);
BlockMatrix read_block_file(const std::string& path);

ordered_json suite_report_to_json(const SuiteReport& rep);
/// One row per (trial, bound_id):
/// trial,bound_id,lhs,rhs,margin,scale,hypothesis_residual,status
std::string suite_report_to_csv(const SuiteReport& rep);

/// CSV "theta,re,im", one row per support point.
std::string boundary_to_csv(const RangeBoundary& rb);

std::string read_text_file(const std::string& path);

/// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace numrad
