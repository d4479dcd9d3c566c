#include "numrad/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "numrad/errors.hpp"

namespace numrad {

namespace {

double number_at(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return j.get<double>();
}

int positive_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw ParseError(std::string("expected a positive integer for ") + what);
  const long long v = j.get<long long>();
  if (v > 1 << 20) throw ParseError(std::string(what) + " is implausibly large");
  return static_cast<int>(v);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ordered_json matrix_to_json(const CMatrix& M) {
  ordered_json j;
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  ordered_json entries = ordered_json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index k = 0; k < M.cols(); ++k)
      entries.push_back({M(i, k).real(), M(i, k).imag()});
  j["entries"] = std::move(entries);
  return j;
}

CMatrix matrix_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix object must carry rows, cols and entries");
  const int rows = positive_int(j.at("rows"), "rows");
  const int cols = positive_int(j.at("cols"), "cols");
  const ordered_json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
    throw ParseError("entries must hold rows*cols [re, im] pairs");
  CMatrix M(rows, cols);
  size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k, ++idx) {
      const ordered_json& e = entries[idx];
      if (!e.is_array() || e.size() != 2) throw ParseError("each entry must be [re, im]");
      M(i, k) = cplx(number_at(e[0], "re"), number_at(e[1], "im"));
    }
  if (!all_finite(M)) throw ParseError("matrix entries must be finite");
  return M;
}

ordered_json block_to_json(const BlockMatrix& T) {
  ordered_json j;
  j["blockRows"] = T.n;
  j["blockDim"] = T.block_dim;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < T.n; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < T.n; ++k) row.push_back(matrix_to_json(T.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["blocks"] = std::move(rows);
  return j;
}

BlockMatrix block_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("blockRows") || !j.contains("blockDim") ||
      !j.contains("blocks"))
    throw ParseError("block matrix object must carry blockRows, blockDim and blocks");
  const int n = positive_int(j.at("blockRows"), "blockRows");
  const int d = positive_int(j.at("blockDim"), "blockDim");
  const ordered_json& rows = j.at("blocks");
  if (!rows.is_array() || rows.size() != static_cast<size_t>(n))
    throw ParseError("blocks must be an n x n grid");
  BlockMatrix T = make_blocks(n, d);
  for (int i = 0; i < n; ++i) {
    const ordered_json& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw ParseError("blocks must be an n x n grid");
    for (int k = 0; k < n; ++k) {
      CMatrix b = matrix_from_json(row[k]);
      if (b.rows() != d || b.cols() != d)
        throw ParseError("every block must be blockDim x blockDim");
      T.at(i, k) = std::move(b);
    }
  }
  return T;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {
ordered_json parse_file(const std::string& path) {
  const std::string text = read_text_file(path);
  ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError(path + " is not valid JSON");
  return j;
}
}  // namespace

CMatrix read_matrix_file(const std::string& path) { return matrix_from_json(parse_file(path)); }

BlockMatrix read_block_file(const std::string& path) { return block_from_json(parse_file(path)); }

ordered_json suite_report_to_json(const SuiteReport& rep) {
  ordered_json j;
  j["suite"] = rep.suite;
  j["trials"] = rep.trials;
  j["dim"] = rep.dim;
  j["seed"] = rep.seed;
  j["grid"] = rep.grid_points;
  j["violations"] = rep.violations;
  j["invalid"] = rep.invalid;
  j["min_margin"] = rep.min_margin;
  j["mean_margin"] = rep.mean_margin;
  j["tight_fraction"] = rep.tight_fraction;
  ordered_json per = ordered_json::array();
  for (const BoundStats& bs : rep.per_bound) {
    ordered_json b;
    b["bound_id"] = bs.bound_id;
    b["count"] = bs.count;
    b["violations"] = bs.violations;
    b["invalid"] = bs.invalid;
    b["min_margin"] = bs.min_margin;
    b["mean_margin"] = bs.mean_margin;
    b["tight_fraction"] = bs.tight_fraction;
    per.push_back(std::move(b));
  }
  j["per_bound"] = std::move(per);
  return j;
}

std::string suite_report_to_csv(const SuiteReport& rep) {
  std::string out = "trial,bound_id,lhs,rhs,margin,scale,hypothesis_residual,status\n";
  for (size_t k = 0; k < rep.trial_reports.size(); ++k)
    for (const BoundReport& r : rep.trial_reports[k]) {
      out += std::to_string(k);
      out += ',';
      out += r.bound_id;
      for (double v : {r.lhs, r.rhs, r.margin, r.scale, r.hypothesis_residual}) {
        out += ',';
        out += fmt17(v);
      }
      out += ',';
      out += !r.valid ? "invalid" : (r.holds ? "ok" : "violation");
      out += '\n';
    }
  return out;
}

std::string boundary_to_csv(const RangeBoundary& rb) {
  std::string out = "theta,re,im\n";
  for (size_t i = 0; i < rb.points.size(); ++i) {
    out += fmt17(rb.thetas[i]);
    out += ',';
    out += fmt17(rb.points[i].real());
    out += ',';
    out += fmt17(rb.points[i].imag());
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw Error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace numrad
