#include "nrad/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

std::string entries_to_json(const Complex* data, Eigen::Index count, Eigen::Index dim) {
  std::string out = "{\"dim\": " + std::to_string(dim) + ", \"entries\": [";
  for (Eigen::Index i = 0; i < count; ++i) {
    if (i > 0) out += ", ";
    out += "[" + format_double(data[i].real()) + ", " + format_double(data[i].imag()) + "]";
  }
  out += "]}";
  return out;
}

std::vector<Complex> parse_entries(const std::string& text, Eigen::Index& dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries") ||
      !doc["dim"].is_number_integer() || !doc["entries"].is_array())
    throw Error(ErrorCode::InvalidArgument, "expected an object with integer \"dim\" and array \"entries\"");
  dim = doc["dim"].get<Eigen::Index>();
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "\"dim\" must be >= 1");

  std::vector<Complex> entries;
  entries.reserve(doc["entries"].size());
  for (const auto& pair : doc["entries"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw Error(ErrorCode::InvalidArgument, "each entry must be a [re, im] number pair");
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return entries;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  check_square(m);
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> row_major = m;
  return entries_to_json(row_major.data(), row_major.size(), m.rows());
}

std::string vector_to_json(const ComplexVector& v) {
  check_vector(v);
  return entries_to_json(v.data(), v.size(), v.size());
}

ComplexMatrix matrix_from_json(const std::string& text) {
  Eigen::Index dim = 0;
  const auto entries = parse_entries(text, dim);
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim)
    throw Error(ErrorCode::InvalidArgument, "matrix needs dim^2 = " + std::to_string(dim * dim) + " entries");
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = entries[static_cast<std::size_t>(i * dim + j)];
  check_square(m);
  return m;
}

ComplexVector vector_from_json(const std::string& text) {
  Eigen::Index dim = 0;
  const auto entries = parse_entries(text, dim);
  if (static_cast<Eigen::Index>(entries.size()) != dim)
    throw Error(ErrorCode::InvalidArgument, "vector needs dim = " + std::to_string(dim) + " entries");
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = entries[static_cast<std::size_t>(i)];
  check_vector(v);
  return v;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_text_file(path));
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  write_text_file(path, matrix_to_json(m) + "\n");
}

}  // namespace nrad
