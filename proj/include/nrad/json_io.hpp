#pragma once

// Matrix/vector files: {"dim": n, "entries": [[re, im], ...]} in row-major
// order. Writers emit 17 significant digits so values survive a round trip.

#include <filesystem>
#include <string>

#include "nrad/matrix_core.hpp"

namespace nrad {

/// printf-style "%.17g"; non-finite values become "null".
std::string format_double(double v);

std::string matrix_to_json(const ComplexMatrix& m);
std::string vector_to_json(const ComplexVector& v);

ComplexMatrix matrix_from_json(const std::string& text);
ComplexVector vector_from_json(const std::string& text);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nrad
