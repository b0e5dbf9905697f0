#include <filesystem>

#include <gtest/gtest.h>

#include "nrad/errors.hpp"
#include "nrad/json_io.hpp"
#include "test_support.hpp"

using namespace nrad;
using namespace nrad::test;

TEST(JsonIo, MatrixRoundTrip) {
  std::mt19937_64 rng(1);
  const ComplexMatrix m = random_matrix(rng, 4);
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
}

TEST(JsonIo, RowMajorLayout) {
  const ComplexMatrix m = matrix_from_json(R"({"dim": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]})");
  EXPECT_EQ(m, jordan());
  EXPECT_EQ(matrix_to_json(jordan()), R"({"dim": 2, "entries": [[0, 0], [1, 0], [0, 0], [0, 0]]})");
}

TEST(JsonIo, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "null");
}

TEST(JsonIo, VectorRoundTrip) {
  std::mt19937_64 rng(2);
  const ComplexVector v = random_vector(rng, 5);
  EXPECT_EQ(vector_from_json(vector_to_json(v)), v);
}

TEST(JsonIo, MalformedInput) {
  for (const char* text : {"not json", R"({"dim": 2})", R"({"dim": 2, "entries": [[1,0]]})",
                           R"({"dim": 0, "entries": []})", R"({"dim": 1, "entries": [[1]]})"}) {
    try {
      matrix_from_json(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument) << text;
    }
  }
}

TEST(JsonIo, Files) {
  const auto path = std::filesystem::temp_directory_path() / "nrad_json_io_test.json";
  write_matrix_file(path, jordan());
  EXPECT_EQ(read_matrix_file(path), jordan());
  std::filesystem::remove(path);
  try {
    read_matrix_file("/nonexistent/dir/m.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}
