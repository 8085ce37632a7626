#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "nqpcd/matrix_io.hpp"
#include "nqpcd/rng.hpp"

using namespace nqpcd;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "nqpcd_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix round trip is exact") {
    SplitMix64 rng(404);
    DenseMatrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.next_normal() * 1e3;
    const auto path = temp_file("roundtrip.mat");
    io::save_matrix(path.string(), m);
    const DenseMatrix back = io::load_matrix(path.string());
    CHECK(back == m);

    // Re-serializing the loaded matrix reproduces the bytes.
    const auto path2 = temp_file("roundtrip2.mat");
    io::save_matrix(path2.string(), back);
    CHECK(read_text(path) == read_text(path2));
}

TEST_CASE("vector round trip is exact") {
    const Vector v{0.1, -2.5e-7, 3.0, 1e300};
    const auto path = temp_file("roundtrip.vec");
    io::save_vector(path.string(), v);
    CHECK(io::load_vector(path.string()) == v);
}

TEST_CASE("entry count mismatch names the line") {
    const auto path = temp_file("short_row.mat");
    write_text(path, "2 2\n1 2 3\n4\n");
    CHECK_THROWS_WITH_AS(io::load_matrix(path.string()),
                         doctest::Contains(":2: more entries"), std::runtime_error);

    const auto path2 = temp_file("missing_row.mat");
    write_text(path2, "2 2\n1 2\n");
    CHECK_THROWS_WITH_AS(io::load_matrix(path2.string()),
                         doctest::Contains(":3:"), std::runtime_error);
}

TEST_CASE("non-finite entries are rejected") {
    const auto path = temp_file("nan.mat");
    write_text(path, "1 2\n1 nan\n");
    CHECK_THROWS_WITH_AS(io::load_matrix(path.string()),
                         doctest::Contains("non-finite"), std::runtime_error);
    const auto path2 = temp_file("inf.vec");
    write_text(path2, "2\n1 inf\n");
    CHECK_THROWS_WITH_AS(io::load_vector(path2.string()),
                         doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("malformed headers are rejected") {
    const auto bad1 = temp_file("bad_header1.mat");
    write_text(bad1, "2\n1 2\n");
    CHECK_THROWS_AS(io::load_matrix(bad1.string()), std::runtime_error);

    const auto bad2 = temp_file("bad_header2.mat");
    write_text(bad2, "x 2\n1 2\n");
    CHECK_THROWS_WITH_AS(io::load_matrix(bad2.string()), doctest::Contains(":1:"),
                         std::runtime_error);

    const auto bad3 = temp_file("bad_header3.mat");
    write_text(bad3, "0 2\n");
    CHECK_THROWS_AS(io::load_matrix(bad3.string()), std::runtime_error);
}

TEST_CASE("trailing rows are rejected") {
    const auto path = temp_file("extra.mat");
    write_text(path, "1 2\n1 2\n3 4\n");
    CHECK_THROWS_WITH_AS(io::load_matrix(path.string()), doctest::Contains("more rows"),
                         std::runtime_error);
}

TEST_CASE("missing file reports the path") {
    CHECK_THROWS_WITH_AS(io::load_matrix("/nonexistent/nqpcd.mat"),
                         doctest::Contains("/nonexistent/nqpcd.mat"), std::runtime_error);
}

TEST_CASE("format_double is shortest round trip") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(-2.5e-7) == "-2.5e-07");
}

}
