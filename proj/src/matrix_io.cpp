#include "nqpcd/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nqpcd::io {

namespace {

[[noreturn]] void parse_error(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

class LineParser {
public:
    LineParser(const std::string& path, std::size_t lineno, const std::string& line)
        : path_(path), lineno_(lineno), cur_(line.data()), end_(line.data() + line.size()) {}

    bool at_end() {
        skip_spaces();
        return cur_ == end_;
    }

    std::size_t next_count() {
        skip_spaces();
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(cur_, end_, v);
        if (ec != std::errc{} || p == cur_) parse_error(path_, lineno_, "expected an integer");
        cur_ = p;
        return v;
    }

    double next_double() {
        skip_spaces();
        double v = 0.0;
        auto [p, ec] = std::from_chars(cur_, end_, v);
        if (ec != std::errc{} || p == cur_) parse_error(path_, lineno_, "expected a number");
        cur_ = p;
        if (!std::isfinite(v)) parse_error(path_, lineno_, "non-finite entry");
        return v;
    }

private:
    void skip_spaces() {
        while (cur_ != end_ && *cur_ == ' ') ++cur_;
    }

    const std::string& path_;
    std::size_t lineno_;
    const char* cur_;
    const char* end_;
};

std::string read_line(std::ifstream& in, const std::string& path, std::size_t lineno) {
    std::string line;
    if (!std::getline(in, line)) parse_error(path, lineno, "unexpected end of file");
    if (!line.empty() && line.back() == '\r') parse_error(path, lineno, "expected \\n line endings");
    return line;
}

void expect_eof(std::ifstream& in, const std::string& path, std::size_t lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty()) parse_error(path, lineno, "more rows than the header declares");
    }
}

void write_row(std::ostream& out, const double* values, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        if (j > 0) out << ' ';
        out << format_double(values[j]);
    }
    out << '\n';
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return in;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, p);
}

void save_matrix(const std::string& path, const DenseMatrix& m) {
    auto out = open_out(path);
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) write_row(out, m.row(i).data(), m.cols());
    if (!out) throw std::runtime_error(path + ": write failed");
}

DenseMatrix load_matrix(const std::string& path) {
    auto in = open_in(path);
    std::size_t lineno = 1;
    LineParser header(path, lineno, read_line(in, path, lineno));
    const std::size_t rows = header.next_count();
    const std::size_t cols = header.next_count();
    if (!header.at_end()) parse_error(path, lineno, "trailing data after header");
    if (rows < 1 || cols < 1) parse_error(path, lineno, "rows and cols must be >= 1");

    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        ++lineno;
        const std::string line = read_line(in, path, lineno);
        LineParser p(path, lineno, line);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = p.next_double();
        if (!p.at_end()) parse_error(path, lineno, "more entries than the header declares");
    }
    expect_eof(in, path, lineno);
    return m;
}

void save_vector(const std::string& path, const Vector& v) {
    auto out = open_out(path);
    out << v.size() << '\n';
    write_row(out, v.data(), v.size());
    if (!out) throw std::runtime_error(path + ": write failed");
}

Vector load_vector(const std::string& path) {
    auto in = open_in(path);
    std::size_t lineno = 1;
    LineParser header(path, lineno, read_line(in, path, lineno));
    const std::size_t len = header.next_count();
    if (!header.at_end()) parse_error(path, lineno, "trailing data after header");
    if (len < 1) parse_error(path, lineno, "length must be >= 1");

    ++lineno;
    const std::string line = read_line(in, path, lineno);
    LineParser p(path, lineno, line);
    Vector v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = p.next_double();
    if (!p.at_end()) parse_error(path, lineno, "more entries than the header declares");
    expect_eof(in, path, lineno);
    return v;
}

}  // namespace nqpcd::io
