#pragma once

#include <string>

#include "nqpcd/dense.hpp"

namespace nqpcd::io {

/// Text formats, fixed as a compatibility contract.
///
/// Matrix: line 1 holds `rows cols` as decimal integers, then `rows` lines
/// of `cols` space-separated decimals. Vector: line 1 holds `len`, line 2
/// the entries. Decimals use shortest round-trip formatting, UTF-8, "\n"
/// line endings, so save followed by load is the identity bit-for-bit.
///
/// Loaders throw std::runtime_error with "path:line: message" on malformed
/// headers, entry count mismatches, and non-finite entries.

void save_matrix(const std::string& path, const DenseMatrix& m);
DenseMatrix load_matrix(const std::string& path);

void save_vector(const std::string& path, const Vector& v);
Vector load_vector(const std::string& path);

/// Shortest round-trip decimal for a finite double.
std::string format_double(double value);

}  // namespace nqpcd::io
