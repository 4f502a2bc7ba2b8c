#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "mdk/mdmatrix.hpp"

namespace mdk {

/// A matrix whose scalar mode is only known at run time (e.g. read from disk).
using AnyMatrix = std::variant<MDMatrix<ExactScalar>, MDMatrix<FloatScalar>>;

/// Parses the matrix document
///   { "n": int, "k": int, "mode": "exact" | "float",
///     "diagonals": { "<p>": ["<scalar>", ... n+1 entries], ... } }
/// Throws ParseError for malformed JSON, bad scalars, offsets |p| > n/k,
/// wrong diagonal lengths or nonzero coordinates past n - |p|k.
AnyMatrix parse_matrix(std::string_view text);
AnyMatrix read_matrix(const std::filesystem::path& path);

/// Canonical text: sorted keys, two-space indent, canonical scalar strings,
/// zero diagonals omitted, trailing newline. Equal matrices give identical
/// bytes.
template <Field F>
std::string format_matrix(const MDMatrix<F>& m);
std::string format_matrix(const AnyMatrix& m);

void write_matrix(const std::filesystem::path& path, const AnyMatrix& m);

std::string_view mode_of(const AnyMatrix& m);

}  // namespace mdk
