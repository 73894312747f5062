#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rbds/matrix.hpp"

namespace rbds::io {

enum class MatrixFormat { csv, rawbin };

/// Picks the format from a file extension: ".csv" -> csv, anything else
/// (".rbm", ".bin") -> rawbin.
MatrixFormat format_from_path(const std::filesystem::path& path);

/// Loads a dense matrix.
///
/// csv: first line "rows,cols", then `rows` lines of `cols` comma-separated
/// decimal numbers. rawbin: magic "RBDSMAT0", u64 rows, u64 cols, then
/// rows*cols little-endian f64 in row-major order.
///
/// Throws ParseError naming the offending row/column on malformed input and
/// ValidationError if any parsed value is non-finite.
Mat load_matrix(const std::filesystem::path& path, MatrixFormat format);
Mat load_matrix(const std::filesystem::path& path);

/// Saves a dense matrix; the save/load round trip is bit-exact for rawbin and
/// exact to the last decimal digit (17 significant digits) for csv.
void save_matrix(const Mat& m, const std::filesystem::path& path, MatrixFormat format);
void save_matrix(const Mat& m, const std::filesystem::path& path);

/// Labels sidecar: one 1-based integer class id per line.
std::vector<int> load_labels(const std::filesystem::path& path);
void save_labels(const std::vector<int>& labels, const std::filesystem::path& path);

LabeledDataset load_dataset(const std::filesystem::path& matrix_path,
                            const std::filesystem::path& labels_path);

} // namespace rbds::io
