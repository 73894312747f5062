#include "rbds/matrix_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace rbds::io {

namespace {

constexpr char kMagic[8] = {'R', 'B', 'D', 'S', 'M', 'A', 'T', '0'};

void write_u64_le(std::ostream& os, std::uint64_t v) {
    std::array<unsigned char, 8> b;
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t read_u64_le(std::istream& is) {
    std::array<unsigned char, 8> b{};
    is.read(reinterpret_cast<char*>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)]) << (8 * i);
    return v;
}

void write_f64_le(std::ostream& os, double d) {
    write_u64_le(os, std::bit_cast<std::uint64_t>(d));
}

double read_f64_le(std::istream& is) {
    return std::bit_cast<double>(read_u64_le(is));
}

double parse_field(const std::string& field, const std::filesystem::path& path,
                   std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end || begin == end) {
        throw ParseError(path.string() + ": cannot parse number at row " + std::to_string(row) +
                         ", column " + std::to_string(col) + " ('" + field + "')");
    }
    return value;
}

Mat load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");

    // header "rows,cols"
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
        throw ParseError(path.string() + ": header must be 'rows,cols', got '" + line + "'");
    }
    std::uint64_t rows = 0, cols = 0;
    rows = static_cast<std::uint64_t>(parse_field(line.substr(0, comma), path, 0, 0));
    cols = static_cast<std::uint64_t>(parse_field(line.substr(comma + 1), path, 0, 1));
    if (rows < 1 || cols < 1) {
        throw ParseError(path.string() + ": header declares a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
    }

    Mat m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::uint64_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) {
            throw ParseError(path.string() + ": expected " + std::to_string(rows) +
                             " data rows, file ends at row " + std::to_string(r + 1));
        }
        std::size_t pos = 0;
        for (std::uint64_t c = 0; c < cols; ++c) {
            std::size_t next = line.find(',', pos);
            if (c + 1 < cols && next == std::string::npos) {
                throw ParseError(path.string() + ": row " + std::to_string(r + 1) + " has " +
                                 std::to_string(c + 1) + " fields, expected " + std::to_string(cols));
            }
            const std::string field = (next == std::string::npos)
                                          ? line.substr(pos)
                                          : line.substr(pos, next - pos);
            m(static_cast<Index>(r), static_cast<Index>(c)) = parse_field(field, path, r + 1, c + 1);
            pos = (next == std::string::npos) ? line.size() : next + 1;
        }
        if (pos < line.size() && line.find_first_not_of(" \t\r", pos) != std::string::npos) {
            throw ParseError(path.string() + ": row " + std::to_string(r + 1) +
                             " has more than " + std::to_string(cols) + " fields");
        }
    }
    return m;
}

Mat load_rawbin(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) {
        throw ParseError(path.string() + ": bad or missing rawbin magic");
    }
    const std::uint64_t rows = read_u64_le(in);
    const std::uint64_t cols = read_u64_le(in);
    if (!in || rows < 1 || cols < 1 || rows > (1ULL << 32) || cols > (1ULL << 32)) {
        throw ParseError(path.string() + ": bad rawbin dimensions");
    }
    Mat m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::uint64_t c = 0; c < cols; ++c) {
            m(static_cast<Index>(r), static_cast<Index>(c)) = read_f64_le(in);
        }
    }
    if (!in) throw ParseError(path.string() + ": truncated rawbin payload");
    return m;
}

} // namespace

MatrixFormat format_from_path(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? MatrixFormat::csv : MatrixFormat::rawbin;
}

Mat load_matrix(const std::filesystem::path& path, MatrixFormat format) {
    Mat m = (format == MatrixFormat::csv) ? load_csv(path) : load_rawbin(path);
    validate_matrix(m, path.string());
    return m;
}

Mat load_matrix(const std::filesystem::path& path) {
    return load_matrix(path, format_from_path(path));
}

void save_matrix(const Mat& m, const std::filesystem::path& path, MatrixFormat format) {
    validate_matrix(m, "save_matrix(" + path.string() + ")");
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, format == MatrixFormat::csv ? std::ios::out
                                                        : std::ios::out | std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");

    if (format == MatrixFormat::csv) {
        out << m.rows() << "," << m.cols() << "\n";
        char buf[40];
        for (Index r = 0; r < m.rows(); ++r) {
            for (Index c = 0; c < m.cols(); ++c) {
                std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
                if (c) out << ',';
                out << buf;
            }
            out << '\n';
        }
    } else {
        out.write(kMagic, 8);
        write_u64_le(out, static_cast<std::uint64_t>(m.rows()));
        write_u64_le(out, static_cast<std::uint64_t>(m.cols()));
        for (Index r = 0; r < m.rows(); ++r) {
            for (Index c = 0; c < m.cols(); ++c) write_f64_le(out, m(r, c));
        }
    }
    if (!out) throw IoError("write failed for " + path.string());
}

void save_matrix(const Mat& m, const std::filesystem::path& path) {
    save_matrix(m, path, format_from_path(path));
}

std::vector<int> load_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<int> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        labels.push_back(static_cast<int>(parse_field(line, path, lineno, 1)));
    }
    if (labels.empty()) throw ParseError(path.string() + ": no labels");
    return labels;
}

void save_labels(const std::vector<int>& labels, const std::filesystem::path& path) {
    if (labels.empty()) throw ValidationError("save_labels: empty label list");
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (int l : labels) out << l << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

LabeledDataset load_dataset(const std::filesystem::path& matrix_path,
                            const std::filesystem::path& labels_path) {
    return LabeledDataset(load_matrix(matrix_path), load_labels(labels_path));
}

} // namespace rbds::io
