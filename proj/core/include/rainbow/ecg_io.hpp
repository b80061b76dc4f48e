#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Malformed `.ecg` input. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the `.ecg` text format:
///   - `#` begins a comment line; blank lines are ignored
///   - first content line: `ecg <n> <m>`
///   - then exactly m lines `<u> <v> <c>` with 0 <= u < v < n and c >= 0
/// LF and CRLF are both accepted.
EdgeColoredGraph parse_ecg(std::string_view text);

/// Emits the canonical form: optional comment lines, the header, then the
/// edges sorted by (u, v), LF line endings.
std::string serialize_ecg(const EdgeColoredGraph& g, std::span<const std::string> comments = {});

EdgeColoredGraph load_ecg(const std::filesystem::path& path);
void save_ecg(const EdgeColoredGraph& g, const std::filesystem::path& path,
              std::span<const std::string> comments = {});

}  // namespace rainbow
