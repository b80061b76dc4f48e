#include "rainbow/ecg_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace rainbow {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next line with content, stripped of trailing CR; empty optional at EOF.
    std::optional<std::string_view> next_content_line() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line = (eol == std::string_view::npos)
                                        ? text.substr(pos)
                                        : text.substr(pos, eol - pos);
            pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;   // blank
            if (line[first] == '#') continue;                // comment
            return line;
        }
        return std::nullopt;
    }
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::int64_t parse_int(std::string_view field, int line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return value;
}

}  // namespace

EdgeColoredGraph parse_ecg(std::string_view text) {
    Cursor cur{text};

    auto header = cur.next_content_line();
    if (!header) throw ParseError(cur.line_no == 0 ? 1 : cur.line_no, "missing 'ecg <n> <m>' header");
    auto fields = split_fields(*header);
    if (fields.size() != 3 || fields[0] != "ecg")
        throw ParseError(cur.line_no, "expected header 'ecg <n> <m>'");
    const std::int64_t n64 = parse_int(fields[1], cur.line_no, "vertex count");
    const std::int64_t m64 = parse_int(fields[2], cur.line_no, "edge count");
    if (n64 < 0 || n64 > 100'000'000) throw ParseError(cur.line_no, "vertex count out of range");
    if (m64 < 0) throw ParseError(cur.line_no, "edge count out of range");
    const int n = static_cast<int>(n64);

    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<std::size_t>(m64));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m64));
    for (std::int64_t i = 0; i < m64; ++i) {
        auto line = cur.next_content_line();
        if (!line)
            throw ParseError(cur.line_no + 1, "expected " + std::to_string(m64) +
                                                  " edge lines, got " + std::to_string(i));
        auto f = split_fields(*line);
        if (f.size() != 3) throw ParseError(cur.line_no, "expected '<u> <v> <c>'");
        const std::int64_t u = parse_int(f[0], cur.line_no, "vertex");
        const std::int64_t v = parse_int(f[1], cur.line_no, "vertex");
        const std::int64_t c = parse_int(f[2], cur.line_no, "color");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(cur.line_no, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(cur.line_no, "self-loop");
        if (u > v) throw ParseError(cur.line_no, "edge endpoints must satisfy u < v");
        if (c < 0) throw ParseError(cur.line_no, "negative color");
        const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
        if (!seen.insert(key).second) throw ParseError(cur.line_no, "duplicate edge");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), c});
    }
    if (auto extra = cur.next_content_line())
        throw ParseError(cur.line_no, "unexpected content after " + std::to_string(m64) + " edges");

    return EdgeColoredGraph(n, std::move(edges));
}

std::string serialize_ecg(const EdgeColoredGraph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto& comment : comments) out << "# " << comment << "\n";
    out << "ecg " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

EdgeColoredGraph load_ecg(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    return parse_ecg(buffer.str());
}

void save_ecg(const EdgeColoredGraph& g, const std::filesystem::path& path,
              std::span<const std::string> comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << serialize_ecg(g, comments);
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace rainbow
