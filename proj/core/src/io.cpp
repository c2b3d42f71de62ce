#include "graphpack/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gpk {

ParseError::ParseError(int line_, int column_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + what_),
      line(line_),
      column(column_) {}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_nonneg(const Token& tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || value < 0)
        throw ParseError(line_no, tok.column,
                         std::string("expected a non-negative integer for ") + what);
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    int line_no = 0;
    size_t pos = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    Graph g;

    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const std::vector<Token> toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;

        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError(line_no, toks.size() > 2 ? toks[2].column : 1,
                                 "header must be exactly \"n m\"");
            n = parse_nonneg(toks[0], line_no, "vertex count");
            m = parse_nonneg(toks[1], line_no, "edge count");
            try {
                g = Graph(n);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, toks[0].column, e.what());
            }
            have_header = true;
            continue;
        }

        if (edges_seen == m)
            throw ParseError(line_no, toks[0].column, "more edge lines than the header announced");
        if (toks.size() != 2)
            throw ParseError(line_no, toks.size() > 2 ? toks[2].column : 1,
                             "edge line must be exactly \"u v\"");
        const int u = parse_nonneg(toks[0], line_no, "edge endpoint");
        const int v = parse_nonneg(toks[1], line_no, "edge endpoint");
        if (u >= n) throw ParseError(line_no, toks[0].column, "endpoint out of range");
        if (v >= n) throw ParseError(line_no, toks[1].column, "endpoint out of range");
        if (u == v) throw ParseError(line_no, toks[0].column, "loop edge");
        if (g.has_edge(u, v)) throw ParseError(line_no, toks[0].column, "duplicate edge");
        g.add_edge(u, v);
        ++edges_seen;
    }

    if (!have_header) throw ParseError(line_no, 1, "missing header line \"n m\"");
    if (edges_seen != m)
        throw ParseError(line_no, 1,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(edges_seen));
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Graph read_edge_list_file(const std::string& path) { return parse_edge_list(slurp(path)); }

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << format_edge_list(g);
}

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    if (line.empty()) throw ParseError(1, 1, "empty graph6 input");
    if (line[0] == ':' || line[0] == ';')
        throw ParseError(1, 1, "sparse6 input is not supported");
    if (line[0] == '&') throw ParseError(1, 1, "digraph6 input is not supported");
    if (static_cast<unsigned char>(line[0]) == 126)
        throw std::length_error("graph6 import supports at most 62 vertices");

    const int c = static_cast<unsigned char>(line[0]);
    if (c < 63 || c > 125) throw ParseError(1, 1, "invalid graph6 size byte");
    const int n = c - 63;

    const int bits = n * (n - 1) / 2;
    const int bytes = (bits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + bytes)
        throw ParseError(1, static_cast<int>(line.size()),
                         "graph6 body has wrong length for " + std::to_string(n) + " vertices");

    Graph g(n);
    int k = 0;
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int b = static_cast<unsigned char>(line[1 + k / 6]) - 63;
            if (b < 0 || b > 63) throw ParseError(1, 2 + k / 6, "invalid graph6 data byte");
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

Graph read_graph6_file(const std::string& path) {
    const std::string text = slurp(path);
    size_t start = 0;  // first non-blank line
    while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    return parse_graph6(std::string_view(text).substr(start, end - start));
}

}  // namespace gpk
