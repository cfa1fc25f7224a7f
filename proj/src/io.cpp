#include "pg/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace pg {

namespace {

// Next line that is neither blank nor a '#' comment; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void bad_file(const std::string& what) {
    throw Error(ErrorCode::FileFormat, what);
}

long long parse_int(std::istringstream& tokens, const std::string& line,
                    const char* what) {
    long long value;
    if (!(tokens >> value)) bad_file(std::string("expected ") + what + " in line: " + line);
    return value;
}

void expect_line_end(std::istringstream& tokens, const std::string& line) {
    std::string extra;
    if (tokens >> extra) bad_file("trailing tokens in line: " + line);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void write_dot_nodes(std::ostream& out, int n, const std::vector<std::string>& labels) {
    for (int v = 0; v < n; ++v) {
        out << "  " << v;
        if (!labels.empty())
            out << " [label=" << quoted(std::to_string(v) + ": " + labels[v]) << "]";
        out << ";\n";
    }
}

}  // namespace

std::variant<Graph, DiGraph> read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) bad_file("missing header line");
    std::istringstream header(line);
    const long long n = parse_int(header, line, "vertex count");
    const long long m = parse_int(header, line, "edge count");
    std::string kind;
    if (!(header >> kind)) bad_file("expected kind in line: " + line);
    expect_line_end(header, line);
    if (kind != "graph" && kind != "digraph")
        bad_file("kind must be graph or digraph, got " + kind);
    if (n < 0 || m < 0) bad_file("negative count in header");
    if (n > kMaxGroupOrder)
        bad_file("vertex count " + std::to_string(n) + " exceeds the maximum " +
                 std::to_string(kMaxGroupOrder));
    const bool directed = kind == "digraph";

    Graph g(directed ? 0 : static_cast<int>(n));
    DiGraph d(directed ? static_cast<int>(n) : 0);
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            bad_file("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::istringstream tokens(line);
        const long long u = parse_int(tokens, line, "endpoint");
        const long long v = parse_int(tokens, line, "endpoint");
        expect_line_end(tokens, line);
        if (u < 0 || v < 0 || u >= n || v >= n)
            bad_file("endpoint out of range in line: " + line);
        if (u == v) bad_file("loop rejected in line: " + line);
        const int a = static_cast<int>(u);
        const int b = static_cast<int>(v);
        if (directed) {
            if (!seen.insert({a, b}).second) bad_file("duplicate arc in line: " + line);
            d.add_arc(a, b);
        } else {
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                bad_file("duplicate edge in line: " + line);
            g.add_edge(a, b);
        }
    }
    if (next_data_line(in, line)) bad_file("unexpected content after edge list: " + line);
    if (directed) return d;
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << " graph\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out << u << " " << v << "\n";
        });
}

void write_edge_list(std::ostream& out, const DiGraph& d) {
    out << d.vertex_count() << " " << d.arc_count() << " digraph\n";
    for (int u = 0; u < d.vertex_count(); ++u)
        d.out(u).for_each([&](int v) { out << u << " " << v << "\n"; });
}

void write_dot(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
    out << "graph {\n";
    write_dot_nodes(out, g.vertex_count(), labels);
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out << "  " << u << " -- " << v << ";\n";
        });
    out << "}\n";
}

void write_dot(std::ostream& out, const DiGraph& d, const std::vector<std::string>& labels) {
    out << "digraph {\n";
    write_dot_nodes(out, d.vertex_count(), labels);
    for (int u = 0; u < d.vertex_count(); ++u)
        d.out(u).for_each([&](int v) { out << "  " << u << " -> " << v << ";\n"; });
    out << "}\n";
}

std::vector<std::vector<int>> read_cayley_table(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) bad_file("missing order line");
    std::istringstream header(line);
    const long long n = parse_int(header, line, "group order");
    expect_line_end(header, line);
    if (n < 1) bad_file("group order must be positive, got " + std::to_string(n));
    if (n > kMaxGroupOrder)
        bad_file("group order " + std::to_string(n) + " exceeds the maximum " +
                 std::to_string(kMaxGroupOrder));

    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        if (!next_data_line(in, line))
            bad_file("expected " + std::to_string(n) + " table rows, got " + std::to_string(i));
        std::istringstream tokens(line);
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(n));
        for (long long j = 0; j < n; ++j)
            row.push_back(static_cast<int>(parse_int(tokens, line, "table entry")));
        expect_line_end(tokens, line);
        table.push_back(std::move(row));
    }
    if (next_data_line(in, line)) bad_file("unexpected content after table: " + line);
    return table;
}

}  // namespace pg
