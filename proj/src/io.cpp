#include "lgindex/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace lgindex {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", position " +
                         std::to_string(column) + ")"),
      line(line),
      column(column) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void g6_fail(const std::string& msg, std::size_t offset) {
    throw ParseError("graph6: " + msg, 1, offset + 1);
}

}  // namespace

MultiGraph decode_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
        line.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    if (line.empty()) g6_fail("empty line", base);
    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = line[i];
        if (c < 63 || c > 126) g6_fail("character out of range", base + i);
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (line[0] != 126) {
        n = static_cast<unsigned char>(line[0]) - 63;
        pos = 1;
    } else if (line.size() >= 2 && line[1] != 126) {
        if (line.size() < 4) g6_fail("truncated vertex count", base + line.size());
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | (static_cast<unsigned char>(line[i]) - 63);
        pos = 4;
    } else {
        if (line.size() < 8) g6_fail("truncated vertex count", base + line.size());
        for (int i = 2; i <= 7; ++i)
            n = (n << 6) | (static_cast<unsigned char>(line[i]) - 63);
        pos = 8;
    }
    if (n > 5'000'000) g6_fail("vertex count too large", base);

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != need)
        g6_fail("body length mismatch (expected " + std::to_string(need) + " bytes)",
                base + line.size());

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned char c = static_cast<unsigned char>(line[pos + k / 6]) - 63;
            if ((c >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    // Padding bits must be zero for the encoding to be canonical.
    for (; k < need * 6; ++k) {
        unsigned char c = static_cast<unsigned char>(line[pos + k / 6]) - 63;
        if ((c >> (5 - k % 6)) & 1) g6_fail("non-zero padding bit", base + pos + k / 6);
    }
    return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const MultiGraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument(
            "graph6 encodes simple graphs only; use the edge-list format for "
            "multigraphs");
    const std::uint64_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    const std::uint64_t bits = n * (n - 1) / 2;
    std::vector<unsigned char> body((bits + 5) / 6, 0);
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) body[k / 6] |= 1u << (5 - k % 6);
    for (unsigned char b : body) out.push_back(static_cast<char>(b + 63));
    return out;
}

MultiGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string linebuf;
    std::size_t lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, linebuf)) {
            ++lineno;
            if (linebuf.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) throw ParseError("edge list: unexpected end of input", lineno + 1, 1);
        return false;
    };

    next_line(true);
    std::istringstream header(linebuf);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list: expected header 'n m'", lineno, 1);
    std::string trailing;
    if (header >> trailing)
        throw ParseError("edge list: trailing tokens after header", lineno, 1);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        next_line(true);
        std::istringstream es(linebuf);
        long long u = -1, v = -1;
        if (!(es >> u >> v))
            throw ParseError("edge list: expected 'u v'", lineno, 1);
        if (es >> trailing)
            throw ParseError("edge list: trailing tokens after edge", lineno, 1);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: endpoint out of range", lineno, 1);
        if (u == v) throw ParseError("edge list: loop not allowed", lineno, 1);
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (next_line(false))
        throw ParseError("edge list: extra content after last edge", lineno, 1);
    return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const MultiGraph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e).sorted();
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string write_dot(const MultiGraph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (g.has_vertex_labels() && !g.vertex_label(v).empty())
            out << " [label=\"" << g.vertex_label(v) << "\"]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e).sorted();
        out << "  " << u << " -- " << v;
        if (g.has_edge_labels() && !g.edge_label(e).empty())
            out << " [label=\"" << g.edge_label(e) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

MultiGraph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Graph6) {
        // Take the first non-empty line.
        std::size_t start = text.find_first_not_of(" \t\r\n");
        if (start == std::string_view::npos) throw ParseError("graph6: empty input", 1, 1);
        std::size_t end = text.find_first_of("\r\n", start);
        return decode_graph6(text.substr(start, end - start));
    }
    return parse_edge_list(text);
}

std::vector<MultiGraph> read_graphs_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<MultiGraph> graphs;
    if (format == GraphFormat::Graph6) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty()) continue;
            try {
                graphs.push_back(decode_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, e.column);
            }
        }
    } else {
        std::ostringstream all;
        all << in.rdbuf();
        graphs.push_back(parse_edge_list(all.str()));
    }
    return graphs;
}

GraphFormat format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

}  // namespace lgindex
