#pragma once

// Text formats shared by every CLI command.
//
// Graph file:
//   line 1:       n m c        (vertex count, edge count, color count;
//                               c = 0 means uncolored)
//   next m lines: u v          (uncolored file)
//                 u v color    (colored file, color in [0, c))
// Whitespace-separated; everything after '#' on a line is a comment.
//
// Forest file: one line per forest listing edge ids into the host graph;
// a single '-' denotes an empty forest. Comments as above.
//
// Partition string: blocks separated by '|', vertices by ','; must cover
// 0..n-1 exactly. Example: "0,1|2|3".

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rt/errors.hpp"
#include "rt/graph.hpp"
#include "rt/rainbow.hpp"

namespace rt {

namespace detail {

inline std::string strip_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(strip_comment(line));
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline long long parse_int(const std::string& tok, int line_no) {
    size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace detail

inline ColoredMultigraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, line)) {
        ++line_no;
        header = detail::tokens_of(line);
    }
    if (header.empty()) throw ParseError(line_no, "missing 'n m c' header");
    if (header.size() != 3) throw ParseError(line_no, "header must be 'n m c'");
    long long n = detail::parse_int(header[0], line_no);
    long long m = detail::parse_int(header[1], line_no);
    long long c = detail::parse_int(header[2], line_no);
    if (n < 0 || m < 0 || c < 0) throw ParseError(line_no, "header values must be non-negative");

    std::vector<Edge> edges;
    while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        size_t expected = c == 0 ? 2 : 3;
        if (toks.size() != expected)
            throw ParseError(line_no, c == 0 ? "uncolored file: edge lines must be 'u v'"
                                             : "colored file: edge lines must be 'u v color'");
        long long u = detail::parse_int(toks[0], line_no);
        long long v = detail::parse_int(toks[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u) + " " +
                                                  std::to_string(v) + " is not allowed");
        int color = -1;
        if (c > 0) {
            long long col = detail::parse_int(toks[2], line_no);
            if (col < 0 || col >= c)
                throw ParseError(line_no, "color id " + std::to_string(col) +
                                              " outside declared range [0, " + std::to_string(c) +
                                              ")");
            color = static_cast<int>(col);
        }
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), color});
    }
    if (static_cast<long long>(edges.size()) < m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                      std::to_string(edges.size()));
    return ColoredMultigraph(static_cast<int>(n), std::move(edges), static_cast<int>(c));
}

inline ColoredMultigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const ColoredMultigraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.color_count() > 0) out << ' ' << e.color;
        out << '\n';
    }
}

inline std::string graph_to_string(const ColoredMultigraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline ForestFamily read_forests(std::istream& in, const ColoredMultigraph& g) {
    ForestFamily family;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        std::vector<int> forest;
        if (toks.size() == 1 && toks[0] == "-") {
            family.forests.push_back({});
            continue;
        }
        for (const std::string& tok : toks) {
            long long id = detail::parse_int(tok, line_no);
            if (id < 0 || id >= g.edge_count())
                throw ParseError(line_no, "edge id " + std::to_string(id) + " out of range");
            forest.push_back(static_cast<int>(id));
        }
        family.forests.push_back(std::move(forest));
    }
    if (family.forests.empty()) throw ParseError(line_no, "forest file contains no forests");
    return family;
}

inline ForestFamily read_forests_file(const std::string& path, const ColoredMultigraph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open forest file '" + path + "'");
    return read_forests(in, g);
}

/// Parses "0,1|2|3" into a partition, validating exact cover of 0..n-1.
inline VertexPartition parse_partition(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::istringstream in(text);
    std::string block;
    while (std::getline(in, block, '|')) {
        std::vector<int> members;
        std::istringstream bin(block);
        std::string tok;
        while (std::getline(bin, tok, ',')) {
            if (tok.empty()) continue;
            members.push_back(static_cast<int>(detail::parse_int(tok, 0)));
        }
        if (!members.empty()) blocks.push_back(std::move(members));
    }
    if (blocks.empty()) throw ParseError(0, "empty partition string");
    return VertexPartition::from_blocks(n, blocks);
}

inline std::string partition_to_string(const VertexPartition& p) {
    std::string out;
    for (const std::vector<int>& block : p.blocks()) {
        if (!out.empty()) out += '|';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

}  // namespace rt
