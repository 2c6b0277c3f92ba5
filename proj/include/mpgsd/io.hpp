#ifndef MPGSD_IO_HPP
#define MPGSD_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mpgsd/graph.hpp"

namespace mpgsd {

// Plain-text instance file:
//
//   mpgsd 1
//   <n_vertices> <n_edges> <n_supply>
//   <vertex values, space separated, supply vertices first>
//   <u> <v>            (one line per edge, 0-based)
//   optimum <integer>  (optional)
//
// Decimal integers, single spaces, LF line endings. Anything else is
// rejected with the offending line number.

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line, int lineno) {
    if (!line.empty() && line.back() == '\r')
        throw ParseError(lineno, "CR line ending (expected LF)");
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t space = line.find(' ', start);
        const auto field = line.substr(start, space == std::string_view::npos ? space : space - start);
        if (field.empty()) throw ParseError(lineno, "empty field (stray or repeated space?)");
        fields.push_back(field);
        if (space == std::string_view::npos) break;
        start = space + 1;
    }
    return fields;
}

inline std::int64_t parse_int(std::string_view field, int lineno) {
    std::int64_t value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(lineno, "not a decimal integer: '" + std::string(field) + "'");
    return value;
}

}  // namespace detail

inline ProblemGraph parse_instance(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            throw ParseError(static_cast<int>(lines.size() + 1), "missing trailing newline");
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    int lineno = 1;
    auto next_line = [&](const char* what) -> std::string_view {
        if (static_cast<std::size_t>(lineno) > lines.size())
            throw ParseError(lineno, std::string("unexpected end of file, expected ") + what);
        return lines[lineno - 1];
    };

    if (next_line("header") != "mpgsd 1")
        throw ParseError(lineno, "bad header, expected 'mpgsd 1'");
    ++lineno;

    const auto counts = detail::split_fields(next_line("vertex/edge/supply counts"), lineno);
    if (counts.size() != 3) throw ParseError(lineno, "expected '<n_vertices> <n_edges> <n_supply>'");
    const auto n_vertices = detail::parse_int(counts[0], lineno);
    const auto n_edges = detail::parse_int(counts[1], lineno);
    const auto n_supply = detail::parse_int(counts[2], lineno);
    if (n_vertices < 1 || n_edges < 0 || n_supply < 0 || n_supply > n_vertices)
        throw ParseError(lineno, "implausible counts");
    ++lineno;

    const auto value_fields = detail::split_fields(next_line("vertex values"), lineno);
    if (static_cast<std::int64_t>(value_fields.size()) != n_vertices)
        throw ParseError(lineno, "expected " + std::to_string(n_vertices) + " vertex values");
    std::vector<Value> values(n_vertices);
    for (std::int64_t v = 0; v < n_vertices; ++v) {
        values[v] = detail::parse_int(value_fields[v], lineno);
        if (values[v] == 0)
            throw ValidationError("line " + std::to_string(lineno) + ": vertex " +
                                  std::to_string(v) + " has value 0");
        const bool should_be_supply = v < n_supply;
        if ((values[v] > 0) != should_be_supply)
            throw ParseError(lineno, "vertex " + std::to_string(v) +
                                         (should_be_supply ? " must be a supply (positive) value"
                                                           : " must be a demand (negative) value"));
    }
    ++lineno;

    std::vector<Edge> edges;
    edges.reserve(n_edges);
    std::vector<std::vector<int>> adjacency(n_vertices);
    for (std::int64_t e = 0; e < n_edges; ++e, ++lineno) {
        const auto fields = detail::split_fields(next_line("edge"), lineno);
        if (fields.size() != 2) throw ParseError(lineno, "expected '<u> <v>'");
        const auto u = detail::parse_int(fields[0], lineno);
        const auto v = detail::parse_int(fields[1], lineno);
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw ParseError(lineno, "edge endpoint out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        for (int w : adjacency[u])
            if (w == v) throw ParseError(lineno, "duplicate edge");
        adjacency[u].push_back(static_cast<int>(v));
        adjacency[v].push_back(static_cast<int>(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    std::optional<Value> optimum;
    if (static_cast<std::size_t>(lineno) <= lines.size()) {
        const auto fields = detail::split_fields(lines[lineno - 1], lineno);
        if (fields.size() != 2 || fields[0] != "optimum")
            throw ParseError(lineno, "expected 'optimum <integer>' or end of file");
        const auto opt = detail::parse_int(fields[1], lineno);
        if (opt < 0) throw ParseError(lineno, "optimum must be nonnegative");
        optimum = opt;
        ++lineno;
    }
    if (static_cast<std::size_t>(lineno) <= lines.size())
        throw ParseError(lineno, "trailing content after instance");

    return ProblemGraph(std::move(values), std::move(edges), optimum);
}

inline std::string instance_to_string(const ProblemGraph& g) {
    const int ns = g.supply_count();
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((g.value(v) > 0) != (v < ns))
            throw ValidationError(
                "instance files require supply vertices at indices 0..n_supply-1");

    std::ostringstream out;
    out << "mpgsd 1\n";
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << ns << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) out << (v ? " " : "") << g.value(v);
    out << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (g.optimum()) out << "optimum " << *g.optimum() << '\n';
    return out.str();
}

inline ProblemGraph read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

inline void write_instance(const ProblemGraph& g, const std::string& path) {
    const std::string text = instance_to_string(g);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("failed writing instance file: " + path);
}

}  // namespace mpgsd

#endif
