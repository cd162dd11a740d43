#include <netchrono/io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include <netchrono/errors.hpp>

namespace netchrono::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Parses a non-negative label starting at `pos`, advancing past it.
Vertex parse_label(std::string_view line, std::size_t &pos, std::size_t line_no) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
        ++pos;
    Vertex value = 0;
    const auto *begin = line.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == begin)
        throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected a non-negative vertex label");
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
}

std::ifstream open_in(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Io, "cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
    return out;
}

void check_written(std::ostream &out, const std::filesystem::path &path) {
    out.flush();
    if (!out)
        throw Error(Errc::Io, "failed writing " + path.string());
}

constexpr std::string_view kVertexHeader = "vertices:";

} // namespace

UndirectedGraph read_edge_list(std::istream &in) {
    std::vector<VertexPair> pairs;
    std::vector<Vertex> declared;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const auto body = trim(line.substr(1));
            if (body.starts_with(kVertexHeader)) {
                std::size_t pos = kVertexHeader.size();
                const Vertex n = parse_label(body, pos, line_no);
                declared.resize(n);
                for (Vertex v = 0; v < n; ++v)
                    declared[v] = v;
            }
            continue;
        }
        std::size_t pos = 0;
        const Vertex u = parse_label(line, pos, line_no);
        const Vertex v = parse_label(line, pos, line_no);
        if (!trim(line.substr(pos)).empty())
            throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": trailing characters after edge");
        pairs.emplace_back(u, v);
    }
    if (!declared.empty()) {
        for (const auto &[u, v] : pairs)
            if (u >= declared.size() || v >= declared.size())
                throw Error(Errc::Parse, "edge label exceeds declared vertex count " + std::to_string(declared.size()));
    }
    return UndirectedGraph::build(declared, pairs);
}

UndirectedGraph read_edge_list(const std::filesystem::path &path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const UndirectedGraph &g) {
    const auto vs = g.vertices();
    const bool contiguous = !vs.empty() && vs.front() == 0 && vs.back() == vs.size() - 1;
    if (contiguous)
        out << "# vertices: " << vs.size() << '\n';
    for (const auto &[u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path &path, const UndirectedGraph &g) {
    auto out = open_out(path);
    write_edge_list(out, g);
    check_written(out, path);
}

Chronology read_chronology(std::istream &in) {
    std::vector<Vertex> order;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        std::size_t pos = 0;
        order.push_back(parse_label(line, pos, line_no));
        if (!trim(line.substr(pos)).empty())
            throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected one label per line");
    }
    return Chronology(std::move(order));
}

Chronology read_chronology(const std::filesystem::path &path) {
    auto in = open_in(path);
    return read_chronology(in);
}

void write_chronology(std::ostream &out, const Chronology &chronology) {
    for (const Vertex v : chronology.order())
        out << v << '\n';
}

void write_chronology(const std::filesystem::path &path, const Chronology &chronology) {
    auto out = open_out(path);
    write_chronology(out, chronology);
    check_written(out, path);
}

} // namespace netchrono::io
