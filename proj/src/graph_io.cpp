#include "bitonic/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace bitonic {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw GraphError(GraphErrc::InvalidInput, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        parse_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

EmbeddedStGraph parse_graph_text(std::string_view text) {
    std::size_t n = 0;
    VertexId s = 0, t = 0;
    bool have_header = false;
    std::vector<std::vector<VertexId>> succ;
    std::vector<char> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto colon = line.find(':');
        if (!have_header) {
            const auto toks = split_ws(line);
            if (toks.empty()) continue;
            if (toks.size() != 3 || colon != std::string_view::npos) parse_fail(line_no, "expected header 'n s t'");
            n = to_uint(toks[0], line_no);
            const auto sv = to_uint(toks[1], line_no), tv = to_uint(toks[2], line_no);
            if (n < 2 || n >= kNoVertex / 2) parse_fail(line_no, "vertex count out of range");
            if (sv >= n || tv >= n) parse_fail(line_no, "s or t out of range");
            s = static_cast<VertexId>(sv);
            t = static_cast<VertexId>(tv);
            succ.assign(n, {});
            seen.assign(n, 0);
            have_header = true;
            continue;
        }
        if (colon == std::string_view::npos) {
            if (split_ws(line).empty()) continue;
            parse_fail(line_no, "expected 'u: successors'");
        }
        const auto head = split_ws(line.substr(0, colon));
        if (head.size() != 1) parse_fail(line_no, "expected a single vertex before ':'");
        const auto u = to_uint(head[0], line_no);
        if (u >= n) parse_fail(line_no, "vertex out of range");
        if (seen[u]) parse_fail(line_no, "duplicate line for vertex " + std::to_string(u));
        seen[u] = 1;
        for (auto tok : split_ws(line.substr(colon + 1))) {
            const auto v = to_uint(tok, line_no);
            if (v >= n) parse_fail(line_no, "successor out of range");
            succ[u].push_back(static_cast<VertexId>(v));
        }
    }
    if (!have_header) throw GraphError(GraphErrc::InvalidInput, "missing header 'n s t'");
    return build_graph(n, s, t, succ);
}

std::string to_text(const EmbeddedStGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.source() << ' ' << g.sink() << '\n';
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        out << u << ':';
        for (EdgeId e : g.out_edges(u)) out << ' ' << g.edge(e).head;
        out << '\n';
    }
    return out.str();
}

EmbeddedStGraph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw GraphError(GraphErrc::InvalidInput, std::string("malformed JSON: ") + ex.what());
    }
    try {
        const auto n = doc.at("n").get<std::uint64_t>();
        const auto s = doc.at("s").get<std::uint64_t>();
        const auto t = doc.at("t").get<std::uint64_t>();
        if (n < 2 || n >= kNoVertex / 2 || s >= n || t >= n)
            throw GraphError(GraphErrc::InvalidInput, "n, s or t out of range");
        const auto& lists = doc.at("succ");
        if (!lists.is_array() || lists.size() != n)
            throw GraphError(GraphErrc::InvalidInput, "'succ' must hold one list per vertex");
        std::vector<std::vector<VertexId>> succ(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (const auto& v : lists[u]) {
                const auto id = v.get<std::uint64_t>();
                if (id >= n) throw GraphError(GraphErrc::InvalidInput, "successor out of range");
                succ[u].push_back(static_cast<VertexId>(id));
            }
        }
        return build_graph(n, static_cast<VertexId>(s), static_cast<VertexId>(t), succ);
    } catch (const nlohmann::json::exception& ex) {
        throw GraphError(GraphErrc::InvalidInput, std::string("bad graph JSON: ") + ex.what());
    }
}

std::string to_json(const EmbeddedStGraph& g) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["s"] = g.source();
    doc["t"] = g.sink();
    doc["succ"] = g.successor_lists();
    return doc.dump() + "\n";
}

EmbeddedStGraph parse_graph(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace bitonic
