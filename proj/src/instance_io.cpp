// SPDX-License-Identifier: MIT
#include "temporeach/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line;
        line.number = number;
        std::istringstream iss{std::string(raw)};
        std::string tok;
        while (iss >> tok) line.tokens.push_back(tok);
        if (line.tokens.empty()) continue;
        if (line.tokens.front().front() == '#') continue;  // full-line comment
        out.push_back(std::move(line));
    }
    return out;
}

int parse_int_token(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("malformed ") + what + " '" + tok + "'", line);
    return value;
}

std::vector<int> parse_label_list(const std::string& tok, int line) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (pos <= tok.size()) {
        std::size_t comma = tok.find(',', pos);
        std::string part =
            tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty()) throw ParseError("malformed label list '" + tok + "'", line);
        int label = parse_int_token(part, line, "label");
        if (label <= 0)
            throw ParseError("label must be a positive integer, got " + part, line);
        if (label > 1'000'000'000) throw ParseError("label too large: " + part, line);
        labels.push_back(label);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return labels;
}

void require_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        throw ParseError("directive '" + line.tokens.front() + "' expects " +
                             std::to_string(n - 1) + " argument(s), got " +
                             std::to_string(line.tokens.size() - 1),
                         line.number);
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);

    // First pass: directedness must be known before edges are canonicalized.
    bool directed = false;
    for (const Line& line : lines) {
        if (line.tokens.front() == "directed") {
            require_arity(line, 1);
            directed = true;
        }
    }

    Instance inst;
    inst.graph = TemporalGraph(directed);
    std::vector<std::pair<std::string, int>> source_lines;  // (id, line number)

    for (const Line& line : lines) {
        const std::string& head = line.tokens.front();
        try {
            if (head == "directed") {
                continue;
            } else if (head == "vertex") {
                require_arity(line, 2);
                inst.graph.add_vertex(line.tokens[1]);
            } else if (head == "edge") {
                require_arity(line, 4);
                inst.graph.add_edge(line.tokens[1], line.tokens[2],
                                    parse_label_list(line.tokens[3], line.number));
            } else if (head == "source") {
                require_arity(line, 2);
                source_lines.emplace_back(line.tokens[1], line.number);
            } else if (head == "param") {
                require_arity(line, 3);
                const std::string& name = line.tokens[1];
                int value = parse_int_token(line.tokens[2], line.number, "param value");
                std::optional<int>* slot = nullptr;
                if (name == "lambda") slot = &inst.params.lambda;
                else if (name == "mu") slot = &inst.params.mu;
                else if (name == "delta") slot = &inst.params.delta;
                else if (name == "kappa") slot = &inst.params.kappa;
                else throw ParseError("unknown param name '" + name + "'", line.number);
                if (slot->has_value())
                    throw ParseError("param '" + name + "' given twice", line.number);
                if (value < 0)
                    throw ParseError("param '" + name + "' must be non-negative", line.number);
                *slot = value;
            } else {
                throw ParseError("unknown directive '" + head + "'", line.number);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line.number);
        }
    }

    // Sources may refer to vertices declared anywhere, so resolve them last.
    for (const auto& [id, number] : source_lines) {
        if (!inst.graph.has_vertex(id))
            throw ParseError("source '" + id + "' is not a vertex of the graph", number);
        if (std::find(inst.sources.begin(), inst.sources.end(), id) == inst.sources.end())
            inst.sources.push_back(id);
    }
    std::sort(inst.sources.begin(), inst.sources.end());
    return inst;
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    if (instance.graph.directed()) out << "directed\n";
    for (const auto& v : instance.graph.vertices()) out << "vertex " << v << "\n";
    for (const auto& e : instance.graph.edges()) {
        out << "edge " << e.u << " " << e.v << " ";
        for (std::size_t i = 0; i < e.labels.size(); ++i) {
            if (i) out << ",";
            out << e.labels[i];
        }
        out << "\n";
    }
    for (const auto& s : instance.sources) out << "source " << s << "\n";
    const auto& p = instance.params;
    if (p.lambda) out << "param lambda " << *p.lambda << "\n";
    if (p.mu) out << "param mu " << *p.mu << "\n";
    if (p.delta) out << "param delta " << *p.delta << "\n";
    if (p.kappa) out << "param kappa " << *p.kappa << "\n";
    return out.str();
}

}  // namespace temporeach
