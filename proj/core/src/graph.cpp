#include "commdet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace commdet {

namespace {

bool numeric_label(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// Numeric-aware label order so "2" sorts before "10".
bool label_less(const std::string& a, const std::string& b) {
    long long na = 0, nb = 0;
    bool ia = numeric_label(a, na), ib = numeric_label(b, nb);
    if (ia && ib) return na < nb || (na == nb && a < b);
    if (ia != ib) return ia;  // numeric labels first
    return a < b;
}

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& isolated_labels,
                        GraphWarnings* warnings) {
    Graph g;
    auto intern = [&g](const std::string& label) -> NodeId {
        auto it = g.label_index_.find(label);
        if (it != g.label_index_.end()) return it->second;
        NodeId id = static_cast<NodeId>(g.labels_.size());
        g.label_index_.emplace(label, id);
        g.labels_.push_back(label);
        g.adjacency_.emplace_back();
        return id;
    };

    for (const auto& label : isolated_labels) intern(label);
    GraphWarnings local;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const auto& [a, b] : edges) {
        NodeId u = intern(a);
        NodeId v = intern(b);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            ++local.duplicate_edges_dropped;
            continue;
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    if (warnings) *warnings = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "gml") return GraphFormat::gml;
    throw DataError("unknown graph format: " + std::string(name));
}

namespace {

Graph parse_edgelist(std::string_view text, GraphWarnings* warnings) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool any_content = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        std::string buf(line);
        std::istringstream in(buf);
        std::string a, b, extra;
        if (!(in >> a)) continue;
        if (a[0] == '#') continue;
        any_content = true;
        if (!(in >> b) || (in >> extra)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two node tokens, got '" + buf + "'");
        }
        edges.emplace_back(std::move(a), std::move(b));
        if (eol == text.size()) break;
    }
    if (!any_content) throw ParseError("empty edge-list input");
    return Graph::from_edges(edges, {}, warnings);
}

struct GmlToken {
    std::string text;
    std::size_t line;
};

std::vector<GmlToken> gml_tokenize(std::string_view text) {
    std::vector<GmlToken> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"') ++j;
            if (j >= text.size()) throw ParseError("line " + std::to_string(line) + ": unterminated string");
            tokens.push_back({std::string(text.substr(i + 1, j - i - 1)), line});
            i = j + 1;
        } else if (c == '[' || c == ']') {
            tokens.push_back({std::string(1, c), line});
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
                   text[j] != '[' && text[j] != ']')
                ++j;
            tokens.push_back({std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    return tokens;
}

Graph parse_gml(std::string_view text, GraphWarnings* warnings) {
    auto tokens = gml_tokenize(text);
    if (tokens.empty()) throw ParseError("empty GML input");

    std::vector<std::string> node_ids;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> node_id_set;

    std::size_t i = 0;
    auto expect = [&](const char* what) -> const GmlToken& {
        if (i >= tokens.size()) throw ParseError(std::string("unexpected end of GML input, expected ") + what);
        return tokens[i];
    };
    // skip to `graph [`
    while (i < tokens.size() && tokens[i].text != "graph") ++i;
    if (i >= tokens.size()) throw ParseError("GML input has no 'graph' block");
    ++i;
    if (expect("'['").text != "[")
        throw ParseError("line " + std::to_string(tokens[i].line) + ": expected '[' after 'graph'");
    ++i;

    // Skips a value, which may itself be a bracketed block.
    auto skip_value = [&](const char* key) {
        const GmlToken& t = expect("value");
        if (t.text == "[") {
            int depth = 0;
            do {
                const GmlToken& u = expect("']'");
                if (u.text == "[") ++depth;
                if (u.text == "]") --depth;
                ++i;
            } while (depth > 0);
        } else if (t.text == "]") {
            throw ParseError("line " + std::to_string(t.line) + ": missing value for key '" + key + "'");
        } else {
            ++i;
        }
    };

    while (true) {
        const GmlToken& t = expect("']' or key");
        if (t.text == "]") break;
        if (t.text == "node") {
            std::size_t node_line = t.line;
            ++i;
            if (expect("'['").text != "[")
                throw ParseError("line " + std::to_string(node_line) + ": expected '[' after 'node'");
            ++i;
            std::optional<std::string> id;
            while (expect("']' or node key").text != "]") {
                std::string key = tokens[i].text;
                ++i;
                if (key == "id") {
                    id = expect("node id").text;
                    ++i;
                } else {
                    skip_value(key.c_str());
                }
            }
            ++i;
            if (!id) throw ParseError("line " + std::to_string(node_line) + ": node without id");
            if (!node_id_set.insert(*id).second)
                throw ParseError("line " + std::to_string(node_line) + ": duplicate node id " + *id);
            node_ids.push_back(*id);
        } else if (t.text == "edge") {
            std::size_t edge_line = t.line;
            ++i;
            if (expect("'['").text != "[")
                throw ParseError("line " + std::to_string(edge_line) + ": expected '[' after 'edge'");
            ++i;
            std::optional<std::string> source, target;
            while (expect("']' or edge key").text != "]") {
                std::string key = tokens[i].text;
                ++i;
                if (key == "source") {
                    source = expect("edge source").text;
                    ++i;
                } else if (key == "target") {
                    target = expect("edge target").text;
                    ++i;
                } else {
                    skip_value(key.c_str());
                }
            }
            ++i;
            if (!source || !target)
                throw ParseError("line " + std::to_string(edge_line) + ": edge missing source/target");
            edges.emplace_back(*source, *target);
        } else {
            std::string key = t.text;
            ++i;
            skip_value(key.c_str());
        }
    }

    for (const auto& [a, b] : edges) {
        if (!node_id_set.count(a)) throw ParseError("edge endpoint '" + a + "' is not a declared node");
        if (!node_id_set.count(b)) throw ParseError("edge endpoint '" + b + "' is not a declared node");
    }

    // Declared nodes are interned first so internal ids follow declaration order.
    return Graph::from_edges(edges, node_ids, warnings);
}

}  // namespace

Graph load_graph(std::string_view text, GraphFormat format, GraphWarnings* warnings) {
    switch (format) {
        case GraphFormat::edgelist:
            return parse_edgelist(text, warnings);
        case GraphFormat::gml:
            return parse_gml(text, warnings);
    }
    throw DataError("unreachable graph format");
}

Graph load_graph_file(const std::string& path, GraphFormat format, GraphWarnings* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str(), format, warnings);
}

Partition::Partition(std::vector<CommunityId> assignment) {
    std::unordered_map<CommunityId, CommunityId> dense;
    assignment_.reserve(assignment.size());
    for (CommunityId c : assignment) {
        if (c < 0) throw DataError("partition is not total: unassigned node");
        auto [it, inserted] = dense.emplace(c, static_cast<CommunityId>(dense.size()));
        assignment_.push_back(it->second);
    }
    community_count_ = static_cast<int>(dense.size());
}

std::vector<std::vector<NodeId>> Partition::communities() const {
    std::vector<std::vector<NodeId>> out(community_count_);
    for (NodeId v = 0; v < node_count(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

bool Partition::same_clustering(const Partition& other) const {
    if (node_count() != other.node_count()) return false;
    if (community_count() != other.community_count()) return false;
    std::unordered_map<CommunityId, CommunityId> fwd;
    for (NodeId v = 0; v < node_count(); ++v) {
        auto [it, inserted] = fwd.emplace(assignment_[v], other.assignment_[v]);
        if (it->second != other.assignment_[v]) return false;
    }
    return true;
}

std::vector<NodeId> PartialPartition::unassigned_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v)
        if (assignment_[v] == kUnassigned) out.push_back(v);
    return out;
}

std::string write_edgelist(const Graph& graph) {
    std::string out;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (graph.degree(v) == 0) {
            out += "# isolated " + graph.label(v) + "\n";
            continue;
        }
        for (NodeId u : graph.neighbors(v)) {
            if (u <= v) continue;
            out += graph.label(v) + " " + graph.label(u) + "\n";
        }
    }
    return out;
}

std::string write_partition(const Partition& partition, const Graph& graph) {
    if (partition.node_count() != graph.node_count())
        throw DataError("partition/graph node count mismatch");
    std::vector<NodeId> order(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return label_less(graph.label(a), graph.label(b));
    });
    std::string out;
    for (NodeId v : order) {
        out += graph.label(v);
        out += '\t';
        out += std::to_string(partition.community_of(v));
        out += '\n';
    }
    return out;
}

Partition load_partition(std::string_view text, const Graph& graph) {
    std::vector<CommunityId> assignment(graph.node_count(), PartialPartition::kUnassigned);
    std::vector<bool> seen(graph.node_count(), false);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        std::istringstream in(line);
        std::string label, community;
        if (!(in >> label)) continue;
        if (label[0] == '#') continue;
        if (!(in >> community))
            throw ParseError("line " + std::to_string(line_no) + ": expected `label community`");
        auto node = graph.find_node(label);
        if (!node) throw ParseError("line " + std::to_string(line_no) + ": unknown node '" + label + "'");
        if (seen[*node]) throw ParseError("line " + std::to_string(line_no) + ": duplicate node '" + label + "'");
        seen[*node] = true;
        long long cid = 0;
        if (!numeric_label(community, cid) || cid < 0)
            throw ParseError("line " + std::to_string(line_no) + ": bad community id '" + community + "'");
        assignment[*node] = static_cast<CommunityId>(cid);
    }
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!seen[v]) throw DataError("partition is missing node '" + graph.label(v) + "'");
    }
    return Partition(std::move(assignment));
}

Partition load_partition_file(const std::string& path, const Graph& graph) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open partition file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_partition(buf.str(), graph);
}

}  // namespace commdet
