#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"
#include "format.hpp"

namespace lowd {

namespace {

std::string_view strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Whitespace-separated token starting at `pos`; empty view when exhausted.
std::string_view next_token(std::string_view line, std::size_t& pos) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    return line.substr(start, pos - start);
}

std::uint64_t parse_node_id(std::string_view tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad node id '" + std::string(tok) + "'", line_no);
    return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad weight '" + std::string(tok) + "'", line_no);
    return value;
}

std::uint64_t pair_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph Graph::from_edge_list(std::string_view text, bool weighted) {
    Graph g;
    std::unordered_map<std::uint64_t, NodeId> remap;
    std::unordered_set<std::uint64_t> seen;

    auto id_of = [&](std::uint64_t orig) {
        auto [it, inserted] = remap.try_emplace(orig, static_cast<NodeId>(g.original_ids_.size()));
        if (inserted) g.original_ids_.push_back(orig);
        return it->second;
    };

    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        std::string_view line = strip(raw);
        if (line.empty() || line.front() == '#' || line.front() == '%') continue;

        std::size_t cur = 0;
        std::string_view tu = next_token(line, cur);
        std::string_view tv = next_token(line, cur);
        if (tv.empty()) throw ParseError("expected at least two columns", line_no);
        std::string_view tw = next_token(line, cur);
        if (!next_token(line, cur).empty()) throw ParseError("too many columns", line_no);

        std::uint64_t ou = parse_node_id(tu, line_no);
        std::uint64_t ov = parse_node_id(tv, line_no);

        double w = 1.0;
        if (weighted) {
            if (tw.empty()) throw ParseError("missing weight column", line_no);
            w = parse_weight(tw, line_no);
            if (!(w > 0.0) || !std::isfinite(w))
                throw ValidationError("line " + std::to_string(line_no) + ": non-positive weight");
        }

        if (ou == ov) continue;  // self-loop

        NodeId u = id_of(ou);
        NodeId v = id_of(ov);
        if (!seen.insert(pair_key(u, v)).second) continue;  // duplicate pair
        g.edges_.push_back({u, v, w});
    }

    if (g.edges_.empty()) throw ValidationError("empty graph: no usable edges");
    g.n_ = static_cast<NodeId>(g.original_ids_.size());
    g.finalize();
    return g;
}

Graph Graph::from_file(const std::string& path, bool weighted) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_edge_list(buf.str(), weighted);
}

Graph Graph::from_edges(std::vector<Edge> edges, std::vector<std::uint64_t> original_ids) {
    Graph g;
    g.n_ = static_cast<NodeId>(original_ids.size());
    g.original_ids_ = std::move(original_ids);
    g.edges_ = std::move(edges);
    if (g.edges_.empty()) throw ValidationError("empty graph: no usable edges");

    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : g.edges_) {
        if (e.u >= g.n_ || e.v >= g.n_) throw ValidationError("edge endpoint out of range");
        if (e.u == e.v) throw ValidationError("self-loop in edge set");
        if (!(e.w > 0.0) || !std::isfinite(e.w)) throw ValidationError("non-positive weight");
        if (!seen.insert(pair_key(e.u, e.v)).second) throw ValidationError("duplicate edge");
    }
    g.finalize();
    return g;
}

void Graph::finalize() {
    total_weight_ = 0.0;
    unweighted_ = true;
    for (const Edge& e : edges_) {
        total_weight_ += e.w;
        if (e.w != 1.0) unweighted_ = false;
    }

    std::vector<std::size_t> counts(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++counts[e.u + 1];
        ++counts[e.v + 1];
    }
    adj_offset_.assign(n_ + 1, 0);
    for (NodeId u = 0; u < n_; ++u) adj_offset_[u + 1] = adj_offset_[u] + counts[u + 1];

    adj_.resize(adj_offset_[n_]);
    std::vector<std::size_t> fill(adj_offset_.begin(), adj_offset_.end() - 1);
    for (EdgeId i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[fill[e.u]++] = {i, e.v};
        adj_[fill[e.v]++] = {i, e.u};
    }

    wdeg_.assign(n_, 0.0);
    for (const Edge& e : edges_) {
        wdeg_[e.u] += e.w;
        wdeg_[e.v] += e.w;
    }
}

double Graph::max_weighted_degree() const {
    double m = 0.0;
    for (double d : wdeg_) m = std::max(m, d);
    return m;
}

Graph Graph::induce(std::span<const NodeId> members) const {
    std::vector<NodeId> sorted = canonical_node_set(*this, members);
    std::vector<NodeId> new_id(n_, n_);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_id[sorted[i]] = static_cast<NodeId>(i);

    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        if (new_id[e.u] != n_ && new_id[e.v] != n_)
            kept.push_back({new_id[e.u], new_id[e.v], e.w});
    }
    std::vector<std::uint64_t> orig;
    orig.reserve(sorted.size());
    for (NodeId u : sorted) orig.push_back(original_ids_[u]);
    return from_edges(std::move(kept), std::move(orig));
}

std::string Graph::serialize() const {
    std::string out;
    for (const Edge& e : edges_) {
        out += std::to_string(original_ids_[e.u]);
        out += ' ';
        out += std::to_string(original_ids_[e.v]);
        if (!unweighted_) {
            out += ' ';
            out += format_double(e.w);
        }
        out += '\n';
    }
    return out;
}

std::vector<NodeId> canonical_node_set(const Graph& g, std::span<const NodeId> s) {
    std::vector<NodeId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= g.node_count())
        throw ValidationError("node id out of range");
    return out;
}

double induced_weight(const Graph& g, std::span<const NodeId> s) {
    std::vector<char> mask(g.node_count(), 0);
    for (NodeId u : s) mask[u] = 1;
    double w = 0.0;
    for (NodeId u : s) {
        for (const Incidence& inc : g.neighbors(u)) {
            if (u < inc.other && mask[inc.other]) w += g.edge(inc.edge).w;
        }
    }
    return w;
}

double density(const Graph& g, std::span<const NodeId> s) {
    std::vector<NodeId> set = canonical_node_set(g, s);
    if (set.empty()) throw ValidationError("density of an empty node set");
    return induced_weight(g, set) / static_cast<double>(set.size());
}

std::vector<std::pair<NodeId, double>> induced_degrees(const Graph& g, std::span<const NodeId> s) {
    std::vector<NodeId> set = canonical_node_set(g, s);
    std::vector<char> mask(g.node_count(), 0);
    for (NodeId u : set) mask[u] = 1;

    std::vector<std::pair<NodeId, double>> out;
    out.reserve(set.size());
    for (NodeId u : set) {
        double d = 0.0;
        for (const Incidence& inc : g.neighbors(u))
            if (mask[inc.other]) d += g.edge(inc.edge).w;
        out.emplace_back(u, d);
    }
    return out;
}

SubgraphView make_subgraph_view(const Graph& g, std::span<const NodeId> s) {
    SubgraphView view;
    view.parent = &g;
    view.members = canonical_node_set(g, s);
    view.induced_weight = induced_weight(g, view.members);
    view.induced_degree.reserve(view.members.size());
    for (auto& [u, d] : induced_degrees(g, view.members)) {
        (void)u;
        view.induced_degree.push_back(d);
    }
    return view;
}

}  // namespace lowd
