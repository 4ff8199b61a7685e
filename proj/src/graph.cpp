#include "bchroma/graph.hpp"

#include "bchroma/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bchroma {

VertexLabel VertexLabel::plain(std::size_t index)
{
    VertexLabel l;
    l.kind_ = Kind::Plain;
    l.index_ = index;
    return l;
}

VertexLabel VertexLabel::pair(VertexLabel left, VertexLabel right)
{
    VertexLabel l;
    l.kind_ = Kind::Pair;
    l.parts_.push_back(std::move(left));
    l.parts_.push_back(std::move(right));
    return l;
}

VertexLabel VertexLabel::edge_origin(VertexLabel u, VertexLabel v)
{
    VertexLabel l;
    l.kind_ = Kind::EdgeOrigin;
    if (v < u)
        std::swap(u, v);
    l.parts_.push_back(std::move(u));
    l.parts_.push_back(std::move(v));
    return l;
}

std::string VertexLabel::to_string() const
{
    switch (kind_) {
    case Kind::Plain:
        return std::to_string(index_);
    case Kind::Pair:
        return "(" + parts_[0].to_string() + "," + parts_[1].to_string() + ")";
    case Kind::EdgeOrigin:
        return "{" + parts_[0].to_string() + "," + parts_[1].to_string() + "}";
    }
    return {};
}

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& other) const
{
    if (auto c = kind_ <=> other.kind_; c != 0)
        return c;
    if (kind_ == Kind::Plain)
        return index_ <=> other.index_;
    if (auto c = parts_[0] <=> other.parts_[0]; c != 0)
        return c;
    return parts_[1] <=> other.parts_[1];
}

namespace {

class LabelParser {
public:
    explicit LabelParser(std::string_view text) : text_(text) {}

    VertexLabel parse_all()
    {
        auto l = parse_one();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing characters in vertex label", pos_);
        return l;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' in vertex label", pos_);
        ++pos_;
    }

    VertexLabel parse_one()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of vertex label", pos_);
        char c = text_[pos_];
        if (c == '(' || c == '{') {
            ++pos_;
            auto a = parse_one();
            expect(',');
            auto b = parse_one();
            expect(c == '(' ? ')' : '}');
            return c == '(' ? VertexLabel::pair(std::move(a), std::move(b))
                            : VertexLabel::edge_origin(std::move(a), std::move(b));
        }
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            throw ParseError("expected vertex index", pos_);
        pos_ = static_cast<std::size_t>(end - text_.data());
        return VertexLabel::plain(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

VertexLabel VertexLabel::parse(std::string_view text)
{
    return LabelParser(text).parse_all();
}

std::optional<Vertex> Graph::find(const VertexLabel& label) const
{
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label)
            return v;
    return std::nullopt;
}

Graph Graph::with_decomposition(std::shared_ptr<const ProductDecomposition> decomposition) const
{
    Graph copy = *this;
    copy.decomposition_ = std::move(decomposition);
    return copy;
}

GraphBuilder::GraphBuilder(std::size_t plain_vertices)
{
    for (std::size_t i = 0; i < plain_vertices; ++i)
        add_vertex(VertexLabel::plain(i));
}

Vertex GraphBuilder::add_vertex(VertexLabel label)
{
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return labels_.size() - 1;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    const auto& a = adjacency_.at(u);
    return std::find(a.begin(), a.end(), v) != a.end();
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u >= labels_.size() || v >= labels_.size())
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void GraphBuilder::add_edge_if_absent(Vertex u, Vertex v)
{
    if (u < labels_.size() && v < labels_.size() && u != v && has_edge(u, v))
        return;
    add_edge(u, v);
}

Graph GraphBuilder::build() &&
{
    std::set<VertexLabel> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate vertex label " + l.to_string());

    Graph g;
    const auto n = labels_.size();
    g.labels_ = std::move(labels_);
    g.rows_.assign(n, Bitset(n));
    g.neighbors_ = std::move(adjacency_);
    for (Vertex u = 0; u < n; ++u) {
        auto& nb = g.neighbors_[u];
        std::sort(nb.begin(), nb.end());
        for (auto v : nb) {
            g.rows_[u].set(v);
            if (u < v)
                g.edges_.push_back({u, v});
        }
    }
    return g;
}

Graph star(std::size_t leaves)
{
    GraphBuilder b(leaves + 1);
    for (Vertex i = 1; i <= leaves; ++i)
        b.add_edge(0, i);
    return std::move(b).build();
}

Graph complete(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("complete graph needs at least one vertex");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph path(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("path needs at least one vertex");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(v - 1, v);
    return std::move(b).build();
}

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.vertex_order.resize(g.vertex_count());
    std::iota(p.vertex_order.begin(), p.vertex_order.end(), Vertex{0});
    std::stable_sort(p.vertex_order.begin(), p.vertex_order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    p.degrees.reserve(g.vertex_count());
    for (auto v : p.vertex_order)
        p.degrees.push_back(g.degree(v));
    return p;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source)
{
    if (source >= g.vertex_count())
        throw std::out_of_range("vertex out of range");
    std::vector<std::optional<std::size_t>> dist(g.vertex_count());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(u)) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v)
{
    if (v >= g.vertex_count())
        throw std::out_of_range("vertex out of range");
    return distances_from(g, u)[v];
}

bool is_connected(const Graph& g)
{
    if (g.empty())
        return true;
    auto d = distances_from(g, 0);
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

std::size_t diameter(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("diameter of the empty graph is undefined");
    std::size_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (const auto& d : distances_from(g, s)) {
            if (!d)
                throw std::invalid_argument("diameter of a disconnected graph is undefined");
            best = std::max(best, *d);
        }
    }
    return best;
}

} // namespace bchroma
