#include "bchroma/graph_spec.hpp"

#include "bchroma/error.hpp"
#include "bchroma/io.hpp"
#include "bchroma/operators.hpp"

#include <cctype>
#include <charconv>

namespace bchroma {

namespace {

struct Keyword {
    const char* name;
    GraphSpec::Kind kind;
};

constexpr Keyword generators[] = {
    {"star", GraphSpec::Kind::Star},
    {"complete", GraphSpec::Kind::Complete},
    {"path", GraphSpec::Kind::Path},
    {"cycle", GraphSpec::Kind::Cycle},
};

constexpr Keyword operators[] = {
    {"prod", GraphSpec::Kind::Product},
    {"line", GraphSpec::Kind::Line},
    {"total", GraphSpec::Kind::Total},
    {"pow", GraphSpec::Kind::Power},
};

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GraphSpec parse_all()
    {
        auto spec = parse();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' after graph expression", pos_);
        return spec;
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
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string word()
    {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t number()
    {
        skip_space();
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            throw ParseError("expected a non-negative integer", pos_);
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    std::string file_path()
    {
        auto start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(')
                ++depth;
            else if ((c == ')' || c == ',') && depth == 0)
                break;
            else if (c == ')')
                --depth;
            ++pos_;
        }
        auto path = std::string(text_.substr(start, pos_ - start));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
            path.pop_back();
        if (path.empty())
            throw ParseError("expected a file path", start);
        return path;
    }

    GraphSpec parse()
    {
        skip_space();
        auto start = pos_;
        auto name = word();
        if (name.empty())
            throw ParseError("expected a graph expression", start);
        GraphSpec spec;
        for (const auto& g : generators) {
            if (name == g.name) {
                expect(':');
                spec.kind = g.kind;
                spec.number = number();
                return spec;
            }
        }
        if (name == "file") {
            expect(':');
            spec.kind = GraphSpec::Kind::File;
            spec.path = file_path();
            return spec;
        }
        for (const auto& op : operators) {
            if (name == op.name) {
                spec.kind = op.kind;
                expect('(');
                spec.args.push_back(parse());
                if (op.kind == GraphSpec::Kind::Product) {
                    expect(',');
                    spec.args.push_back(parse());
                } else if (op.kind == GraphSpec::Kind::Power) {
                    expect(',');
                    spec.number = number();
                }
                expect(')');
                return spec;
            }
        }
        throw ParseError("unknown graph constructor '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GraphSpec parse_graph_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string print_graph_spec(const GraphSpec& spec)
{
    using K = GraphSpec::Kind;
    switch (spec.kind) {
    case K::Star:
        return "star:" + std::to_string(spec.number);
    case K::Complete:
        return "complete:" + std::to_string(spec.number);
    case K::Path:
        return "path:" + std::to_string(spec.number);
    case K::Cycle:
        return "cycle:" + std::to_string(spec.number);
    case K::File:
        return "file:" + spec.path;
    case K::Product:
        return "prod(" + print_graph_spec(spec.args.at(0)) + "," + print_graph_spec(spec.args.at(1)) + ")";
    case K::Line:
        return "line(" + print_graph_spec(spec.args.at(0)) + ")";
    case K::Total:
        return "total(" + print_graph_spec(spec.args.at(0)) + ")";
    case K::Power:
        return "pow(" + print_graph_spec(spec.args.at(0)) + "," + std::to_string(spec.number) + ")";
    }
    return {};
}

Graph build_graph(const GraphSpec& spec)
{
    using K = GraphSpec::Kind;
    switch (spec.kind) {
    case K::Star:
        return star(spec.number);
    case K::Complete:
        return complete(spec.number);
    case K::Path:
        return path(spec.number);
    case K::Cycle:
        return cycle(spec.number);
    case K::File:
        return load_graph_file(spec.path);
    case K::Product:
        return cartesian_product(build_graph(spec.args.at(0)), build_graph(spec.args.at(1)));
    case K::Line:
        return line_graph(build_graph(spec.args.at(0)));
    case K::Total:
        return total_graph(build_graph(spec.args.at(0)));
    case K::Power:
        return graph_power(build_graph(spec.args.at(0)), spec.number);
    }
    return {};
}

} // namespace bchroma
