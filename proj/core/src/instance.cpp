#include "blockslide/instance.hpp"

#include "blockslide/error.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace blockslide {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Instance run()
    {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            ++line_no_;
            handle(line);
            pos = end + 1;
        }
        return finish();
    }

private:
    [[noreturn]] void fail(ErrorKind kind, const std::string& what) const
    {
        throw Error(kind, "line " + std::to_string(line_no_) + ": " + what);
    }

    std::uint64_t number(std::string_view word) const
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
        if (ec != std::errc{} || ptr != word.data() + word.size())
            fail(ErrorKind::SyntaxError, "expected a non-negative integer, got '" + std::string(word) + "'");
        return v;
    }

    Vertex vertex(std::string_view word) const
    {
        const auto v = number(word);
        if (v == 0 || v > n_)
            fail(ErrorKind::VertexOutOfRange, "vertex " + std::string(word) + " not in 1.." + std::to_string(n_));
        return static_cast<Vertex>(v - 1);
    }

    void handle(std::string_view line)
    {
        const auto words = split_words(line);
        if (words.empty() || words[0].front() == '#')
            return;
        const std::string_view tag = words[0];
        if (tag == "p") {
            if (header_)
                fail(ErrorKind::SyntaxError, "duplicate 'p' line");
            if (words.size() != 3)
                fail(ErrorKind::SyntaxError, "expected 'p <n> <m>'");
            n_ = number(words[1]);
            m_ = number(words[2]);
            if (n_ > std::uint64_t{0xFFFFFFFF})
                fail(ErrorKind::SyntaxError, "too many vertices");
            header_ = true;
            return;
        }
        if (!header_)
            fail(ErrorKind::SyntaxError, "'" + std::string(tag) + "' line before the 'p' header");
        if (tag == "e") {
            if (words.size() != 3)
                fail(ErrorKind::SyntaxError, "expected 'e <u> <v>'");
            if (source_ || target_)
                fail(ErrorKind::SyntaxError, "edge after the token lines");
            if (edges_.size() == m_)
                fail(ErrorKind::SyntaxError, "more than " + std::to_string(m_) + " edges");
            edges_.emplace_back(vertex(words[1]), vertex(words[2]));
            return;
        }
        if (tag == "s" || tag == "t") {
            auto& slot = tag == "s" ? source_ : target_;
            if (slot)
                fail(ErrorKind::SyntaxError, "duplicate '" + std::string(tag) + "' line");
            std::vector<Vertex> vs;
            for (std::size_t i = 1; i < words.size(); ++i)
                vs.push_back(vertex(words[i]));
            slot = std::move(vs);
            return;
        }
        fail(ErrorKind::SyntaxError, "unknown line tag '" + std::string(tag) + "'");
    }

    TokenSet tokens(const Graph& g, std::vector<Vertex> vs, const char* which) const
    {
        try {
            return TokenSet(g, std::move(vs));
        } catch (const Error& e) {
            throw Error(e.kind(), std::string(which) + ": " + e.what());
        }
    }

    Instance finish()
    {
        if (!header_)
            throw Error(ErrorKind::MissingSection, "missing 'p' header");
        if (edges_.size() != m_)
            throw Error(ErrorKind::SyntaxError, "header declares " + std::to_string(m_) + " edges, found " +
                                                    std::to_string(edges_.size()));
        if (!source_)
            throw Error(ErrorKind::MissingSection, "missing 's' line");
        if (!target_)
            throw Error(ErrorKind::MissingSection, "missing 't' line");
        Instance inst;
        inst.graph = Graph(n_, edges_);
        inst.source = tokens(inst.graph, std::move(*source_), "source");
        inst.target = tokens(inst.graph, std::move(*target_), "target");
        return inst;
    }

    std::string_view text_;
    std::size_t line_no_ = 0;
    bool header_ = false;
    std::uint64_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<Vertex>> source_;
    std::optional<std::vector<Vertex>> target_;
};

void append_tokens(std::string& out, char tag, const TokenSet& c)
{
    out += tag;
    for (Vertex v : c) {
        out += ' ';
        out += std::to_string(v + 1);
    }
    out += '\n';
}

} // namespace

Instance parse_instance(std::string_view text)
{
    return Parser(text).run();
}

std::string render_instance(const Instance& instance)
{
    const auto& g = instance.graph;
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    append_tokens(out, 's', instance.source);
    append_tokens(out, 't', instance.target);
    return out;
}

} // namespace blockslide
