#include "abc/families.hpp"

#include <charconv>
#include <utility>
#include <vector>

#include "abc/errors.hpp"
#include "abc/perturbations.hpp"

namespace abc {

namespace {

const char* kGrammar =
    "family grammar: star:N | path:N | cycle:N | complete:N | dstar:A:B | "
    "t:I:N (I in 1..10) | gkl:<base>:<v0>:<k>:<l> | g1kl:<base>:<w>:<k>:<l>";

int parse_int(std::string_view tok, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parameter_error(std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph t_tree_graph(int index, int n) {
    Graph g(n);
    auto center_leaves = [&](int count) {
        for (int v = 1; v <= count; ++v) g.add_edge(0, v);
    };
    switch (index) {
        case 1:  // pendant path of length 3 at the star center
            center_leaves(n - 4);
            g.add_edge(0, n - 3);
            g.add_edge(n - 3, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 2:  // S_{n-4,2}
            center_leaves(n - 4);
            g.add_edge(0, n - 3);
            g.add_edge(n - 3, n - 2);
            g.add_edge(n - 3, n - 1);
            break;
        case 3:  // two pendant 2-paths at the center
            center_leaves(n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(0, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 4:  // S_{n-5,3}
            center_leaves(n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(n - 4, n - 2);
            g.add_edge(n - 4, n - 1);
            break;
        case 5:  // degree-3 branch vertex with one leaf and a pendant 2-path
            center_leaves(n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(n - 4, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 6:  // path 0-u-a, two leaves at a
            center_leaves(n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(n - 3, n - 2);
            g.add_edge(n - 3, n - 1);
            break;
        case 7:  // pendant path of length 4 at the star center
            center_leaves(n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(n - 3, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 8:  // pendant 3-path and pendant 2-path on distinct neighbors
            center_leaves(n - 6);
            g.add_edge(0, n - 5);
            g.add_edge(n - 5, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(0, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 9:  // degree-3 neighbor with 2 leaves, plus a pendant 2-path
            center_leaves(n - 6);
            g.add_edge(0, n - 5);
            g.add_edge(n - 5, n - 4);
            g.add_edge(n - 5, n - 3);
            g.add_edge(0, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        case 10:  // three pendant 2-paths
            center_leaves(n - 7);
            g.add_edge(0, n - 6);
            g.add_edge(n - 6, n - 5);
            g.add_edge(0, n - 4);
            g.add_edge(n - 4, n - 3);
            g.add_edge(0, n - 2);
            g.add_edge(n - 2, n - 1);
            break;
        default:
            throw parameter_error("t_tree index must be 1..10");
    }
    return g;
}

}  // namespace

namespace {

FamilySpec make_spec(FamilySpec::Tag tag, int a, int b = 0, int anchor = 0) {
    FamilySpec s;
    s.tag = tag;
    s.a = a;
    s.b = b;
    s.anchor = anchor;
    return s;
}

}  // namespace

FamilySpec FamilySpec::star(int n) { return make_spec(Tag::star, n); }
FamilySpec FamilySpec::path(int n) { return make_spec(Tag::path, n); }
FamilySpec FamilySpec::cycle(int n) { return make_spec(Tag::cycle, n); }
FamilySpec FamilySpec::complete(int n) { return make_spec(Tag::complete, n); }
FamilySpec FamilySpec::double_star(int a, int b) { return make_spec(Tag::double_star, a, b); }
FamilySpec FamilySpec::t_tree(int index, int n) { return make_spec(Tag::t_tree, index, n); }

FamilySpec FamilySpec::paths_attached(FamilySpec base, int v0, int k, int l) {
    FamilySpec s = make_spec(Tag::paths_attached, k, l, v0);
    s.base = std::make_shared<const FamilySpec>(std::move(base));
    return s;
}

FamilySpec FamilySpec::stars_attached(FamilySpec base, int w, int k, int l) {
    FamilySpec s = make_spec(Tag::stars_attached, k, l, w);
    s.base = std::make_shared<const FamilySpec>(std::move(base));
    return s;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    auto toks = split(text, ':');
    const std::string_view tag = toks[0];
    auto expect = [&](std::size_t count) {
        if (toks.size() != count)
            throw parameter_error("family '" + std::string(tag) + "' expects " +
                                  std::to_string(count - 1) + " parameter(s); " + kGrammar);
    };
    if (tag == "star") {
        expect(2);
        return star(parse_int(toks[1], "order"));
    }
    if (tag == "path") {
        expect(2);
        return path(parse_int(toks[1], "order"));
    }
    if (tag == "cycle") {
        expect(2);
        return cycle(parse_int(toks[1], "order"));
    }
    if (tag == "complete") {
        expect(2);
        return complete(parse_int(toks[1], "order"));
    }
    if (tag == "dstar") {
        expect(3);
        return double_star(parse_int(toks[1], "a"), parse_int(toks[2], "b"));
    }
    if (tag == "t") {
        expect(3);
        return t_tree(parse_int(toks[1], "index"), parse_int(toks[2], "order"));
    }
    if (tag == "gkl" || tag == "g1kl") {
        if (toks.size() < 5)
            throw parameter_error("family '" + std::string(tag) + "' expects " +
                                  "<base>:<anchor>:<k>:<l>; " + kGrammar);
        // base may itself contain colons; the last three tokens are anchor:k:l
        std::size_t base_end = text.size();
        for (int back = 0; back < 3; ++back)
            base_end = text.rfind(':', base_end - 1);
        std::string_view base_text = text.substr(tag.size() + 1, base_end - tag.size() - 1);
        FamilySpec base = parse(base_text);
        int anchor = parse_int(toks[toks.size() - 3], "anchor vertex");
        int k = parse_int(toks[toks.size() - 2], "k");
        int l = parse_int(toks[toks.size() - 1], "l");
        return tag == "gkl" ? paths_attached(std::move(base), anchor, k, l)
                            : stars_attached(std::move(base), anchor, k, l);
    }
    throw parameter_error("unknown family tag '" + std::string(tag) + "'; " + kGrammar);
}

std::string FamilySpec::to_string() const {
    switch (tag) {
        case Tag::star: return "star:" + std::to_string(a);
        case Tag::path: return "path:" + std::to_string(a);
        case Tag::cycle: return "cycle:" + std::to_string(a);
        case Tag::complete: return "complete:" + std::to_string(a);
        case Tag::double_star: return "dstar:" + std::to_string(a) + ":" + std::to_string(b);
        case Tag::t_tree: return "t:" + std::to_string(a) + ":" + std::to_string(b);
        case Tag::paths_attached:
            return "gkl:" + base->to_string() + ":" + std::to_string(anchor) + ":" +
                   std::to_string(a) + ":" + std::to_string(b);
        case Tag::stars_attached:
            return "g1kl:" + base->to_string() + ":" + std::to_string(anchor) + ":" +
                   std::to_string(a) + ":" + std::to_string(b);
    }
    return {};
}

void FamilySpec::validate() const {
    switch (tag) {
        case Tag::star:
        case Tag::path:
        case Tag::complete:
            if (a < 1) throw parameter_error(to_string() + ": order must be >= 1");
            break;
        case Tag::cycle:
            if (a < 3) throw parameter_error(to_string() + ": cycle order must be >= 3");
            break;
        case Tag::double_star:
            if (!(a >= b && b >= 0))
                throw parameter_error(to_string() + ": double star needs a >= b >= 0");
            break;
        case Tag::t_tree:
            if (a < 1 || a > 10) throw parameter_error(to_string() + ": index must be 1..10");
            if (a <= 3 && b < 6)
                throw parameter_error(to_string() + ": T1..T3 need n >= 6");
            if (a >= 4 && b < 7)
                throw parameter_error(to_string() + ": T4..T10 need n >= 7");
            break;
        case Tag::paths_attached:
        case Tag::stars_attached: {
            if (!base) throw parameter_error(to_string() + ": missing base family");
            base->validate();
            if (tag == Tag::paths_attached && base->order() < 2)
                throw parameter_error(to_string() + ": base must be nontrivial (order >= 2)");
            if (anchor < 0 || anchor >= base->order())
                throw parameter_error(to_string() + ": anchor vertex outside base");
            if (a < 0 || b < 0) throw parameter_error(to_string() + ": k and l must be >= 0");
            break;
        }
    }
}

int FamilySpec::order() const {
    switch (tag) {
        case Tag::star:
        case Tag::path:
        case Tag::cycle:
        case Tag::complete:
            return a;
        case Tag::double_star: return a + b + 2;
        case Tag::t_tree: return b;
        case Tag::paths_attached: return base->order() + a + b;
        case Tag::stars_attached: return base->order() + a + b + 2;
    }
    return 0;
}

Graph build_family(const FamilySpec& spec) {
    spec.validate();
    switch (spec.tag) {
        case FamilySpec::Tag::star:
            return star_graph(spec.a);
        case FamilySpec::Tag::path: {
            Graph g(spec.a);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case FamilySpec::Tag::cycle: {
            Graph g(spec.a);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            g.add_edge(spec.a - 1, 0);
            return g;
        }
        case FamilySpec::Tag::complete: {
            Graph g(spec.a);
            for (int u = 0; u < spec.a; ++u)
                for (int v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilySpec::Tag::double_star: {
            const int n = spec.a + spec.b + 2;
            Graph g(n);
            g.add_edge(0, 1);
            for (int v = 0; v < spec.a; ++v) g.add_edge(0, 2 + v);
            for (int v = 0; v < spec.b; ++v) g.add_edge(1, 2 + spec.a + v);
            return g;
        }
        case FamilySpec::Tag::t_tree:
            return t_tree_graph(spec.a, spec.b);
        case FamilySpec::Tag::paths_attached:
            return attach_paths(build_family(*spec.base), spec.anchor, spec.a, spec.b);
        case FamilySpec::Tag::stars_attached:
            return attach_stars(build_family(*spec.base), spec.anchor, spec.a, spec.b);
    }
    throw parameter_error("unreachable family tag");
}

}  // namespace abc
