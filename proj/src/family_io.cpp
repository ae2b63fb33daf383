#include "hypersect/family_io.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/parse.hpp"

#include <charconv>
#include <set>

namespace hypersect {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trimmed view plus its offset into the enclosing text.
struct Piece {
    std::string_view text;
    std::size_t offset;
};

Piece trim(std::string_view s, std::size_t offset) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return {s, offset};
}

// Splits "key: value" at the first ':'.
std::pair<Piece, Piece> split_colon(Piece p) {
    const std::size_t colon = p.text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ':'", p.offset + p.text.size());
    return {trim(p.text.substr(0, colon), p.offset), trim(p.text.substr(colon + 1), p.offset + colon + 1)};
}

struct Header {
    VarList vars;
    int param_dim = 0;
};

Header parse_header(Piece line) {
    Header h;
    bool have_vars = false, have_dim = false;
    std::size_t start = 0;
    while (start <= line.text.size()) {
        std::size_t semi = line.text.find(';', start);
        if (semi == std::string_view::npos) semi = line.text.size();
        const Piece clause = trim(line.text.substr(start, semi - start), line.offset + start);
        start = semi + 1;
        if (clause.text.empty()) continue;
        const auto [key, value] = split_colon(clause);
        if (key.text == "vars" && !have_vars) {
            try {
                h.vars = parse_var_list(value.text);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), value.offset + e.position());
            }
            have_vars = true;
        } else if (key.text == "param_dim" && !have_dim) {
            const char* b = value.text.data();
            const char* e = b + value.text.size();
            const auto [end, ec] = std::from_chars(b, e, h.param_dim);
            if (ec != std::errc() || end != e || h.param_dim < 0)
                throw ParseError("param_dim must be a nonnegative integer", value.offset);
            have_dim = true;
        } else {
            throw ParseError("unexpected header key '" + std::string(key.text) + "'", key.offset);
        }
    }
    if (!have_vars) throw ParseError("header must declare vars", line.offset);
    return h;
}

}  // namespace

FamilySample parse_family(std::string_view text) {
    std::optional<Header> header;
    std::vector<std::pair<std::string, MultiPoly>> members;
    std::set<std::string, std::less<>> tags;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        const Piece line = trim(text.substr(start, nl - start), start);
        start = nl + 1;
        if (line.text.empty() || line.text.front() == '#') continue;
        if (!header) {
            header = parse_header(line);
            continue;
        }
        const auto [tag, expr] = split_colon(line);
        if (tag.text.empty()) throw ParseError("empty member tag", tag.offset);
        if (!tags.insert(std::string(tag.text)).second)
            throw ParseError("duplicate member tag '" + std::string(tag.text) + "'", tag.offset);
        try {
            members.emplace_back(std::string(tag.text), parse_poly(expr.text, header->vars));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), expr.offset + e.position());
        }
        if (members.back().second.is_constant())
            throw ParseError("member '" + std::string(tag.text) + "' is constant", expr.offset);
    }
    if (!header) throw ParseError("missing header line", text.size());
    if (members.empty()) throw ParseError("family has no members", text.size());
    return make_family(std::move(members), header->param_dim);
}

std::string format_family(const FamilySample& family, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += "vars: ";
    for (std::size_t i = 0; i < family.vars.size(); ++i) out += (i ? ", " : "") + family.vars[i];
    out += "; param_dim: " + std::to_string(family.declared_param_dim) + "\n";
    for (const auto& m : family.members) out += m.tag + " : " + m.hypersurface.f.to_string() + "\n";
    return out;
}

}  // namespace hypersect
