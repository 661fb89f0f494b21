#include "binmeas/literal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "binmeas/errors.hpp"

namespace binmeas {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// `key=value` with a fixed key; value may be empty.
std::string expect_kv(const std::string& part, const std::string& key) {
    const std::string t = trim(part);
    if (t.rfind(key + "=", 0) != 0)
        throw ParseError("expected `" + key + "=...`, got `" + t + "`");
    return trim(t.substr(key.size() + 1));
}

long long parse_ll(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("expected an integer");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad integer: " + t);
    }
    if (pos != t.size()) throw ParseError("bad integer: " + t);
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_ll(t));
    const long long num = parse_ll(t.substr(0, slash));
    const long long den = parse_ll(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + t);
    return Rational(num, den);
}

ExtendedRational parse_extended_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t == "-inf") return ExtendedRational::neg_inf();
    if (t == "inf" || t == "+inf") return ExtendedRational::pos_inf();
    return ExtendedRational(parse_rational(t));
}

IntervalUnion parse_interval(const std::string& text) {
    const std::string t = trim(text);
    if (t == "{}" || t.empty()) return IntervalUnion::empty();
    std::vector<IntervalUnion::Component> raw;
    for (const std::string& tok : split_ws(t)) {
        if (tok.size() < 2 || tok.front() != '[' || tok.back() != ')')
            throw ParseError("interval must look like [a,b): " + tok);
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw ParseError("interval needs a comma: " + tok);
        raw.emplace_back(parse_extended_rational(tok.substr(1, comma - 1)),
                         parse_extended_rational(tok.substr(comma + 1, tok.size() - comma - 2)));
    }
    return normalize(raw, NormalizeMode::UnionOf);
}

std::string print_interval(const IntervalUnion& u) {
    if (u.is_empty()) return "{}";
    std::string out;
    for (const auto& [lo, hi] : u.components()) {
        if (!out.empty()) out += ' ';
        out += '[' + lo.str() + ',' + hi.str() + ')';
    }
    return out;
}

BinaryStepFunction parse_stepfn(const std::string& text) {
    const auto parts = split_on(text, ';');
    if (parts.size() != 2) throw ParseError("step function literal is `init=..; toggles=..`");
    const std::string init = expect_kv(parts[0], "init");
    if (init != "0" && init != "1") throw ParseError("init must be 0 or 1");
    const std::string toggles = expect_kv(parts[1], "toggles");
    std::vector<Rational> raw;
    if (!toggles.empty())
        for (const std::string& tok : split_on(toggles, ',')) raw.push_back(parse_rational(tok));
    return sf_normalize(init == "1" ? 1 : 0, std::move(raw));
}

std::string print_stepfn(const BinaryStepFunction& f) {
    std::string out = "init=" + std::to_string(f.v0()) + "; toggles=";
    for (std::size_t i = 0; i < f.toggles().size(); ++i) {
        if (i) out += ',';
        out += f.toggles()[i].str();
    }
    return out;
}

SparsePointFunction parse_points(const std::string& text) {
    const std::string body = expect_kv(trim(text), "points");
    std::vector<Rational> pts;
    if (!body.empty())
        for (const std::string& tok : split_on(body, ',')) pts.push_back(parse_rational(tok));
    std::vector<Rational> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("duplicate support point");
    return SparsePointFunction(std::move(pts));
}

std::string print_points(const SparsePointFunction& f) {
    std::string out = "points=";
    for (std::size_t i = 0; i < f.support().size(); ++i) {
        if (i) out += ',';
        out += f.support()[i].str();
    }
    return out;
}

std::vector<Point> parse_point_tuples(const std::string& text) {
    const std::string body = expect_kv(trim(text), "points");
    std::vector<Point> out;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
        if (i >= body.size()) break;
        if (body[i] != '(') throw ParseError("expected a tuple `(x,y,...)`");
        const auto close = body.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed tuple");
        Point p;
        for (const std::string& tok : split_on(body.substr(i + 1, close - i - 1), ','))
            p.coords.push_back(parse_rational(tok));
        out.push_back(std::move(p));
        i = close + 1;
    }
    if (out.empty()) throw ParseError("empty tuple list");
    for (const Point& p : out)
        if (p.coords.size() != out.front().coords.size())
            throw ParseError("tuples of mixed dimension");
    return out;
}

BoxUnion parse_box(const std::string& text) {
    const std::string t = trim(text);
    if (t == "{}" ) return BoxUnion(1);
    std::vector<Box> raw;
    std::size_t dim = 0;
    for (const std::string& tok : split_ws(t)) {
        Box b;
        for (const std::string& side : split_on(tok, 'x')) {
            if (side.size() < 2 || side.front() != '[' || side.back() != ')')
                throw ParseError("box side must look like [a,b): " + side);
            const auto comma = side.find(',');
            if (comma == std::string::npos) throw ParseError("box side needs a comma");
            b.sides.emplace_back(parse_rational(side.substr(1, comma - 1)),
                                 parse_rational(side.substr(comma + 1, side.size() - comma - 2)));
        }
        if (dim == 0) dim = b.dim();
        if (b.dim() != dim) throw ParseError("boxes of mixed dimension");
        raw.push_back(std::move(b));
    }
    if (raw.empty()) throw ParseError("empty box literal");
    return BoxUnion(dim, raw);
}

std::string print_box(const BoxUnion& u) {
    if (u.is_empty()) return "{}";
    std::string out;
    for (const Box& b : u.boxes()) {
        if (!out.empty()) out += ' ';
        for (std::size_t k = 0; k < b.dim(); ++k) {
            if (k) out += 'x';
            out += '[' + b.sides[k].first.str() + ',' + b.sides[k].second.str() + ')';
        }
    }
    return out;
}

LocallyFiniteSet parse_locfin(const std::string& text) {
    const std::string t = trim(text);
    if (t.rfind("lattice", 0) == 0) {
        const auto parts = split_ws(t);
        if (parts.size() != 3) throw ParseError("lattice literal is `lattice scale=q offset=(..)`");
        const Rational scale = parse_rational(expect_kv(parts[1], "scale"));
        const std::string off = expect_kv(parts[2], "offset");
        if (off.size() < 2 || off.front() != '(' || off.back() != ')')
            throw ParseError("offset must be a tuple");
        Point offset;
        for (const std::string& tok : split_on(off.substr(1, off.size() - 2), ','))
            offset.coords.push_back(parse_rational(tok));
        const std::size_t dim = offset.coords.size();
        return LocallyFiniteSet::lattice(dim, scale, std::move(offset));
    }
    // Point list; scalars are 1-dimensional tuples.
    const std::string body = expect_kv(t, "points");
    if (body.find('(') != std::string::npos) {
        auto tuples = parse_point_tuples(t);
        const std::size_t dim = tuples.front().coords.size();
        return LocallyFiniteSet::finite(dim, std::move(tuples));
    }
    std::vector<Point> pts;
    if (!body.empty())
        for (const std::string& tok : split_on(body, ','))
            pts.push_back(Point{{parse_rational(tok)}});
    return LocallyFiniteSet::finite(1, std::move(pts));
}

std::string print_locfin(const LocallyFiniteSet& h) {
    if (!h.is_finite()) {
        std::string out = "lattice scale=" + h.scale().str() + " offset=(";
        for (std::size_t k = 0; k < h.dim(); ++k) {
            if (k) out += ',';
            out += h.offset().coords[k].str();
        }
        return out + ")";
    }
    std::string out = "points=";
    if (h.dim() == 1) {
        for (std::size_t i = 0; i < h.points().size(); ++i) {
            if (i) out += ',';
            out += h.points()[i].coords[0].str();
        }
        return out;
    }
    for (std::size_t i = 0; i < h.points().size(); ++i) {
        if (i) out += ' ';
        out += '(';
        for (std::size_t k = 0; k < h.dim(); ++k) {
            if (k) out += ',';
            out += h.points()[i].coords[k].str();
        }
        out += ')';
    }
    return out;
}

BinarySequence parse_sequence(const std::string& text) {
    const auto parts = split_on(text, ';');
    if (parts.size() != 2) throw ParseError("sequence literal is `tail=..; flips=..`");
    const std::string tail = expect_kv(parts[0], "tail");
    if (tail != "0" && tail != "1") throw ParseError("tail must be 0 or 1");
    const Bit t = tail == "1" ? 1 : 0;
    const std::string flips = expect_kv(parts[1], "flips");
    std::map<std::uint64_t, Bit> overrides;
    if (!flips.empty()) {
        for (const std::string& tok : split_on(flips, ',')) {
            const long long n = parse_ll(tok);
            if (n < 0) throw ParseError("sequence index must be nonnegative");
            overrides[static_cast<std::uint64_t>(n)] = bit_not(t);
        }
    }
    return BinarySequence(std::move(overrides), t);
}

std::string print_sequence(const BinarySequence& x) {
    std::string out = "tail=" + std::to_string(x.tail()) + "; flips=";
    bool first = true;
    for (const auto& [n, _] : x.overrides()) {
        if (!first) out += ',';
        out += std::to_string(n);
        first = false;
    }
    return out;
}

SSet parse_sset(const std::string& text) {
    const std::string t = trim(text);
    if (t == "{}" || t.empty()) return SSet::empty();
    std::vector<SComponent> raw;
    for (const std::string& tok : split_ws(t)) {
        if (tok.size() >= 3 && tok.front() == '{' && tok.back() == '}') {
            const Rational c = parse_rational(tok.substr(1, tok.size() - 2));
            raw.push_back(SComponent{c, c, true, true});
            continue;
        }
        if (tok.size() < 2) throw ParseError("bad sset component: " + tok);
        const char open = tok.front();
        const char close = tok.back();
        if ((open != '(' && open != '[') || (close != ')' && close != ']'))
            throw ParseError("sset component must be an interval or {c}: " + tok);
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw ParseError("interval needs a comma: " + tok);
        const Rational lo = parse_rational(tok.substr(1, comma - 1));
        const Rational hi = parse_rational(tok.substr(comma + 1, tok.size() - comma - 2));
        if (!(lo < hi)) throw ParseError("interval component needs lo < hi: " + tok);
        raw.push_back(SComponent{lo, hi, open == '[', close == ']'});
    }
    return SSet(raw);
}

std::string print_sset(const SSet& s) {
    if (s.is_empty()) return "{}";
    std::string out;
    for (const auto& c : s.components()) {
        if (!out.empty()) out += ' ';
        if (c.is_point()) {
            out += '{' + c.lo.str() + '}';
        } else {
            out += (c.left_closed ? '[' : '(');
            out += c.lo.str() + ',' + c.hi.str();
            out += (c.right_closed ? ']' : ')');
        }
    }
    return out;
}

CofiniteSet parse_cofinite(const std::string& text) {
    const std::string body = expect_kv(trim(text), "complement");
    CofiniteSet h;
    if (!body.empty())
        for (const std::string& tok : split_on(body, ',')) h.complement.insert(parse_ll(tok));
    return h;
}

namespace {

SubsetMask parse_subset_line(const FiniteUniverse& u, const std::string& line) {
    const std::string t = trim(line);
    if (t == "{}") return SubsetMask{0};
    SubsetMask m{};
    for (const std::string& label : split_ws(t))
        m.bits |= (1u << u.index_of(label));
    return m;
}

}  // namespace

ParsedFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ParsedFamily out;
    int lineno = 0;
    bool have_universe = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_universe) {
            if (t.rfind("universe:", 0) != 0)
                throw ParseError("first line must be `universe: a b c ...`", lineno, 1);
            out.universe = FiniteUniverse(split_ws(t.substr(9)));
            have_universe = true;
            continue;
        }
        out.members.push_back(parse_subset_line(out.universe, t));
    }
    if (!have_universe) throw ParseError("missing universe line");
    return out;
}

ParsedTabFn parse_tabfn(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ParsedTabFn out;
    int lineno = 0;
    bool have_universe = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_universe) {
            if (t.rfind("universe:", 0) != 0)
                throw ParseError("first line must be `universe: a b c ...`", lineno, 1);
            out.universe = FiniteUniverse(split_ws(t.substr(9)));
            have_universe = true;
            continue;
        }
        const auto eq = t.rfind('=');
        if (eq == std::string::npos)
            throw ParseError("tabulated line needs ` = 0|1`", lineno, 1);
        const std::string value = trim(t.substr(eq + 1));
        if (value != "0" && value != "1")
            throw ParseError("tabulated value must be 0 or 1", lineno, 1);
        out.members.push_back(parse_subset_line(out.universe, t.substr(0, eq)));
        out.values.push_back(value == "1" ? 1 : 0);
    }
    if (!have_universe) throw ParseError("missing universe line");
    return out;
}

}  // namespace binmeas
