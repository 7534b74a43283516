#include "chaincal/semialg.hpp"

#include <algorithm>
#include <sstream>

namespace chaincal {

Polynomial Polynomial::constant(const Rat& c, int vars)
{
    Polynomial p;
    p.vars = vars;
    if (c != 0) p.terms[std::vector<int32_t>(vars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(int index, int vars)
{
    Polynomial p;
    p.vars = vars;
    std::vector<int32_t> e(vars, 0);
    e[index] = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

static std::vector<int32_t> pad(const std::vector<int32_t>& e, int vars)
{
    std::vector<int32_t> out = e;
    out.resize(vars, 0);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial out;
    out.vars = std::max(vars, o.vars);
    for (const auto& [e, c] : terms) out.terms[pad(e, out.vars)] += c;
    for (const auto& [e, c] : o.terms) {
        auto key = pad(e, out.vars);
        out.terms[key] += c;
        if (out.terms[key] == 0) out.terms.erase(key);
    }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = (it->second == 0) ? out.terms.erase(it) : std::next(it);
    return out;
}

Polynomial Polynomial::negate() const
{
    Polynomial out;
    out.vars = vars;
    for (const auto& [e, c] : terms) out.terms[e] = -c;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + o.negate();
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial out;
    out.vars = std::max(vars, o.vars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int32_t> e = pad(e1, out.vars);
            std::vector<int32_t> f = pad(e2, out.vars);
            for (size_t i = 0; i < e.size(); ++i) e[i] += f[i];
            out.terms[e] += c1 * c2;
            if (out.terms[e] == 0) out.terms.erase(e);
        }
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0) throw ParseError("negative exponent");
    Polynomial out = constant(1, vars);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rat Polynomial::eval(const std::vector<Rat>& p) const
{
    if (static_cast<int>(p.size()) < vars)
        throw ArityMismatch("point has fewer coordinates than the polynomial");
    Rat total = 0;
    for (const auto& [e, c] : terms) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int32_t rep = 0; rep < e[i]; ++rep) t *= p[i];
        total += t;
    }
    return total;
}

std::string Polynomial::str() const
{
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool sum = terms.size() > 1;
    if (sum) os << "(+ ";
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << ' ';
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || std::all_of(e.begin(), e.end(),
                                  [](int32_t x) { return x == 0; }))
            factors.push_back(rat_str(c));
        const char* names = "xyzw";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string var = (e.size() <= 4)
                                  ? std::string(1, names[i])
                                  : "x" + std::to_string(i + 1);
            if (e[i] == 1) factors.push_back(var);
            else
                factors.push_back("(^ " + var + " " + std::to_string(e[i]) + ")");
        }
        if (factors.size() == 1) os << factors[0];
        else {
            os << "(*";
            for (const auto& f : factors) os << ' ' << f;
            os << ')';
        }
    }
    if (sum) os << ')';
    return os.str();
}

SAFormula SAFormula::atom(Polynomial p, Rel r)
{
    SAFormula f;
    f.node = Node::atom;
    f.poly = std::move(p);
    f.rel = r;
    return f;
}

SAFormula SAFormula::conj(std::vector<SAFormula> cs)
{
    SAFormula f;
    f.node = Node::conj;
    f.children = std::move(cs);
    return f;
}

SAFormula SAFormula::disj(std::vector<SAFormula> cs)
{
    SAFormula f;
    f.node = Node::disj;
    f.children = std::move(cs);
    return f;
}

SAFormula SAFormula::negate(SAFormula g)
{
    SAFormula f;
    f.node = Node::neg;
    f.children.push_back(std::move(g));
    return f;
}

SAFormula SAFormula::always(bool value, int vars)
{
    // 0 <= 0 and 0 < 0.
    return atom(Polynomial::constant(0, vars), value ? Rel::le : Rel::lt);
}

int SAFormula::vars() const
{
    if (node == Node::atom) return poly.vars;
    int v = 0;
    for (const auto& c : children) v = std::max(v, c.vars());
    return v;
}

bool SAFormula::has_equality_atom() const
{
    if (node == Node::atom) return rel == Rel::eq;
    return std::any_of(children.begin(), children.end(),
                       [](const SAFormula& c) { return c.has_equality_atom(); });
}

bool SAFormula::eval(const std::vector<Rat>& p) const
{
    switch (node) {
        case Node::atom: {
            Rat v = poly.eval(p);
            switch (rel) {
                case Rel::lt: return v < 0;
                case Rel::le: return v <= 0;
                case Rel::eq: return v == 0;
                case Rel::ge: return v >= 0;
                case Rel::gt: return v > 0;
                case Rel::ne: return v != 0;
            }
            return false;
        }
        case Node::conj:
            return std::all_of(children.begin(), children.end(),
                               [&](const SAFormula& c) { return c.eval(p); });
        case Node::disj:
            return std::any_of(children.begin(), children.end(),
                               [&](const SAFormula& c) { return c.eval(p); });
        case Node::neg:
            return !children[0].eval(p);
    }
    return false;
}

std::string SAFormula::str() const
{
    std::ostringstream os;
    switch (node) {
        case Node::atom: {
            const char* op = "";
            switch (rel) {
                case Rel::lt: op = "<"; break;
                case Rel::le: op = "<="; break;
                case Rel::eq: op = "="; break;
                case Rel::ge: op = ">="; break;
                case Rel::gt: op = ">"; break;
                case Rel::ne: op = "!="; break;
            }
            os << '(' << op << ' ' << poly.str() << " 0)";
            break;
        }
        case Node::conj:
        case Node::disj: {
            os << (node == Node::conj ? "(and" : "(or");
            for (const auto& c : children) os << ' ' << c.str();
            os << ')';
            break;
        }
        case Node::neg:
            os << "(not " << children[0].str() << ')';
            break;
    }
    return os.str();
}

namespace {

struct Sexpr {
    std::string symbol;           // empty for lists
    std::vector<Sexpr> items;
    bool is_list() const { return symbol.empty(); }
};

struct Parser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
    }

    Sexpr parse()
    {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of formula");
        if (text[pos] == '(') {
            ++pos;
            Sexpr list;
            list.items = {};
            while (true) {
                skip_ws();
                if (pos >= text.size())
                    throw ParseError("unbalanced '(' in formula");
                if (text[pos] == ')') {
                    ++pos;
                    return list;
                }
                list.items.push_back(parse());
            }
        }
        size_t start = pos;
        while (pos < text.size() && !std::isspace(uint8_t(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        Sexpr s;
        s.symbol = text.substr(start, pos - start);
        if (s.symbol.empty()) throw ParseError("empty token in formula");
        return s;
    }
};

int var_index(const std::string& name)
{
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name == "w") return 3;
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(uint8_t(c)); })) {
        int idx = std::stoi(name.substr(1));
        if (idx >= 1) return idx - 1;
    }
    return -1;
}

Polynomial to_poly(const Sexpr& s)
{
    if (!s.is_list()) {
        int vi = var_index(s.symbol);
        if (vi >= 0) return Polynomial::variable(vi, vi + 1);
        return Polynomial::constant(parse_rat(s.symbol), 0);
    }
    if (s.items.empty()) throw ParseError("empty list in polynomial");
    if (!s.items[0].is_list()) {
        const std::string& op = s.items[0].symbol;
        if (op == "+") {
            Polynomial out = Polynomial::constant(0, 0);
            for (size_t i = 1; i < s.items.size(); ++i)
                out = out + to_poly(s.items[i]);
            return out;
        }
        if (op == "*") {
            Polynomial out = Polynomial::constant(1, 0);
            for (size_t i = 1; i < s.items.size(); ++i)
                out = out * to_poly(s.items[i]);
            return out;
        }
        if (op == "-") {
            if (s.items.size() == 2) return to_poly(s.items[1]).negate();
            if (s.items.size() < 3) throw ParseError("'-' needs arguments");
            Polynomial out = to_poly(s.items[1]);
            for (size_t i = 2; i < s.items.size(); ++i)
                out = out - to_poly(s.items[i]);
            return out;
        }
        if (op == "^") {
            if (s.items.size() != 3 || s.items[2].is_list())
                throw ParseError("'^' needs a base and an integer exponent");
            return to_poly(s.items[1]).pow(std::stoi(s.items[2].symbol));
        }
    }
    throw ParseError("bad polynomial expression");
}

SAFormula to_formula(const Sexpr& s)
{
    if (!s.is_list() || s.items.empty() || s.items[0].is_list())
        throw ParseError("formula must be (op ...)");
    const std::string& op = s.items[0].symbol;
    if (op == "and" || op == "or") {
        std::vector<SAFormula> cs;
        for (size_t i = 1; i < s.items.size(); ++i)
            cs.push_back(to_formula(s.items[i]));
        if (cs.empty()) throw ParseError("empty connective");
        return op == "and" ? SAFormula::conj(std::move(cs))
                           : SAFormula::disj(std::move(cs));
    }
    if (op == "not") {
        if (s.items.size() != 2) throw ParseError("'not' needs one argument");
        return SAFormula::negate(to_formula(s.items[1]));
    }
    Rel rel;
    if (op == "<") rel = Rel::lt;
    else if (op == "<=") rel = Rel::le;
    else if (op == "=") rel = Rel::eq;
    else if (op == ">=") rel = Rel::ge;
    else if (op == ">") rel = Rel::gt;
    else if (op == "!=") rel = Rel::ne;
    else throw ParseError("unknown operator: " + op);
    if (s.items.size() != 3)
        throw ParseError("relation needs two polynomial arguments");
    Polynomial lhs = to_poly(s.items[1]);
    Polynomial rhs = to_poly(s.items[2]);
    return SAFormula::atom(lhs - rhs, rel);
}

}  // namespace

SAFormula SAFormula::parse(const std::string& text)
{
    Parser p{text};
    Sexpr s = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing junk after formula");
    return to_formula(s);
}

SampleScheme parse_scheme(const std::string& s)
{
    if (s == "center") return SampleScheme::center;
    if (s == "corners") return SampleScheme::corners;
    if (s == "both") return SampleScheme::center_and_corners;
    throw ParseError("unknown scheme: " + s);
}

std::string scheme_str(SampleScheme s)
{
    switch (s) {
        case SampleScheme::center: return "center";
        case SampleScheme::corners: return "corners";
        case SampleScheme::center_and_corners: return "both";
    }
    return "center";
}

namespace {

std::vector<std::vector<Rat>> sample_points(const CubicalGrid& g,
                                            const std::vector<int64_t>& anchor,
                                            SampleScheme scheme)
{
    std::vector<std::vector<Rat>> pts;
    if (scheme != SampleScheme::corners) {
        std::vector<Rat> c = g.vertex_point(anchor);
        Rat half = g.edge / 2;
        for (auto& x : c) x += half;
        pts.push_back(std::move(c));
    }
    if (scheme != SampleScheme::center) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << g.dim); ++bits) {
            std::vector<int64_t> corner = anchor;
            for (int i = 0; i < g.dim; ++i)
                if (bits & (uint64_t(1) << i)) corner[i] += 1;
            pts.push_back(g.vertex_point(corner));
        }
    }
    return pts;
}

}  // namespace

Rasterization rasterize(const SAFormula& f, const CubicalGrid& g,
                        SampleScheme scheme)
{
    if (g.periodic())
        throw DimensionMismatch("rasterization needs a plain grid");
    g.validate();
    if (f.vars() > g.dim)
        throw ArityMismatch("formula has more variables than the grid");
    std::vector<Cell> included;
    std::vector<int64_t> anchor = g.bbox_lo;
    std::vector<int32_t> all_axes;
    for (int i = 0; i < g.dim; ++i) all_axes.push_back(i);
    while (true) {
        bool inside = true;
        for (const auto& p : sample_points(g, anchor, scheme))
            if (!f.eval(p)) {
                inside = false;
                break;
            }
        if (inside) included.push_back(Cell::cube(anchor, all_axes));
        int i = 0;
        for (; i < g.dim; ++i) {
            if (++anchor[i] < g.bbox_hi[i]) break;
            anchor[i] = g.bbox_lo[i];
        }
        if (i == g.dim) break;
    }
    Rasterization R{f, g, CellComplex::cubical(g, included), scheme};
    return R;
}

CellComplex thicken(const CellComplex& X, int64_t r)
{
    if (X.kind() != CellKind::cubical || X.grid().periodic())
        throw DimensionMismatch("thicken needs a plain cubical complex");
    if (r < 0) throw DimensionMismatch("negative thickening radius");
    const CubicalGrid& g = X.grid();
    int n = g.dim;
    std::vector<Cell> cells;
    for (int k = 0; k <= X.top_dim(); ++k)
        for (const Cell& c : X.cells(k)) cells.push_back(c);
    if (r > 0) {
        std::vector<int32_t> all_axes;
        for (int i = 0; i < n; ++i) all_axes.push_back(i);
        std::vector<Cell> tops;
        for (const Cell& c : X.cells(n)) tops.push_back(c);
        for (const Cell& t : tops) {
            std::vector<int64_t> delta(n, -r);
            while (true) {
                std::vector<int64_t> anchor = t.v;
                for (int i = 0; i < n; ++i) anchor[i] += delta[i];
                Cell nb = Cell::cube(anchor, all_axes);
                if (!g.cell_in_bbox(nb))
                    throw BBoxOverflow("thickening exceeds the grid bbox");
                cells.push_back(std::move(nb));
                int i = 0;
                for (; i < n; ++i) {
                    if (++delta[i] <= r) break;
                    delta[i] = -r;
                }
                if (i == n) break;
            }
        }
    }
    return CellComplex::cubical(g, cells);
}

DistanceInterval distance_estimate(const std::vector<Rat>& p,
                                   const Rasterization& R)
{
    const CellComplex& X = R.complex;
    const CubicalGrid& g = R.grid;
    int n = g.dim;
    if (static_cast<int>(p.size()) != n)
        throw ArityMismatch("point arity does not match the grid");
    const auto& tops = X.cells(n);
    if (tops.empty()) throw EmptySet("rasterization is empty");

    // hi: distance to the nearest corner over all included cells.
    // lo: every point of a cell is within one cell diameter of that
    // cell's far corner, so min over cells of (far corner) - diameter
    // bounds the set distance from below.
    bool first = true;
    Rat near2 = 0, far2 = 0;
    for (const Cell& t : tops) {
        Rat dn2 = 0, df2 = 0;
        for (int i = 0; i < n; ++i) {
            Rat lo = g.coord(i, t.v[i]);
            Rat hi = lo + g.edge;
            Rat a = p[i] - lo, b = p[i] - hi;
            Rat a2 = a * a, b2 = b * b;
            dn2 += std::min(a2, b2);
            df2 += std::max(a2, b2);
        }
        if (first || dn2 < near2) near2 = dn2;
        if (first || df2 < far2) far2 = df2;
        first = false;
    }
    // Enclosure slack well below edge/4 so hi - lo stays within the
    // documented n * edge * sqrt(n) budget.
    Rat slack = g.edge / 16;
    Rat diam_hi = g.edge * sqrt_upper_bound(Rat(n), slack);
    DistanceInterval out;
    out.hi = sqrt_upper_bound(near2, slack);
    out.lo = sqrt_lower_bound(far2, slack) - diam_hi;
    if (out.lo < 0) out.lo = 0;
    return out;
}

DistanceInterval distance_estimate(const std::vector<Rat>& p, const SAFormula& f,
                                   const CubicalGrid& g, SampleScheme scheme)
{
    return distance_estimate(p, rasterize(f, g, scheme));
}

}  // namespace chaincal
