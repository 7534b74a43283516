#include "chaincal/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace chaincal {

namespace {

std::vector<std::string> split_ws(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// "key=value" tokens of the header line.
std::map<std::string, std::string> header_fields(
    const std::vector<std::string>& toks, size_t from)
{
    std::map<std::string, std::string> out;
    for (size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw ParseError("bad header token: " + toks[i]);
        out[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return out;
}

std::vector<int64_t> parse_i64_list(const std::string& s)
{
    std::vector<int64_t> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

std::string i64_list(const std::vector<int64_t>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

void atomic_write(const std::string& path, const std::string& content)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ParseError("cannot open for writing: " + tmp);
        os << content;
        if (!os) throw ParseError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ParseError("rename failed: " + path);
    }
}

std::string read_text_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string complex_to_string(const CellComplex& X)
{
    std::ostringstream os;
    if (X.kind() == CellKind::cubical) {
        const CubicalGrid& g = X.grid();
        os << "complex cubical n=" << g.dim << " edge=" << rat_str(g.edge)
           << " offset=" << rat_vec_str(g.offset) << " bbox=" << i64_list(g.bbox_lo)
           << ',' << i64_list(g.bbox_hi);
        if (g.periodic()) os << " periodic=" << i64_list(g.periods);
        os << '\n';
    } else {
        os << "complex simplicial\n";
        const auto& coords = X.vertex_coords();
        for (size_t i = 0; i < coords.size(); ++i) {
            os << "vertex " << i;
            for (const Rat& c : coords[i]) os << ' ' << rat_str(c);
            os << '\n';
        }
    }
    for (int k = 0; k <= X.top_dim(); ++k)
        for (const Cell& c : X.cells(k)) {
            if (X.kind() == CellKind::cubical)
                os << "cell k=" << k << ' ' << c.key() << '\n';
            else
                os << "cell " << c.key() << '\n';
        }
    return os.str();
}

CellComplex complex_from_string(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty complex file");
    auto head = split_ws(line);
    if (head.size() < 2 || head[0] != "complex")
        throw ParseError("complex file must start with 'complex'");

    if (head[1] == "cubical") {
        auto fields = header_fields(head, 2);
        CubicalGrid g;
        g.dim = std::stoi(fields.at("n"));
        g.edge = parse_rat(fields.at("edge"));
        g.offset = parse_rat_vec(fields.at("offset"));
        auto bbox = parse_i64_list(fields.at("bbox"));
        if (static_cast<int>(bbox.size()) != 2 * g.dim)
            throw ParseError("bbox needs 2n integers");
        g.bbox_lo.assign(bbox.begin(), bbox.begin() + g.dim);
        g.bbox_hi.assign(bbox.begin() + g.dim, bbox.end());
        if (fields.count("periodic")) g.periods = parse_i64_list(fields.at("periodic"));
        g.validate();

        std::vector<Cell> cells;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto toks = split_ws(line);
            if (toks[0] != "cell" || toks.size() != 3 ||
                toks[1].rfind("k=", 0) != 0)
                throw ParseError("bad cell line: " + line);
            Cell c = Cell::parse(toks[2], CellKind::cubical);
            if (c.dim() != std::stoi(toks[1].substr(2)))
                throw ParseError("cell dimension mismatch: " + line);
            cells.push_back(std::move(c));
        }
        return CellComplex::cubical(std::move(g), cells);
    }

    if (head[1] != "simplicial") throw ParseError("unknown complex kind");
    std::vector<std::vector<Rat>> coords;
    std::vector<Cell> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (toks[0] == "vertex") {
            if (toks.size() < 3) throw ParseError("bad vertex line: " + line);
            size_t id = std::stoull(toks[1]);
            if (id != coords.size())
                throw ParseError("vertex ids must be consecutive from 0");
            std::vector<Rat> p;
            for (size_t i = 2; i < toks.size(); ++i) p.push_back(parse_rat(toks[i]));
            coords.push_back(std::move(p));
        } else if (toks[0] == "cell") {
            std::string key;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (i > 1) key += ' ';
                key += toks[i];
            }
            cells.push_back(Cell::parse(key, CellKind::simplicial));
        } else {
            throw ParseError("bad line in simplicial complex: " + line);
        }
    }
    return CellComplex::simplicial(std::move(coords), cells);
}

void write_complex(const CellComplex& X, const std::string& path)
{
    atomic_write(path, complex_to_string(X));
}

CellComplex read_complex(const std::string& path)
{
    return complex_from_string(read_text_file(path));
}

std::string chain_to_string(const Chain& c)
{
    std::ostringstream os;
    os << "chain k=" << c.dim() << '\n';
    for (const auto& [cell, m] : c.terms()) os << m << ' ' << cell.key() << '\n';
    return os.str();
}

Chain chain_from_string(const std::string& text, CellKind kind)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty chain file");
    auto head = split_ws(line);
    if (head.size() != 2 || head[0] != "chain" || head[1].rfind("k=", 0) != 0)
        throw ParseError("chain file must start with 'chain k=<dim>'");
    Chain c(std::stoi(head[1].substr(2)));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw ParseError("bad chain line: " + line);
        Int m(line.substr(0, sp));
        c.add(Cell::parse(line.substr(sp + 1), kind), m);
    }
    return c;
}

void write_chain(const Chain& c, const std::string& path)
{
    atomic_write(path, chain_to_string(c));
}

Chain read_chain(const std::string& path, CellKind kind)
{
    return chain_from_string(read_text_file(path), kind);
}

SAFormula read_formula(const std::string& path)
{
    return SAFormula::parse(read_text_file(path));
}

}  // namespace chaincal
