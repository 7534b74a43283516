/**
 * Semi-algebraic set descriptions: polynomials with rational
 * coefficients, boolean sign-condition formulas with an s-expression
 * grammar, exact evaluation, cubical rasterization, grid thickening,
 * and certified distance enclosures. All evaluation is exact rational;
 * there is no floating-point path.
 */
#pragma once

#include "chaincal/complex.hpp"

namespace chaincal {

struct Polynomial {
    int vars = 0;
    std::map<std::vector<int32_t>, Rat> terms;  // exponent vector -> coeff

    static Polynomial constant(const Rat& c, int vars);
    static Polynomial variable(int index, int vars);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(int e) const;
    Polynomial negate() const;

    Rat eval(const std::vector<Rat>& p) const;
    bool is_zero() const { return terms.empty(); }
    std::string str() const;  // s-expression form
};

enum class Rel { lt, le, eq, ge, gt, ne };

struct SAFormula {
    enum class Node { atom, conj, disj, neg };
    Node node = Node::atom;
    Polynomial poly;  // atom: sign condition "poly rel 0"
    Rel rel = Rel::le;
    std::vector<SAFormula> children;

    static SAFormula atom(Polynomial p, Rel r);
    static SAFormula conj(std::vector<SAFormula> cs);
    static SAFormula disj(std::vector<SAFormula> cs);
    static SAFormula negate(SAFormula f);
    static SAFormula always(bool value, int vars);

    int vars() const;
    bool has_equality_atom() const;
    std::string str() const;

    /// Exact boolean evaluation at a rational point.
    bool eval(const std::vector<Rat>& p) const;

    /// Parse "(and (<= (+ (^ x 2) (^ y 2)) 1) ...)"; variables x,y,z,w
    /// or x1..xn, rational literals p/q.
    static SAFormula parse(const std::string& text);
};

enum class SampleScheme { center, corners, center_and_corners };

SampleScheme parse_scheme(const std::string& s);
std::string scheme_str(SampleScheme s);

struct Rasterization {
    SAFormula formula;
    CubicalGrid grid;
    CellComplex complex;
    SampleScheme scheme = SampleScheme::center;
};

/// Include a top cell iff every scheme sample point satisfies f; the
/// complex is the face closure of the included top cells.
Rasterization rasterize(const SAFormula& f, const CubicalGrid& g,
                        SampleScheme scheme = SampleScheme::center);

/// All top cells within Chebyshev distance r (in cells, on anchors) of a
/// top cell of X, plus face closure, plus X itself. thicken(X, 0) = X.
CellComplex thicken(const CellComplex& X, int64_t r);

struct DistanceInterval {
    Rat lo, hi;
};

/// Certified enclosure of the Euclidean distance from p to the
/// rasterized set: hi from the nearest included cell's nearest corner,
/// lo from far corners minus the cell diameter, clamped at zero.
DistanceInterval distance_estimate(const std::vector<Rat>& p,
                                   const Rasterization& R);
DistanceInterval distance_estimate(const std::vector<Rat>& p, const SAFormula& f,
                                   const CubicalGrid& g,
                                   SampleScheme scheme = SampleScheme::center);

}  // namespace chaincal
