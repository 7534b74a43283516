/**
 * Text formats for complexes, chains, and formulas, with atomic writes
 * (write-then-rename) and deterministic canonical ordering.
 *
 * Complex file:
 *   complex cubical n=<dim> edge=<p/q> offset=<p/q,...> bbox=<lo...,hi...>
 *       [periodic=<c,...>]
 *   cell k=<dim> <anchor>|<axes>
 * or
 *   complex simplicial
 *   vertex <id> <coord> ...
 *   cell <v0> <v1> ...
 *
 * Chain file:
 *   chain k=<dim>
 *   <coeff> <cell-key>
 */
#pragma once

#include <string>

#include "chaincal/complex.hpp"
#include "chaincal/semialg.hpp"

namespace chaincal {

void atomic_write(const std::string& path, const std::string& content);

std::string complex_to_string(const CellComplex& X);
CellComplex complex_from_string(const std::string& text);
void write_complex(const CellComplex& X, const std::string& path);
CellComplex read_complex(const std::string& path);

std::string chain_to_string(const Chain& c);
Chain chain_from_string(const std::string& text, CellKind kind);
void write_chain(const Chain& c, const std::string& path);
Chain read_chain(const std::string& path, CellKind kind);

SAFormula read_formula(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace chaincal
