#pragma once

// Line-oriented text formats: quiver DSL for algebras, plus module and
// two-term complex files.  Parse failures carry line/column positions.

#include <functional>
#include <stdexcept>
#include <string>

#include "silting/rep.hpp"
#include "silting/two_term.hpp"

namespace silting {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " +
                           msg),
        line(l),
        column(c) {}
};

struct ParsedAlgebra {
  std::uint32_t field = 0;  // 0: no field directive in the file
  AlgebraPtr algebra;
};

// `field <p>`; `vertices <id>+`; `arrow <name> : <src> -> <tgt>`;
// `relation <coef>? <name>(*<name>)+ (+ ...)`; '#' comments
ParsedAlgebra parse_algebra_text(const std::string& text);
ParsedAlgebra parse_algebra_file(const std::string& path);

using AlgebraResolver = std::function<AlgebraPtr(const std::string&)>;

struct ParsedModule {
  std::string name;
  std::string algebra_name;
  Representation rep;
};
// `module <name> over <algebra>`; `dims <vertex>:<dim> ...`;
// `map <arrow> = [[row],[row],...]`
ParsedModule parse_module_text(const std::string& text,
                               const AlgebraResolver& resolve);
ParsedModule parse_module_file(const std::string& path,
                               const AlgebraResolver& resolve);

struct ParsedComplex {
  std::string name;
  std::string algebra_name;
  TwoTermComplex complex;
};
// `complex <name> over <algebra>`; `deg -1: P(v)+...`; `deg 0: ...`;
// `d = [[entry,...],...]` with path-combination entries
ParsedComplex parse_complex_text(const std::string& text,
                                 const AlgebraResolver& resolve);
ParsedComplex parse_complex_file(const std::string& path,
                                 const AlgebraResolver& resolve);

std::string read_file(const std::string& path);

}  // namespace silting
