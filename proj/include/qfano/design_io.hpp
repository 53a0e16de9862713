// Text serialization of designs and parallelisms.
//
// Design file grammar:
//   #qfd 1
//   #field q=p^m poly=c0,c1,...,cm alpha=a
//   #ambient n=N
//   TAG k=K v1;v2[;v3]         one block per line, vectors as digit strings
//
// Parallelism file: one spread per line, members joined by ';', each member
// a ','-separated pair of basis vectors.
#ifndef QFANO_DESIGN_IO_HPP
#define QFANO_DESIGN_IO_HPP

#include <stdexcept>
#include <string>

#include "qfano/construction.hpp"

namespace qfano {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string emit_design(const Field& f, const Design& d);

struct ParsedDesign {
    Field field;
    Design design;
};

/// Parses a design file.  The field presentation in the header must match
/// the built-in table for its (p, m).
ParsedDesign parse_design(const std::string& text);

std::string emit_parallelism(const Parallelism& p);
Parallelism parse_parallelism(const Field& f, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace qfano

#endif
