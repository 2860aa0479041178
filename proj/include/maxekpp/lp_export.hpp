#pragma once

#include <iosfwd>
#include <string>

#include "maxekpp/ilp_model.hpp"

namespace maxekpp {

/// Writes the model in CPLEX LP format. Each constraint is preceded by a
/// comment line carrying its family tag. Output is a pure function of the
/// model: identical models export byte-identically. Numbers print in their
/// shortest round-trip form.
void export_lp(std::ostream& out, const IlpModel& m);

std::string export_lp_string(const IlpModel& m);

}  // namespace maxekpp
