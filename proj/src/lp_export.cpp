#include "maxekpp/lp_export.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace maxekpp {

namespace {

std::string number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

// First term prints as "w name" or "- w name"; later terms as
// " + w name" / " - w name". Unit coefficients drop the number.
void write_terms(std::ostream& out, const IlpModel& m,
                 const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const auto& term : terms) {
    const double mag = std::fabs(term.coeff);
    const bool negative = term.coeff < 0.0;
    if (first) {
      if (negative) out << "- ";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1.0) out << number(mag) << ' ';
    out << m.variables()[term.var].name();
  }
  if (first) out << '0';
}

const char* sense_text(ConstraintSense sense) {
  switch (sense) {
    case ConstraintSense::LessEqual: return "<=";
    case ConstraintSense::GreaterEqual: return ">=";
    case ConstraintSense::Equal: return "=";
  }
  return "<=";
}

}  // namespace

void export_lp(std::ostream& out, const IlpModel& m) {
  out << "\\ " << to_string(m.family()) << " model, n=" << m.n()
      << ", k=" << m.k();
  if (m.reduced) out << ", reduced";
  if (m.lb) out << ", lb=" << number(*m.lb);
  if (m.ub) out << ", ub=" << number(*m.ub);
  if (m.max_components) out << ", P=" << *m.max_components;
  out << '\n';

  out << "Maximize\n obj: ";
  write_terms(out, m, m.objective());
  out << '\n';

  out << "Subject To\n";
  int row = 0;
  for (const auto& c : m.constraints()) {
    out << "\\ " << c.tag << '\n';
    out << " c" << ++row << ": ";
    write_terms(out, m, c.terms);
    out << ' ' << sense_text(c.sense) << ' ' << number(c.rhs) << '\n';
  }

  out << "Bounds\n";
  for (const auto& var : m.variables())
    out << " 0 <= " << var.name() << " <= 1\n";

  out << "Binary\n";
  for (const auto& var : m.variables()) out << ' ' << var.name() << '\n';

  out << "End\n";
}

std::string export_lp_string(const IlpModel& m) {
  std::ostringstream out;
  export_lp(out, m);
  return out.str();
}

}  // namespace maxekpp
