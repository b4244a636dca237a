#include "dgal/rat.hpp"

#include "dgal/errors.hpp"

namespace dgal {

Rat parse_rat(std::string_view text) {
  Rat r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace dgal
