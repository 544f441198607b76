#include "lpmtk/rational.hpp"

#include "lpmtk/error.hpp"

namespace lpmtk {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw MalformedInputError("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw MalformedInputError("bad rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw MalformedInputError("bad rational literal: " + text);
  if (q.get_den() == 0) throw MalformedInputError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& value) {
  return value.get_str();
}

}  // namespace lpmtk
