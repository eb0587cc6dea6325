#include "polymatroid/rational.hpp"

#include <cctype>

namespace pm {

Rat parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw FormatError("empty rational");

  auto check_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    if (body[from] == '-' || body[from] == '+') ++from;
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(body[k]))) return false;
    }
    return true;
  };

  const std::size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!check_digits(0, body.size()))
      throw FormatError("malformed rational '" + body + "'");
  } else {
    if (!check_digits(0, slash) || !check_digits(slash + 1, body.size()))
      throw FormatError("malformed rational '" + body + "'");
  }

  Rat value;
  if (value.set_str(body, 10) != 0)
    throw FormatError("malformed rational '" + body + "'");
  if (value.get_den() == 0) throw FormatError("zero denominator in '" + body + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace pm
