#include "tcla/rational.hpp"

#include <cctype>
#include <string>

#include "tcla/errors.hpp"

namespace tcla {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

}  // namespace

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) throw InputError("bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(parse_int(num));

  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("bad rational '" + std::string(text) + "'");
  }
  Int d = parse_int(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat q(parse_int(num), d);
  q.canonicalize();
  return q;
}

std::string to_fixed(const Rat& q, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Int num = abs(q.get_num()) * scale * 2 + q.get_den();
  Int den = q.get_den() * 2;
  Int scaled = num / den;
  const bool negative = sgn(q) < 0 && scaled != 0;

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace tcla
