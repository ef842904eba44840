#include "tricut/rational.hpp"

#include "tricut/errors.hpp"

#include <cctype>

namespace tricut {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!is_integer_literal(s))
    throw PreconditionViolated("malformed rational: '" + std::string(s) + "'");
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(buf, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw PreconditionViolated("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpz_class floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& r) { return r - Rat(floor(r)); }

}  // namespace tricut
