#include "mdv/rational.hpp"

#include <cctype>

#include "mdv/errors.hpp"

namespace mdv {

Rat rat(long num, long den) {
  if (den == 0) throw Error("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw Error("rat_parse: malformed rational '" + s + "'");
  Rat r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) throw Error("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rat rat_factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rat(z);
}

Rat rat_binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rat(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rat(z);
}

}  // namespace mdv
