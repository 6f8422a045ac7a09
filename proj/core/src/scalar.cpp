#include "dageom/scalar.hpp"

#include <cctype>

namespace dageom {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.erase(s.begin());
  }

  auto finish = [negative](Rat r) { return negative ? -r : r; };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: " + text);
    return finish(Rat(mpz_class(num), mpz_class(den)));
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("malformed decimal: " + text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class n = mpz_class(ip) * scale + mpz_class(fp);
    return finish(Rat(n, scale));
  }

  if (!all_digits(s)) throw std::invalid_argument("malformed number: " + text);
  return finish(Rat(mpz_class(s)));
}

}  // namespace dageom
