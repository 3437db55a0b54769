#include "jobconfig.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace nabscat::cli {

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty coefficient");

  auto parse_real = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number '" + t + "'");
    return v;
  };

  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // split at the last top-level sign (not a leading sign, not an exponent sign)
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

std::vector<std::complex<double>> parse_coefficients(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_complex(part));
  if (out.empty()) throw std::invalid_argument("--coeffs: no coefficients given");
  return out;
}

}  // namespace nabscat::cli
