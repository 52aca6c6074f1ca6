#include "fpb/text_format.hpp"

#include <cctype>
#include <charconv>

namespace fpb {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<int> parse_list(std::string_view text, bool allow_digit_run) {
  std::vector<int> out;
  if (text.empty()) return out;
  if (allow_digit_run && text.find(',') == std::string_view::npos && text.size() > 1) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("expected a digit, got '" + std::string(1, c) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("expected an integer, got '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

BasketWord parse_word(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto letters = parse_list(s, false);
  return BasketWord::validate(letters);
}

std::string format_word(const BasketWord& w) { return join(w.letters(), ","); }

PermutationsPresentation parse_permutations(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto colon = s.find(':');
  if (colon == std::string::npos || s.find(':', colon + 1) != std::string::npos) {
    throw ParseError("expected exactly one ':' separating sigma and mu");
  }
  PermutationsPresentation p{parse_list(std::string_view(s).substr(0, colon), true),
                             parse_list(std::string_view(s).substr(colon + 1), true)};
  if (p.sigma.size() != p.mu.size()) throw ParseError("sigma and mu differ in length");
  if (!is_permutation_of_1_to_n(p.sigma)) throw ParseError("sigma is not a permutation of 1..n");
  if (!is_permutation_of_1_to_n(p.mu)) throw ParseError("mu is not a permutation of 1..n");
  return p;
}

std::string format_permutation(const std::vector<int>& p) {
  if (p.size() <= 9) {
    std::string out;
    for (int v : p) out += static_cast<char>('0' + v);
    return out;
  }
  return join(p, ",");
}

std::string format_permutations(const PermutationsPresentation& p) {
  return format_permutation(p.sigma) + ":" + format_permutation(p.mu);
}

}  // namespace fpb
