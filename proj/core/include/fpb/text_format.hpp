#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fpb/basket.hpp"

namespace fpb {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "1,2,3,4,1,2,3,4", optionally parenthesized; whitespace is ignored and the
// empty string is the bare disc. Throws ParseError on syntax, InvalidWord on
// content.
BasketWord parse_word(std::string_view text);
std::string format_word(const BasketWord& w);

// "sigma:mu", each side either a run of digits ("1243") or a comma list
// ("3,4,5,1,2,6"). Both sides must be permutations of one common size.
PermutationsPresentation parse_permutations(std::string_view text);
// Digit runs when n <= 9, comma lists otherwise.
std::string format_permutations(const PermutationsPresentation& p);
std::string format_permutation(const std::vector<int>& p);

}  // namespace fpb
