#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fpb {

// Positions inside a word are 0-based throughout the library. Letters are
// 1-based page depths: letter 1 is the band on the page nearest the viewer.

class InvalidWord : public std::invalid_argument {
 public:
  InvalidWord(const std::string& what, int letter, std::ptrdiff_t position)
      : std::invalid_argument(what), letter_(letter), position_(position) {}
  // Offending letter value, or 0 when the problem is the length.
  int letter() const noexcept { return letter_; }
  // Offending position, or -1 when not tied to a single position.
  std::ptrdiff_t position() const noexcept { return position_; }

 private:
  int letter_;
  std::ptrdiff_t position_;
};

class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A flat plumbing basket presentation (a_1, ..., a_2n): every letter in
// {1..n} occurs exactly twice. n = 0 is the bare disc.
class BasketWord {
 public:
  BasketWord() = default;

  // Throws InvalidWord.
  static BasketWord validate(std::span<const int> letters);
  static BasketWord validate(std::initializer_list<int> letters) {
    return validate(std::span<const int>(letters.begin(), letters.size()));
  }

  int bands() const noexcept { return static_cast<int>(letters_.size() / 2); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }
  // Cyclic access; any integer index.
  int at_cyclic(std::ptrdiff_t i) const;

  // The two positions of a letter, first < second.
  std::pair<int, int> feet(int letter) const;

  friend bool operator==(const BasketWord&, const BasketWord&) = default;
  friend auto operator<=>(const BasketWord& a, const BasketWord& b) { return a.letters_ <=> b.letters_; }

 private:
  explicit BasketWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

// (sigma : mu) in one-line notation: sigma[k-1] = sigma(k).
struct PermutationsPresentation {
  std::vector<int> sigma;  // connection permutation
  std::vector<int> mu;     // order permutation (top to bottom)

  int size() const noexcept { return static_cast<int>(sigma.size()); }
  friend bool operator==(const PermutationsPresentation&, const PermutationsPresentation&) = default;
};

bool is_permutation_of_1_to_n(std::span<const int> values);

// --- moves -----------------------------------------------------------------

struct Rotation {
  int shift = 0;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

// Cyclic triple (i, j, i) starting at `position`.
struct Reduction {
  int position = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

enum class SlideEdge { Outer, Inner };

// The foot at `foot` (a letter of band `band`) sits cyclically next to a foot
// of band `along`; it travels along that band's boundary edge to the matching
// side of the other foot. `left_of_along` tells whether the slid foot starts
// on the left of the adjacent foot (it then lands on the right of the far one).
struct HandleSlide {
  int foot = 0;
  int band = 0;
  int along = 0;
  bool left_of_along = true;
  SlideEdge via = SlideEdge::Outer;
  friend bool operator==(const HandleSlide&, const HandleSlide&) = default;
};

// Dihedral relabeling of page depths. Tagged conjectural: link invariance is
// checked by tests rather than assumed anywhere in the library.
struct PageRotation {
  int shift = 0;
  friend bool operator==(const PageRotation&, const PageRotation&) = default;
};
struct PageReflection {
  friend bool operator==(const PageReflection&, const PageReflection&) = default;
};

using Move = std::variant<Rotation, Reduction, HandleSlide, PageRotation, PageReflection>;

bool is_conjectural(const Move& move) noexcept;
std::string describe(const Move& move);

// --- operations ------------------------------------------------------------

BasketWord from_permutations(const PermutationsPresentation& p);
// nullopt when some letter occurs twice in one half (not factorable).
std::optional<PermutationsPresentation> to_permutations(const BasketWord& w);

// Cyclic left shift by k (any integer k); letters are not renumbered.
BasketWord rotate(const BasketWord& w, int k);

std::vector<Reduction> find_reductions(const BasketWord& w);
BasketWord apply_reduction(const BasketWord& w, const Reduction& m);
bool is_irreducible(const BasketWord& w);

enum class SlideFilter { Admissible, All };

// A slide is admissible when the slid band does not interleave the band it
// slides along, and every band interleaving the latter lies on one side of
// the pair in page depth: either none strictly between their depths, or none
// outside that range. Other slides can change the boundary link.
bool is_admissible(const BasketWord& w, const HandleSlide& s);

// Slides of a foot along a cyclically adjacent band, admissible ones by default.
std::vector<HandleSlide> find_slides(const BasketWord& w, SlideFilter filter = SlideFilter::Admissible);
BasketWord apply_slide(const BasketWord& w, const HandleSlide& m);

BasketWord relabel_pages(const BasketWord& w, const PageRotation& g);
BasketWord relabel_pages(const BasketWord& w, const PageReflection& g);

BasketWord apply_move(const BasketWord& w, const Move& m);

// Lexicographically least cyclic rotation.
BasketWord canonical_form(const BasketWord& w);

}  // namespace fpb
