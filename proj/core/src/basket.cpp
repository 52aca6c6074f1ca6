#include "fpb/basket.hpp"

#include <algorithm>
#include <numeric>

namespace fpb {

BasketWord BasketWord::validate(std::span<const int> letters) {
  if (letters.size() % 2 != 0) {
    throw InvalidWord("basket word has odd length " + std::to_string(letters.size()), 0, -1);
  }
  const int n = static_cast<int>(letters.size() / 2);
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int v = letters[i];
    if (v < 1 || v > n) {
      throw InvalidWord("letter " + std::to_string(v) + " at position " + std::to_string(i) + " is outside 1.." +
                            std::to_string(n),
                        v, static_cast<std::ptrdiff_t>(i));
    }
    if (++count[static_cast<std::size_t>(v)] > 2) {
      throw InvalidWord("letter " + std::to_string(v) + " occurs more than twice", v, static_cast<std::ptrdiff_t>(i));
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] != 2) {
      throw InvalidWord("letter " + std::to_string(v) + " occurs " + std::to_string(count[static_cast<std::size_t>(v)]) +
                            " time(s), expected 2",
                        v, -1);
    }
  }
  return BasketWord(std::vector<int>(letters.begin(), letters.end()));
}

int BasketWord::at_cyclic(std::ptrdiff_t i) const {
  const auto m = static_cast<std::ptrdiff_t>(letters_.size());
  return letters_[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::pair<int, int> BasketWord::feet(int letter) const {
  int first = -1;
  for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
    if (letters_[static_cast<std::size_t>(i)] != letter) continue;
    if (first < 0) {
      first = i;
    } else {
      return {first, i};
    }
  }
  throw std::out_of_range("BasketWord::feet: no band " + std::to_string(letter));
}

bool is_permutation_of_1_to_n(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_conjectural(const Move& move) noexcept {
  return std::holds_alternative<PageRotation>(move) || std::holds_alternative<PageReflection>(move);
}

std::string describe(const Move& move) {
  struct Visitor {
    std::string operator()(const Rotation& m) const { return "rotate " + std::to_string(m.shift); }
    std::string operator()(const Reduction& m) const {
      return "reduce at " + std::to_string(m.position) + " (i=" + std::to_string(m.i) + ", j=" + std::to_string(m.j) + ")";
    }
    std::string operator()(const HandleSlide& m) const {
      return "slide foot " + std::to_string(m.foot) + " of band " + std::to_string(m.band) + " along band " +
             std::to_string(m.along) + (m.via == SlideEdge::Outer ? " (outer edge)" : " (inner edge)");
    }
    std::string operator()(const PageRotation& m) const { return "page-rotate " + std::to_string(m.shift); }
    std::string operator()(const PageReflection&) const { return "page-reflect"; }
  };
  return std::visit(Visitor{}, move);
}

BasketWord from_permutations(const PermutationsPresentation& p) {
  const int n = p.size();
  if (static_cast<int>(p.mu.size()) != n || !is_permutation_of_1_to_n(p.sigma) || !is_permutation_of_1_to_n(p.mu)) {
    throw std::invalid_argument("from_permutations: sigma and mu must be permutations of the same 1..n");
  }
  std::vector<int> letters(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    const auto mu_k = p.mu[static_cast<std::size_t>(k - 1)];
    letters[static_cast<std::size_t>(k - 1)] = mu_k;
    letters[static_cast<std::size_t>(n + p.sigma[static_cast<std::size_t>(k - 1)] - 1)] = mu_k;
  }
  return BasketWord::validate(letters);
}

std::optional<PermutationsPresentation> to_permutations(const BasketWord& w) {
  const int n = w.bands();
  const auto& a = w.letters();
  std::vector<int> first_half(a.begin(), a.begin() + n);
  if (!is_permutation_of_1_to_n(first_half)) return std::nullopt;
  // mu is read off the first half; sigma(k) is where the base letter k
  // reappears in the second half.
  PermutationsPresentation p;
  p.mu = first_half;
  std::vector<int> base_of(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) base_of[static_cast<std::size_t>(p.mu[static_cast<std::size_t>(k - 1)])] = k;
  p.sigma.assign(static_cast<std::size_t>(n), 0);
  for (int s = 1; s <= n; ++s) {
    const int base = base_of[static_cast<std::size_t>(a[static_cast<std::size_t>(n + s - 1)])];
    p.sigma[static_cast<std::size_t>(base - 1)] = s;
  }
  return p;
}

BasketWord rotate(const BasketWord& w, int k) {
  if (w.empty()) return w;
  std::vector<int> letters = w.letters();
  const int m = static_cast<int>(letters.size());
  const int shift = ((k % m) + m) % m;
  std::rotate(letters.begin(), letters.begin() + shift, letters.end());
  return BasketWord::validate(letters);
}

std::vector<Reduction> find_reductions(const BasketWord& w) {
  std::vector<Reduction> out;
  const int m = static_cast<int>(w.size());
  if (m < 4) return out;
  for (int p = 0; p < m; ++p) {
    const int i = w.at_cyclic(p);
    const int j = w.at_cyclic(p + 1);
    if (i != j && w.at_cyclic(p + 2) == i) out.push_back({p, i, j});
  }
  return out;
}

bool is_irreducible(const BasketWord& w) { return find_reductions(w).empty(); }

BasketWord apply_reduction(const BasketWord& w, const Reduction& m) {
  if (w.size() < 4 || m.i == m.j || w.at_cyclic(m.position) != m.i || w.at_cyclic(m.position + 1) != m.j ||
      w.at_cyclic(m.position + 2) != m.i) {
    throw InvalidMove("reduction pattern does not match at position " + std::to_string(m.position));
  }
  std::vector<int> kept;
  kept.reserve(w.size() - 4);
  for (int v : w.letters()) {
    if (v == m.i || v == m.j) continue;
    // Surviving depths keep their relative order.
    kept.push_back(v - (v > m.i ? 1 : 0) - (v > m.j ? 1 : 0));
  }
  return BasketWord::validate(kept);
}

namespace {

int other_foot(const BasketWord& w, int position) {
  const auto [a, b] = w.feet(w[static_cast<std::size_t>(position)]);
  return a == position ? b : a;
}

// The band edge joining left-of-P to right-of-Q is the outer edge when P is
// the left foot of the band.
SlideEdge edge_for(bool left_of_p, int p, int q) {
  return (left_of_p == (p < q)) ? SlideEdge::Outer : SlideEdge::Inner;
}

}  // namespace

namespace {

bool feet_interleave(const BasketWord& w, int a, int b) {
  const auto [ap, aq] = w.feet(a);
  const auto [bp, bq] = w.feet(b);
  return (ap < bp && bp < aq) != (ap < bq && bq < aq);
}

}  // namespace

bool is_admissible(const BasketWord& w, const HandleSlide& s) {
  const int x = s.along, y = s.band;
  if (feet_interleave(w, x, y)) return false;
  bool between_clear = true, outside_clear = true;
  for (int z = 1; z <= w.bands(); ++z) {
    if (z == x || z == y || !feet_interleave(w, z, x)) continue;
    if (z > std::min(x, y) && z < std::max(x, y)) {
      between_clear = false;
    } else {
      outside_clear = false;
    }
  }
  return between_clear || outside_clear;
}

std::vector<HandleSlide> find_slides(const BasketWord& w, SlideFilter filter) {
  std::vector<HandleSlide> out;
  const int m = static_cast<int>(w.size());
  if (w.bands() < 2) return out;
  for (int f = 0; f < m; ++f) {
    const int y = w[static_cast<std::size_t>(f)];
    for (bool left : {true, false}) {
      const int p = ((left ? f + 1 : f - 1) % m + m) % m;
      const int x = w[static_cast<std::size_t>(p)];
      if (x == y) continue;
      const int q = other_foot(w, p);
      const HandleSlide s{f, y, x, left, edge_for(left, p, q)};
      if (filter == SlideFilter::All || is_admissible(w, s)) out.push_back(s);
    }
  }
  return out;
}

BasketWord apply_slide(const BasketWord& w, const HandleSlide& s) {
  const int m = static_cast<int>(w.size());
  if (s.foot < 0 || s.foot >= m || w[static_cast<std::size_t>(s.foot)] != s.band || s.band == s.along) {
    throw InvalidMove("slide: foot does not carry band " + std::to_string(s.band));
  }
  const int p = (((s.left_of_along ? s.foot + 1 : s.foot - 1) % m) + m) % m;
  if (w[static_cast<std::size_t>(p)] != s.along) {
    throw InvalidMove("slide: band " + std::to_string(s.along) + " is not adjacent to foot " + std::to_string(s.foot));
  }
  const int q = other_foot(w, p);
  std::vector<int> letters = w.letters();
  letters.erase(letters.begin() + s.foot);
  const int q_after = q > s.foot ? q - 1 : q;
  const int insert_at = s.left_of_along ? q_after + 1 : q_after;
  letters.insert(letters.begin() + insert_at, s.band);
  return BasketWord::validate(letters);
}

BasketWord relabel_pages(const BasketWord& w, const PageRotation& g) {
  const int n = w.bands();
  if (n == 0) return w;
  const int k = ((g.shift % n) + n) % n;
  std::vector<int> letters = w.letters();
  for (int& v : letters) v = ((v + k - 1) % n) + 1;
  return BasketWord::validate(letters);
}

BasketWord relabel_pages(const BasketWord& w, const PageReflection&) {
  const int n = w.bands();
  std::vector<int> letters = w.letters();
  for (int& v : letters) v = n + 1 - v;
  return BasketWord::validate(letters);
}

BasketWord apply_move(const BasketWord& w, const Move& move) {
  struct Visitor {
    const BasketWord& w;
    BasketWord operator()(const Rotation& m) const { return rotate(w, m.shift); }
    BasketWord operator()(const Reduction& m) const { return apply_reduction(w, m); }
    BasketWord operator()(const HandleSlide& m) const { return apply_slide(w, m); }
    BasketWord operator()(const PageRotation& m) const { return relabel_pages(w, m); }
    BasketWord operator()(const PageReflection& m) const { return relabel_pages(w, m); }
  };
  return std::visit(Visitor{w}, move);
}

BasketWord canonical_form(const BasketWord& w) {
  // Booth's least-rotation scan.
  const auto& s = w.letters();
  const int m = static_cast<int>(s.size());
  if (m == 0) return w;
  std::vector<int> fail(static_cast<std::size_t>(2 * m), -1);
  int k = 0;
  auto at = [&](int i) { return s[static_cast<std::size_t>(i % m)]; };
  for (int j = 1; j < 2 * m; ++j) {
    int i = fail[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j - i - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j;
      fail[static_cast<std::size_t>(j - k)] = -1;
    } else {
      fail[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return rotate(w, k);
}

}  // namespace fpb
