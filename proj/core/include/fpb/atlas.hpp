#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpb/basket.hpp"
#include "fpb/invariants.hpp"
#include "fpb/named_links.hpp"

namespace fpb {

inline constexpr int kDefaultCap = 6;

class CapExceeded : public std::invalid_argument {
 public:
  CapExceeded(int n, int cap)
      : std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap)) {}
};

enum class Dedup { Rotation, None };

// (2n)! / 2^n.
std::uint64_t word_count(int n);

// Multiset permutations of {1,1,...,n,n} in lexicographic order; with
// Dedup::Rotation only words equal to their canonical_form are visited.
void for_each_word(int n, Dedup dedup, const std::function<void(const BasketWord&)>& visit, int cap = kDefaultCap);
std::vector<BasketWord> enumerate_words(int n, Dedup dedup, int cap = kDefaultCap);

// All (sigma, mu), sigma-major, both in lexicographic order; (n!)^2 of them.
std::vector<PermutationsPresentation> enumerate_permutation_presentations(int n, int cap = kDefaultCap);

struct Classification {
  std::string name;  // kUnknown when nothing matches
  LinkFingerprint fingerprint;
};

Classification classify(const BasketWord& w, const NamedLinkTable& table = NamedLinkTable::standard());

struct AtlasEntry {
  BasketWord word;  // canonical form
  int n = 0;
  LinkFingerprint fingerprint;
  std::string name;
  std::uint64_t words = 0;           // rotations of `word` that are distinct words
  std::vector<BasketWord> witnesses; // a few of those rotations
};

struct MoveViolation {
  BasketWord word;
  Move move;
  BasketWord result;
};

struct LinkSummary {
  std::string name;  // kUnknown entries are keyed by fingerprint JSON instead
  LinkFingerprint fingerprint;
  int first_n = 0;
  std::map<int, std::uint64_t> words_per_n;
  BasketWord witness;
};

struct Atlas {
  int n_max = 0;
  std::vector<AtlasEntry> entries;  // sorted by (n, word)
  std::vector<LinkSummary> links;   // sorted by (first_n, name)
  std::uint64_t moves_checked = 0;
  std::vector<MoveViolation> violations;
  // Page relabelings are recorded separately: they are checked, not assumed.
  std::uint64_t relabelings_checked = 0;
  std::vector<MoveViolation> relabeling_violations;

  // Names realized at exactly n (UNKNOWN entries by fingerprint JSON).
  std::vector<std::string> names_at(int n) const;
  std::optional<int> first_appearance(const std::string& name) const;
};

struct AtlasOptions {
  int cap = kDefaultCap;
  bool check_moves = true;
  std::size_t witnesses = 3;
};

Atlas build_atlas(int n_max, const AtlasOptions& options = {}, const NamedLinkTable& table = NamedLinkTable::standard());

// Every applicable rotation, reduction and admissible slide of w, with the
// resulting word; used for the on-the-fly invariance check.
std::vector<std::pair<Move, BasketWord>> applicable_moves(const BasketWord& w);

// JSON-lines: one AtlasEntry per line, sorted by (n, canonical word).
std::string atlas_jsonl(const Atlas& atlas);

// ---- four-band permutation table ------------------------------------------

struct PermutationTableCell {
  PermutationsPresentation presentation;
  BasketWord word;
  std::string name;
  std::optional<std::string> expected;  // nullopt where the table prints nothing
  bool matches() const { return !expected || *expected == name; }
};

struct PermutationTableRow {
  std::string sigma;
  std::string expected;       // printed link name
  std::vector<std::string> mu_set;  // printed mu values, empty for "all"/"all other"
  std::string mu_label;       // "listed", "all other", "all"
};

struct PermutationTableReport {
  std::vector<PermutationTableRow> rows;
  std::vector<PermutationTableCell> cells;  // all 576, sigma-major
  std::vector<PermutationTableCell> mismatches;
  std::vector<PermutationTableCell> unlisted;  // cells the table leaves unnamed

  bool all_match() const { return mismatches.empty(); }
};

PermutationTableReport reproduce_table1(const NamedLinkTable& table = NamedLinkTable::standard());
std::string permutation_table_text(const PermutationTableReport& r);
std::string permutation_table_json(const PermutationTableReport& r);

// ---- fpbk ------------------------------------------------------------------

struct FpbkLevel {
  int n = 0;
  enum class Status { ParityExcluded, Absent, Found, NotSearched } status = Status::NotSearched;
  std::uint64_t words_searched = 0;
};

struct FpbkResult {
  std::string name;
  std::optional<int> value;   // exact fpbk when a witness exists and all lower levels are excluded
  int lower_bound = 0;        // every n below this is excluded
  std::optional<BasketWord> witness;
  std::vector<FpbkLevel> levels;
};

// Levels n <= exhaustive_limit are searched over every word; above it the
// reference word, then permutation presentations, then all words are tried.
FpbkResult fpbk_bound(const std::string& name, int n_max, const NamedLinkTable& table = NamedLinkTable::standard(),
                      int exhaustive_limit = 4);
std::string fpbk_text(const FpbkResult& r);
std::string fpbk_json(const FpbkResult& r);

// ---- move-graph search -----------------------------------------------------

struct ReachabilityCase {
  BasketWord word;
  bool reachable = false;
  int depth = 0;                 // slides used, or the explored radius when unreachable
  std::vector<BasketWord> path;  // from word to a factorable word, rotations folded in
};

struct ReachabilityReport {
  int n_max = 0;
  int depth_cap = 0;
  std::uint64_t irreducible_words = 0;
  std::vector<ReachabilityCase> cases;       // one per rotation class
  std::vector<ReachabilityCase> inconclusive;
  std::map<int, std::uint64_t> depth_histogram;
};

// Irreducible words: no cyclic (i, j, i) pattern. The search moves through
// rotations (free) and admissible handle slides (one step each).
ReachabilityReport verify_theorem_3_1(int n_max, int depth_cap = 20);
std::string reachability_text(const ReachabilityReport& r);

}  // namespace fpb
