#include "fpb/atlas.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "fpb/parallel.hpp"
#include "fpb/text_format.hpp"

namespace fpb {

using ojson = nlohmann::ordered_json;

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > cap) throw CapExceeded(n, cap);
}

struct WordHash {
  std::size_t operator()(const BasketWord& w) const noexcept {
    std::size_t h = w.size();
    for (int v : w.letters()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};

std::string key_of(const std::string& name, const LinkFingerprint& f) {
  return name == kUnknown ? std::string(kUnknown) + " " + to_json(f) : name;
}

std::vector<BasketWord> distinct_rotations(const BasketWord& w) {
  std::vector<BasketWord> out;
  for (int k = 0; k < std::max<int>(1, static_cast<int>(w.size())); ++k) {
    auto r = rotate(w, k);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

bool parity_allows(int components, int n) { return (components - (n + 1)) % 2 == 0; }

}  // namespace

std::uint64_t word_count(int n) {
  std::uint64_t c = 1;
  for (int k = 1; k <= n; ++k) c *= static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(2 * k - 1);
  return c;
}

void for_each_word(int n, Dedup dedup, const std::function<void(const BasketWord&)>& visit, int cap) {
  check_cap(n, cap);
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) letters.insert(letters.end(), {k, k});
  do {
    auto w = BasketWord::validate(letters);
    if (dedup == Dedup::Rotation && !(canonical_form(w) == w)) continue;
    visit(w);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<BasketWord> enumerate_words(int n, Dedup dedup, int cap) {
  std::vector<BasketWord> out;
  for_each_word(n, dedup, [&](const BasketWord& w) { out.push_back(w); }, cap);
  return out;
}

std::vector<PermutationsPresentation> enumerate_permutation_presentations(int n, int cap) {
  check_cap(n, cap);
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<PermutationsPresentation> out;
  auto sigma = base;
  do {
    auto mu = base;
    do {
      out.push_back({sigma, mu});
    } while (std::next_permutation(mu.begin(), mu.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Classification classify(const BasketWord& w, const NamedLinkTable& table) {
  Classification c;
  c.fingerprint = fingerprint(w);
  c.name = table.classify(c.fingerprint).value_or(std::string(kUnknown));
  return c;
}

std::vector<std::pair<Move, BasketWord>> applicable_moves(const BasketWord& w) {
  std::vector<std::pair<Move, BasketWord>> out;
  for (int k = 1; k < static_cast<int>(w.size()); ++k) out.emplace_back(Rotation{k}, rotate(w, k));
  for (const auto& r : find_reductions(w)) out.emplace_back(r, apply_reduction(w, r));
  for (const auto& s : find_slides(w)) out.emplace_back(s, apply_slide(w, s));
  return out;
}

std::vector<std::string> Atlas::names_at(int n) const {
  std::vector<std::string> out;
  for (const auto& l : links) {
    if (l.words_per_n.contains(n)) out.push_back(key_of(l.name, l.fingerprint));
  }
  return out;
}

std::optional<int> Atlas::first_appearance(const std::string& name) const {
  for (const auto& l : links) {
    if (l.name == name || key_of(l.name, l.fingerprint) == name) return l.first_n;
  }
  return std::nullopt;
}

Atlas build_atlas(int n_max, const AtlasOptions& options, const NamedLinkTable& table) {
  check_cap(n_max, options.cap);
  Atlas atlas;
  atlas.n_max = n_max;
  std::unordered_map<BasketWord, LinkFingerprint, WordHash> known;  // canonical word -> fingerprint

  for (int n = 0; n <= n_max; ++n) {
    const auto reps = enumerate_words(n, Dedup::Rotation, options.cap);
    std::vector<AtlasEntry> level(reps.size());
    parallel_for(reps.size(), [&](std::size_t i) {
      auto& e = level[i];
      e.word = reps[i];
      e.n = n;
      e.fingerprint = fingerprint(e.word);
      e.name = table.classify(e.fingerprint).value_or(std::string(kUnknown));
      const auto rots = distinct_rotations(e.word);
      e.words = rots.size();
      for (std::size_t k = 0; k < rots.size() && k < options.witnesses; ++k) e.witnesses.push_back(rots[k]);
    }, 8);
    for (const auto& e : level) known.emplace(e.word, e.fingerprint);

    if (options.check_moves) {
      struct Checked {
        std::uint64_t moves = 0, relabelings = 0;
        std::vector<MoveViolation> bad, bad_relabel;
      };
      std::vector<Checked> checked(level.size());
      parallel_for(level.size(), [&](std::size_t i) {
        const auto& w = level[i].word;
        const auto& f = level[i].fingerprint;
        auto& c = checked[i];
        // One rotation is recomputed from scratch; the rest share the key.
        if (w.size() > 1) {
          const auto r = rotate(w, 1);
          ++c.moves;
          if (!(fingerprint(r) == f)) c.bad.push_back({w, Rotation{1}, r});
        }
        for (const auto& [move, result] : applicable_moves(w)) {
          if (std::holds_alternative<Rotation>(move)) continue;
          ++c.moves;
          if (!(known.at(canonical_form(result)) == f)) c.bad.push_back({w, move, result});
        }
        std::vector<std::pair<Move, BasketWord>> relabels;
        for (int s = 1; s < n; ++s) relabels.emplace_back(PageRotation{s}, relabel_pages(w, PageRotation{s}));
        if (n > 1) relabels.emplace_back(PageReflection{}, relabel_pages(w, PageReflection{}));
        for (const auto& [move, result] : relabels) {
          ++c.relabelings;
          if (!(known.at(canonical_form(result)) == f)) c.bad_relabel.push_back({w, move, result});
        }
      }, 8);
      for (auto& c : checked) {
        atlas.moves_checked += c.moves;
        atlas.relabelings_checked += c.relabelings;
        atlas.violations.insert(atlas.violations.end(), c.bad.begin(), c.bad.end());
        atlas.relabeling_violations.insert(atlas.relabeling_violations.end(), c.bad_relabel.begin(), c.bad_relabel.end());
      }
    }
    atlas.entries.insert(atlas.entries.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }

  std::map<std::string, LinkSummary> by_key;
  for (const auto& e : atlas.entries) {
    const auto key = key_of(e.name, e.fingerprint);
    auto [it, fresh] = by_key.try_emplace(key);
    auto& s = it->second;
    if (fresh) {
      s.name = e.name;
      s.fingerprint = e.fingerprint;
      s.first_n = e.n;
      s.witness = e.word;
    }
    s.words_per_n[e.n] += e.words;
  }
  for (auto& [key, s] : by_key) atlas.links.push_back(std::move(s));
  std::stable_sort(atlas.links.begin(), atlas.links.end(), [](const LinkSummary& a, const LinkSummary& b) {
    return a.first_n < b.first_n;
  });
  return atlas;
}

std::string atlas_jsonl(const Atlas& atlas) {
  std::string out;
  for (const auto& e : atlas.entries) {
    ojson j;
    j["n"] = e.n;
    j["word"] = format_word(e.word);
    j["name"] = e.name;
    j["fingerprint"] = ojson::parse(to_json(e.fingerprint));
    j["words"] = e.words;
    ojson wit = ojson::array();
    for (const auto& w : e.witnesses) wit.push_back(format_word(w));
    j["witnesses"] = std::move(wit);
    out += j.dump();
    out += '\n';
  }
  return out;
}

// ---- four-band permutation table ------------------------------------------

namespace {

const std::vector<std::string> kSetA = {"1234", "1432", "2143", "2341", "3214", "3412", "4123", "4321"};
const std::vector<std::string> kSetB = {"1324", "1342", "2413", "2431", "3124", "3142", "4213", "4231"};

std::vector<PermutationTableRow> permutation_table_rows() {
  return {
      {"1234", "3_1", kSetA, "listed"},
      {"1234", "4_1", {}, "all other"},
      {"1243", "L2a1_u_O", kSetB, "listed"},
      {"1243", "L2a1#L2a1", {}, "all other"},
      {"2341", "L2a1_u_O", {}, "all"},
      {"2143", "L6a5", kSetB, "listed"},
      {"4321", "5-unlink", {}, "all"},
      {"1342", "unknot", {}, "all"},
  };
}

std::optional<std::string> expected_name(const std::vector<PermutationTableRow>& rows, const std::string& sigma,
                                         const std::string& mu) {
  std::optional<std::string> fallback;
  for (const auto& r : rows) {
    if (r.sigma != sigma) continue;
    if (r.mu_label == "listed") {
      if (std::find(r.mu_set.begin(), r.mu_set.end(), mu) != r.mu_set.end()) return r.expected;
    } else {
      fallback = r.expected;
    }
  }
  return fallback;
}

}  // namespace

PermutationTableReport reproduce_table1(const NamedLinkTable& table) {
  PermutationTableReport r;
  r.rows = permutation_table_rows();
  const auto all = enumerate_permutation_presentations(4);
  r.cells.resize(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    auto& c = r.cells[i];
    c.presentation = all[i];
    c.word = from_permutations(all[i]);
    c.name = classify(c.word, table).name;
    c.expected = expected_name(r.rows, format_permutation(all[i].sigma), format_permutation(all[i].mu));
  }, 8);
  for (const auto& c : r.cells) {
    if (!c.expected) r.unlisted.push_back(c);
    else if (!c.matches()) r.mismatches.push_back(c);
  }
  return r;
}

namespace {

struct RowTally {
  std::size_t cells = 0, matched = 0;
  std::map<std::string, std::size_t> found;
};

RowTally tally(const PermutationTableReport& r, const PermutationTableRow& row) {
  RowTally t;
  const auto rows = r.rows;
  for (const auto& c : r.cells) {
    const auto sigma = format_permutation(c.presentation.sigma);
    const auto mu = format_permutation(c.presentation.mu);
    if (sigma != row.sigma) continue;
    const bool listed = std::find(row.mu_set.begin(), row.mu_set.end(), mu) != row.mu_set.end();
    if (row.mu_label == "listed" && !listed) continue;
    if (row.mu_label == "all other") {
      bool in_other_row = false;
      for (const auto& o : rows) {
        if (o.sigma == row.sigma && o.mu_label == "listed" &&
            std::find(o.mu_set.begin(), o.mu_set.end(), mu) != o.mu_set.end()) {
          in_other_row = true;
        }
      }
      if (in_other_row) continue;
    }
    ++t.cells;
    if (c.name == row.expected) ++t.matched;
    ++t.found[c.name];
  }
  return t;
}

std::string found_text(const std::map<std::string, std::size_t>& found) {
  std::string s;
  for (const auto& [name, count] : found) {
    if (!s.empty()) s += ", ";
    s += name + " x" + std::to_string(count);
  }
  return s;
}

}  // namespace

std::string permutation_table_text(const PermutationTableReport& r) {
  std::ostringstream out;
  out << "link         sigma  mu                                        cells  match  computed\n";
  for (const auto& row : r.rows) {
    const auto t = tally(r, row);
    std::string mu = row.mu_label == "listed" ? "" : row.mu_label;
    for (const auto& m : row.mu_set) mu += (mu.empty() ? "" : ",") + m;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-6s %-41s %5zu  %5s  ", row.expected.c_str(), row.sigma.c_str(), mu.c_str(),
                  t.cells, t.matched == t.cells ? "yes" : "NO");
    out << line << found_text(t.found) << '\n';
  }
  std::map<std::string, std::map<std::string, std::size_t>> unlisted;
  for (const auto& c : r.unlisted) ++unlisted[format_permutation(c.presentation.sigma)][c.name];
  out << "unlisted cells: " << r.unlisted.size() << '\n';
  for (const auto& [sigma, found] : unlisted) out << "  sigma " << sigma << ": " << found_text(found) << '\n';
  out << "mismatches: " << r.mismatches.size() << '\n';
  for (const auto& c : r.mismatches) {
    out << "  (" << format_permutations(c.presentation) << ") word " << format_word(c.word) << " expected "
        << *c.expected << " computed " << c.name << '\n';
  }
  out << (r.all_match() ? "all printed rows match\n" : "printed rows do not all match\n");
  return out.str();
}

std::string permutation_table_json(const PermutationTableReport& r) {
  ojson j;
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    const auto t = tally(r, row);
    ojson o;
    o["sigma"] = row.sigma;
    o["mu"] = row.mu_label;
    o["mu_set"] = row.mu_set;
    o["expected"] = row.expected;
    o["cells"] = t.cells;
    o["matched"] = t.matched;
    o["computed"] = t.found;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  ojson cells = ojson::array();
  for (const auto& c : r.cells) {
    ojson o;
    o["sigma"] = format_permutation(c.presentation.sigma);
    o["mu"] = format_permutation(c.presentation.mu);
    o["word"] = format_word(c.word);
    o["name"] = c.name;
    o["expected"] = c.expected ? ojson(*c.expected) : ojson(nullptr);
    cells.push_back(std::move(o));
  }
  j["cells"] = std::move(cells);
  j["unlisted"] = r.unlisted.size();
  j["mismatches"] = r.mismatches.size();
  j["all_match"] = r.all_match();
  return j.dump();
}

// ---- fpbk ------------------------------------------------------------------

namespace {

// First word in `candidates` matching the entry, searched in parallel but
// reported in candidate order.
std::optional<BasketWord> first_match(const std::vector<BasketWord>& candidates, const NamedLink& entry) {
  std::vector<char> hit(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) { hit[i] = matches(entry, fingerprint(candidates[i])) ? 1 : 0; }, 8);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (hit[i]) return candidates[i];
  }
  return std::nullopt;
}

}  // namespace

FpbkResult fpbk_bound(const std::string& name, int n_max, const NamedLinkTable& table, int exhaustive_limit) {
  const auto* entry = table.find(name);
  if (!entry) throw std::invalid_argument("unknown link name: " + name);
  FpbkResult r;
  r.name = name;
  bool excluded_below = true;
  for (int n = 0; n <= n_max; ++n) {
    FpbkLevel level;
    level.n = n;
    if (!parity_allows(entry->fingerprint.components, n)) {
      level.status = FpbkLevel::Status::ParityExcluded;
    } else if (n <= exhaustive_limit) {
      const auto words = enumerate_words(n, Dedup::Rotation, std::max(n, kDefaultCap));
      level.words_searched = words.size();
      const auto hit = first_match(words, *entry);
      level.status = hit ? FpbkLevel::Status::Found : FpbkLevel::Status::Absent;
      if (hit) r.witness = *hit;
    } else {
      std::vector<BasketWord> staged;
      if (entry->word && entry->word->bands() == n) staged.push_back(*entry->word);
      std::optional<BasketWord> hit = staged.empty() ? std::nullopt : first_match(staged, *entry);
      level.words_searched = staged.size();
      if (!hit && n <= kDefaultCap) {
        std::vector<BasketWord> perms;
        for (const auto& p : enumerate_permutation_presentations(n)) perms.push_back(from_permutations(p));
        level.words_searched += perms.size();
        hit = first_match(perms, *entry);
      }
      if (!hit && n <= kDefaultCap) {
        const auto words = enumerate_words(n, Dedup::Rotation);
        level.words_searched += words.size();
        hit = first_match(words, *entry);
        if (!hit) level.status = FpbkLevel::Status::Absent;
      }
      if (hit) {
        level.status = FpbkLevel::Status::Found;
        r.witness = *hit;
      }
    }
    r.levels.push_back(level);
    if (level.status == FpbkLevel::Status::Found) {
      if (excluded_below) r.value = n;
      break;
    }
    if (level.status == FpbkLevel::Status::NotSearched) excluded_below = false;
    if (excluded_below) r.lower_bound = n + 1;
  }
  return r;
}

namespace {

const char* status_name(FpbkLevel::Status s) {
  switch (s) {
    case FpbkLevel::Status::ParityExcluded: return "parity-excluded";
    case FpbkLevel::Status::Absent: return "absent";
    case FpbkLevel::Status::Found: return "found";
    case FpbkLevel::Status::NotSearched: return "not-searched";
  }
  return "";
}

}  // namespace

std::string fpbk_text(const FpbkResult& r) {
  std::ostringstream out;
  out << r.name << ": ";
  if (r.value) out << "fpbk = " << *r.value;
  else if (r.witness) out << "fpbk <= " << r.levels.back().n << ", >= " << r.lower_bound;
  else out << "fpbk > " << (r.levels.empty() ? -1 : r.levels.back().n);
  out << '\n';
  for (const auto& l : r.levels) {
    out << "  n=" << l.n << " " << status_name(l.status);
    if (l.words_searched) out << " (" << l.words_searched << " words)";
    out << '\n';
  }
  if (r.witness) out << "  witness " << format_word(*r.witness) << '\n';
  return out.str();
}

std::string fpbk_json(const FpbkResult& r) {
  ojson j;
  j["name"] = r.name;
  j["fpbk"] = r.value ? ojson(*r.value) : ojson(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["witness"] = r.witness ? ojson(format_word(*r.witness)) : ojson(nullptr);
  ojson levels = ojson::array();
  for (const auto& l : r.levels) levels.push_back({{"n", l.n}, {"status", status_name(l.status)}, {"words", l.words_searched}});
  j["levels"] = std::move(levels);
  return j.dump();
}

// ---- move-graph search -----------------------------------------------------

namespace {

bool factorable_up_to_rotation(const BasketWord& w) {
  for (int k = 0; k < std::max<int>(1, static_cast<int>(w.size())); ++k) {
    if (to_permutations(rotate(w, k))) return true;
  }
  return false;
}

ReachabilityCase search(const BasketWord& start, int depth_cap) {
  ReachabilityCase c;
  c.word = start;
  std::unordered_map<BasketWord, BasketWord, WordHash> parent;
  std::deque<std::pair<BasketWord, int>> queue;
  parent.emplace(start, start);
  queue.emplace_back(start, 0);
  int radius = 0;
  while (!queue.empty()) {
    auto [w, d] = queue.front();
    queue.pop_front();
    radius = std::max(radius, d);
    if (factorable_up_to_rotation(w)) {
      c.reachable = true;
      c.depth = d;
      for (BasketWord x = w;; x = parent.at(x)) {
        c.path.push_back(x);
        if (x == start) break;
      }
      std::reverse(c.path.begin(), c.path.end());
      return c;
    }
    if (d == depth_cap) continue;
    for (const auto& s : find_slides(w)) {
      auto next = canonical_form(apply_slide(w, s));
      if (parent.try_emplace(next, w).second) queue.emplace_back(std::move(next), d + 1);
    }
  }
  c.depth = radius;
  return c;
}

}  // namespace

ReachabilityReport verify_theorem_3_1(int n_max, int depth_cap) {
  if (n_max > 4) throw std::invalid_argument("verify_theorem_3_1: n must be at most 4");
  ReachabilityReport r;
  r.n_max = n_max;
  r.depth_cap = depth_cap;
  std::vector<BasketWord> starts;
  for (int n = 1; n <= n_max; ++n) {
    for_each_word(n, Dedup::None, [&](const BasketWord& w) {
      if (!is_irreducible(w)) return;
      ++r.irreducible_words;
      if (canonical_form(w) == w) starts.push_back(w);
    });
  }
  r.cases.resize(starts.size());
  parallel_for(starts.size(), [&](std::size_t i) { r.cases[i] = search(starts[i], depth_cap); }, 4);
  for (const auto& c : r.cases) {
    if (c.reachable) ++r.depth_histogram[c.depth];
    else r.inconclusive.push_back(c);
  }
  return r;
}

std::string reachability_text(const ReachabilityReport& r) {
  std::ostringstream out;
  out << "irreducible words with 1 <= n <= " << r.n_max << ": " << r.irreducible_words << " (" << r.cases.size()
      << " rotation classes)\n";
  for (const auto& [d, count] : r.depth_histogram) out << "  reached with " << d << " slides: " << count << '\n';
  out << "inconclusive at depth cap " << r.depth_cap << ": " << r.inconclusive.size() << '\n';
  for (const auto& c : r.inconclusive) out << "  " << format_word(c.word) << " explored radius " << c.depth << '\n';
  for (const auto& c : r.cases) {
    if (!c.reachable || c.depth == 0) continue;
    out << "  " << format_word(c.word);
    for (std::size_t k = 1; k < c.path.size(); ++k) out << " -> " << format_word(c.path[k]);
    out << '\n';
  }
  return out.str();
}

}  // namespace fpb
