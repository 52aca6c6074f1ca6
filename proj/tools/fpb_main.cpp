#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpb/atlas.hpp"
#include "fpb/diagram.hpp"
#include "fpb/invariants.hpp"
#include "fpb/parallel.hpp"
#include "fpb/planar_diagram.hpp"
#include "fpb/render.hpp"
#include "fpb/text_format.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace fpb;

constexpr int kDomainError = 1;

struct Options {
  std::string word;
  std::string name;
  std::string out;
  std::string dedup = "none";
  int n = 4;
  int fpbk_n = 6;
  int cap = kDefaultCap;
  int depth = 20;
  double scale = 1.0;
  bool json = false;
  bool classify = false;
  bool no_numbers = false;
  bool no_disc_label = false;
};

// Words are comma lists, or "sigma:mu" permutations presentations.
BasketWord read_word(const std::string& text) {
  if (text.find(':') != std::string::npos) return from_permutations(parse_permutations(text));
  return parse_word(text);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

ojson fingerprint_object(const LinkFingerprint& f) { return ojson::parse(to_json(f)); }

std::string move_kind(const Move& m) {
  if (std::holds_alternative<Rotation>(m)) return "rotation";
  if (std::holds_alternative<Reduction>(m)) return "reduction";
  if (std::holds_alternative<HandleSlide>(m)) return "slide";
  if (std::holds_alternative<PageRotation>(m)) return "page-rotation";
  return "page-reflection";
}

int cmd_validate(const Options& o) {
  const auto w = read_word(o.word);
  if (o.json) std::cout << ojson{{"word", format_word(w)}, {"n", w.bands()}, {"valid", true}}.dump() << '\n';
  else std::cout << "valid n=" << w.bands() << " " << format_word(w) << '\n';
  return 0;
}

int cmd_components(const Options& o) {
  const auto w = read_word(o.word);
  const int c = boundary_components(w).count;
  if (o.json) std::cout << ojson{{"word", format_word(w)}, {"components", c}}.dump() << '\n';
  else std::cout << c << '\n';
  return 0;
}

int cmd_pd(const Options& o) {
  const auto w = read_word(o.word);
  const auto d = to_planar_diagram(w);
  if (o.json) {
    std::cout << ojson{{"word", format_word(w)}, {"crossings", d.crossings.size()}, {"components", d.component_count},
                       {"pd", to_pd_text(d)}}.dump()
              << '\n';
  } else {
    std::cout << to_pd_text(d) << '\n';
  }
  return 0;
}

int cmd_invariants(const Options& o) {
  const auto w = read_word(o.word);
  const auto f = fingerprint(w);
  if (o.json) {
    ojson j{{"word", format_word(w)}};
    j["fingerprint"] = fingerprint_object(f);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "components " << f.components << '\n'
              << "jones      " << f.jones.to_string() << '\n'
              << "alexander  " << f.alexander.to_string() << '\n'
              << "linking    ";
    for (std::size_t i = 0; i < f.linking.size(); ++i) std::cout << (i ? "," : "") << f.linking[i];
    std::cout << '\n';
  }
  return 0;
}

int cmd_classify(const Options& o) {
  const auto w = read_word(o.word);
  const auto c = classify(w);
  if (o.json) {
    ojson j{{"word", format_word(w)}, {"name", c.name}};
    j["fingerprint"] = fingerprint_object(c.fingerprint);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << c.name << '\n' << to_json(c.fingerprint) << '\n';
  }
  return 0;
}

int cmd_reduce(const Options& o) {
  auto w = canonical_form(read_word(o.word));
  const auto start = w;
  ojson steps = ojson::array();
  if (!o.json) std::cout << "start " << format_word(w) << '\n';
  for (auto found = find_reductions(w); !found.empty(); found = find_reductions(w)) {
    const auto& r = found.front();
    w = apply_reduction(w, r);
    if (o.json) steps.push_back({{"move", describe(r)}, {"word", format_word(w)}});
    else std::cout << describe(r) << " -> " << format_word(w) << '\n';
  }
  if (o.json) {
    std::cout << ojson{{"word", format_word(start)}, {"steps", steps}, {"result", format_word(w)}}.dump() << '\n';
  } else {
    std::cout << "irreducible " << format_word(w) << '\n';
  }
  return 0;
}

int cmd_moves(const Options& o) {
  const auto w = read_word(o.word);
  auto moves = applicable_moves(w);
  for (int s = 1; s < w.bands(); ++s) moves.emplace_back(PageRotation{s}, relabel_pages(w, PageRotation{s}));
  if (w.bands() > 1) moves.emplace_back(PageReflection{}, relabel_pages(w, PageReflection{}));
  for (const auto& [move, result] : moves) {
    if (o.json) {
      std::cout << ojson{{"kind", move_kind(move)}, {"move", describe(move)}, {"conjectural", is_conjectural(move)},
                         {"result", format_word(result)}}.dump()
                << '\n';
    } else {
      std::cout << describe(move) << (is_conjectural(move) ? " [conjectural]" : "") << " -> " << format_word(result)
                << '\n';
    }
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto dedup = o.dedup == "rotation" ? Dedup::Rotation : Dedup::None;
  const auto words = enumerate_words(o.n, dedup, o.cap);
  std::vector<Classification> classes(o.classify ? words.size() : 0);
  if (o.classify) parallel_for(words.size(), [&](std::size_t i) { classes[i] = classify(words[i]); }, 8);
  Output out(o.out);
  auto& s = out.stream();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (o.json) {
      ojson j{{"word", format_word(words[i])}};
      if (o.classify) {
        j["name"] = classes[i].name;
        j["fingerprint"] = fingerprint_object(classes[i].fingerprint);
      }
      s << j.dump() << '\n';
    } else {
      s << format_word(words[i]);
      if (o.classify) s << ' ' << classes[i].name;
      s << '\n';
    }
  }
  return 0;
}

int cmd_atlas(const Options& o) {
  AtlasOptions options;
  options.cap = o.cap;
  const auto atlas = build_atlas(o.n, options);
  Output out(o.out);
  auto& s = out.stream();
  if (o.json) {
    s << atlas_jsonl(atlas);
  } else {
    for (int n = 0; n <= atlas.n_max; ++n) {
      s << "n=" << n << ":";
      for (const auto& l : atlas.links) {
        if (auto it = l.words_per_n.find(n); it != l.words_per_n.end()) s << ' ' << l.name << " x" << it->second;
      }
      s << '\n';
    }
    for (const auto& l : atlas.links) {
      s << "fpbk " << l.name << " = " << l.first_n;
      if (l.name == kUnknown) s << ' ' << to_json(l.fingerprint);
      s << '\n';
    }
    s << "moves checked " << atlas.moves_checked << ", violations " << atlas.violations.size() << '\n';
    s << "page relabelings checked " << atlas.relabelings_checked << ", violations "
      << atlas.relabeling_violations.size() << '\n';
  }
  for (const auto& v : atlas.violations) {
    std::cerr << "violation: " << format_word(v.word) << ' ' << describe(v.move) << " -> " << format_word(v.result)
              << '\n';
  }
  return atlas.violations.empty() ? 0 : kDomainError;
}

int cmd_table(const Options& o) {
  if (o.n != 4) throw std::invalid_argument("the table is defined for n = 4 only");
  const auto r = reproduce_table1();
  Output out(o.out);
  out.stream() << (o.json ? permutation_table_json(r) + "\n" : permutation_table_text(r));
  return r.all_match() ? 0 : kDomainError;
}

int cmd_fpbk(const Options& o) {
  const auto r = fpbk_bound(o.name, o.fpbk_n);
  std::cout << (o.json ? fpbk_json(r) + "\n" : fpbk_text(r));
  return 0;
}

int cmd_verify(const Options& o) {
  const auto r = verify_theorem_3_1(o.n, o.depth);
  if (o.json) {
    ojson cases = ojson::array();
    for (const auto& c : r.cases) {
      ojson path = ojson::array();
      for (const auto& w : c.path) path.push_back(format_word(w));
      cases.push_back({{"word", format_word(c.word)}, {"reachable", c.reachable}, {"depth", c.depth}, {"path", path}});
    }
    std::cout << ojson{{"n", r.n_max}, {"depth_cap", r.depth_cap}, {"irreducible_words", r.irreducible_words},
                       {"inconclusive", r.inconclusive.size()}, {"cases", cases}}.dump()
              << '\n';
  } else {
    std::cout << reachability_text(r);
  }
  return r.inconclusive.empty() ? 0 : kDomainError;
}

int cmd_render(const Options& o) {
  RenderSpec spec;
  spec.word = read_word(o.word);
  spec.output_path = o.out;
  spec.scale = o.scale;
  spec.show_band_numbers = !o.no_numbers;
  spec.show_disc_label = !o.no_disc_label;
  const auto r = o.out.empty() ? render_svg(spec) : write_svg(spec);
  if (o.out.empty()) std::cout << r.svg;
  else if (o.json) std::cout << ojson{{"out", o.out}, {"arcs", r.arcs}, {"breaks", r.breaks}}.dump() << '\n';
  else std::cout << "wrote " << o.out << ": " << r.arcs << " arcs, " << r.breaks << " breaks\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat plumbing basket surfaces and their boundary links"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON-lines output");

  auto word_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("word", o.word, "Basket word \"1,2,1,2\" or permutations \"1234:2341\"")->required();
    c->add_flag("--json", o.json, "Machine-readable JSON-lines output");
    return c;
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers;
  handlers.emplace_back(word_cmd("validate", "Check a word"), cmd_validate);
  handlers.emplace_back(word_cmd("components", "Number of boundary components"), cmd_components);
  handlers.emplace_back(word_cmd("pd", "Planar diagram code of the boundary link"), cmd_pd);
  handlers.emplace_back(word_cmd("invariants", "Jones, Alexander and linking numbers"), cmd_invariants);
  handlers.emplace_back(word_cmd("classify", "Name the boundary link"), cmd_classify);
  handlers.emplace_back(word_cmd("reduce", "Apply iji reductions greedily on the canonical rotation"), cmd_reduce);
  handlers.emplace_back(word_cmd("moves", "List applicable moves"), cmd_moves);

  auto* render = word_cmd("render", "SVG drawing of the basket");
  render->add_option("--out", o.out, "Output path (stdout when omitted)");
  render->add_option("--scale", o.scale, "Scale factor")->check(CLI::PositiveNumber);
  render->add_flag("--no-numbers", o.no_numbers, "Omit band numbers");
  render->add_flag("--no-disc-label", o.no_disc_label, "Omit the disc label");
  handlers.emplace_back(render, cmd_render);

  auto* enumerate = app.add_subcommand("enumerate", "List every word with n bands");
  enumerate->add_option("--n", o.n, "Band count")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--dedup", o.dedup, "rotation|none")->check(CLI::IsMember({"rotation", "none"}));
  enumerate->add_flag("--classify", o.classify, "Classify each word");
  enumerate->add_option("--cap", o.cap, "Enumeration cap");
  enumerate->add_option("--out", o.out, "Output path");
  enumerate->add_flag("--json", o.json, "Machine-readable JSON-lines output");
  handlers.emplace_back(enumerate, cmd_enumerate);

  auto* atlas = app.add_subcommand("atlas", "Classify every word up to n bands, checking move invariance");
  atlas->add_option("--n", o.n, "Largest band count")->check(CLI::NonNegativeNumber);
  atlas->add_option("--cap", o.cap, "Enumeration cap");
  atlas->add_option("--out", o.out, "Output path");
  atlas->add_flag("--json", o.json, "JSON-lines, one entry per canonical word");
  handlers.emplace_back(atlas, cmd_atlas);

  auto* table = app.add_subcommand("table", "Classify all permutations presentations with 4 bands");
  table->add_option("--n", o.n, "Band count (4)");
  table->add_option("--out", o.out, "Output path");
  table->add_flag("--json", o.json, "Machine-readable output");
  handlers.emplace_back(table, cmd_table);

  auto* fpbk = app.add_subcommand("fpbk", "Flat plumbing basket number of a named link");
  fpbk->add_option("name", o.name, "Link name, e.g. L4a1 or 5_2")->required();
  fpbk->add_option("--n", o.fpbk_n, "Largest band count searched")->check(CLI::NonNegativeNumber);
  fpbk->add_flag("--json", o.json, "Machine-readable output");
  handlers.emplace_back(fpbk, cmd_fpbk);

  auto* verify = app.add_subcommand("verify-thm31", "Reach a permutations presentation from every irreducible word");
  verify->add_option("--n", o.n, "Largest band count (at most 4)")->check(CLI::Range(0, 4));
  verify->add_option("--depth", o.depth, "Slide depth cap")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", o.json, "Machine-readable output");
  handlers.emplace_back(verify, cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) return handler(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 2;
}
