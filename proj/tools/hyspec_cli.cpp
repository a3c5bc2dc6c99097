#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyspec/dsl.hpp"
#include "hyspec/spectrum.hpp"
#include "hyspec/verifier.hpp"

using namespace hyspec;

namespace {

Caps caps_from_env() {
  Caps caps;
  if (const char* s = std::getenv("HYSPEC_STRUCTURED_MAX")) caps.structured_max = std::atoi(s);
  if (const char* s = std::getenv("HYSPEC_TABLES_MAX")) caps.tables_max = std::atoi(s);
  return caps;
}

std::string strip_ws(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

// a generator is an element index or an element name (e.g. "(1,0)" in products)
int resolve_element(const FiniteRing& ring, const std::string& token) {
  const std::string t = strip_ws(token);
  bool numeric = !t.empty();
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
  if (numeric) {
    int v = std::stoi(t);
    if (v < 0 || v >= ring.size()) throw BadSpec("element index out of range: " + t);
    return v;
  }
  for (int a = 0; a < ring.size(); ++a)
    if (strip_ws(ring.name(a)) == t) return a;
  throw BadSpec("no element named " + token);
}

Ideal ideal_from_tokens(const FiniteRing& ring, const std::vector<std::string>& gens) {
  std::vector<int> idx;
  for (const std::string& g : gens) idx.push_back(resolve_element(ring, g));
  return ideal_generate(ring, idx);
}

std::string named_members(const FiniteRing& ring, const Bitset& members) {
  std::string s = "{";
  bool first = true;
  for (int a : members.members()) {
    if (!first) s += ", ";
    s += ring.name(a);
    first = false;
  }
  return s + "}";
}

struct Instance {
  FiniteRing ring;
  IdealLattice lattice;
  std::vector<Ideal> primes;
  SubSpace Y;
};

Instance load_instance(const std::string& dsl, const std::string& ysel) {
  Instance in{build_ring(parse_ring_dsl(dsl), caps_from_env()), {}, {}, {}};
  in.lattice = all_ideals(in.ring);
  in.primes = spec_primes(in.lattice);
  in.Y = select_subspace(ysel, in.ring, in.primes);
  return in;
}

std::string describe_y(const Instance& in) {
  std::string s = "{";
  for (std::size_t i = 0; i < in.Y.points.size(); ++i) {
    if (i) s += ", ";
    for (std::size_t p = 0; p < in.primes.size(); ++p)
      if (in.primes[p].members() == in.Y.points[i].members())
        s += "P" + std::to_string(p);
  }
  return s + "}";
}

void print_ideal_line(const Instance& in, const char* tag, const Ideal& I) {
  std::cout << tag << " = " << named_members(in.ring, I.members()) << "\n";
}

int cmd_verify(const std::string& corpus_path, const std::string& check,
               const std::string& format, long seed) {
  std::string text;
  if (corpus_path == "default") {
    text = default_corpus_json();
  } else {
    std::ifstream f(corpus_path);
    if (!f) throw CorpusError("cannot open corpus file: " + corpus_path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Corpus corpus = parse_corpus_json(text);
  Caps env = caps_from_env();
  if (std::getenv("HYSPEC_STRUCTURED_MAX")) corpus.caps.structured_max = env.structured_max;
  if (std::getenv("HYSPEC_TABLES_MAX")) corpus.caps.tables_max = env.tables_max;
  if (!check.empty()) corpus.checks = {check};
  if (seed >= 0) corpus.seed = static_cast<unsigned>(seed);

  std::vector<CheckReport> reports = run_all(corpus);
  nlohmann::ordered_json j = report_to_json(reports, corpus.seed, corpus.caps);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckReport& r : reports) {
      std::cout << r.id << "\t" << r.ring << "\tY=" << r.y << "\t"
                << verdict_name(r.verdict);
      if (r.verdict == Verdict::Fail) std::cout << "\t" << r.witness.dump();
      std::cout << "\n";
    }
    const auto& s = j["summary"];
    std::cout << "summary: pass=" << s["pass"] << " fail=" << s["fail"]
              << " vacuous=" << s["vacuous"] << " degenerate=" << s["degenerate"]
              << " skipped=" << s["skipped"] << "\n";
  }
  return any_failures(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring H_Y ideal calculator and theorem verifier"};
  app.require_subcommand(1);

  std::string dsl, ysel = "spec", ssel, check_id, format = "table";
  std::string corpus_path = "default";
  std::vector<std::string> gens;
  long seed = -1;
  bool strong = false;

  auto* ring_cmd = app.add_subcommand("ring", "ring-level queries");
  auto* ring_show = ring_cmd->add_subcommand("show", "elements and ring properties");
  ring_show->add_option("dsl", dsl)->required();

  auto* ideals_cmd = app.add_subcommand("ideals", "list the ideal lattice");
  ideals_cmd->add_option("dsl", dsl)->required();

  auto* spec_cmd = app.add_subcommand("spec", "primes and derived prime data");
  spec_cmd->add_option("dsl", dsl)->required();

  auto* hy_cmd = app.add_subcommand("hy", "H_Y-ideal queries");
  auto* hy_check = hy_cmd->add_subcommand("check", "H_Y / strong / fixed status");
  auto* hy_closure = hy_cmd->add_subcommand("closure", "I_H and I_SH");
  for (auto* c : {hy_check, hy_closure}) {
    c->add_option("dsl", dsl)->required();
    c->add_option("--y", ysel, "subspace selector: spec|max|min|indices:[..]");
    c->add_option("--ideal", gens, "ideal generators (indices or element names)")
        ->required();
  }

  auto* fixed_cmd = app.add_subcommand("fixed", "fixed/free status");
  fixed_cmd->add_option("dsl", dsl)->required();
  fixed_cmd->add_option("--y", ysel);
  fixed_cmd->add_option("--ideal", gens)->required();
  fixed_cmd->add_option("--s", ssel, "comma-separated point positions within Y");

  auto* rel_cmd = app.add_subcommand("relative", "relative H_Y verdict and factors");
  rel_cmd->add_option("dsl", dsl)->required();
  rel_cmd->add_option("--y", ysel);
  rel_cmd->add_option("--ideal", gens)->required();
  rel_cmd->add_flag("--strong", strong, "use the strong variant");

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem checks");
  verify_cmd->add_option("--corpus", corpus_path, "corpus JSON file or 'default'");
  verify_cmd->add_option("--check", check_id, "run a single check id");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  verify_cmd->add_option("--seed", seed, "override the corpus sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ring_show->parsed()) {
      FiniteRing ring = build_ring(parse_ring_dsl(dsl), caps_from_env());
      std::cout << "ring " << (ring.label().empty() ? dsl : ring.label())
                << ", " << ring.size() << " elements\n";
      std::string units, idem;
      for (int a = 0; a < ring.size(); ++a) {
        for (int b = 0; b < ring.size(); ++b)
          if (ring.mul(a, b) == ring.one()) {
            units += (units.empty() ? "" : ", ") + ring.name(a);
            break;
          }
        if (ring.mul(a, a) == a) idem += (idem.empty() ? "" : ", ") + ring.name(a);
      }
      std::cout << "units: {" << units << "}\nidempotents: {" << idem << "}\n";
      std::cout << "regular: " << (is_regular(ring) ? "yes" : "no") << "\n";
      std::cout << "root property: " << (has_root_property(ring) ? "yes" : "no") << "\n";
      std::cout << "arithmetical: " << (is_arithmetical(ring) ? "yes" : "no") << "\n";
    } else if (ideals_cmd->parsed()) {
      FiniteRing ring = build_ring(parse_ring_dsl(dsl), caps_from_env());
      IdealLattice lat = all_ideals(ring);
      for (std::size_t i = 0; i < lat.ideals.size(); ++i)
        std::cout << "I" << i << " = " << named_members(ring, lat.ideals[i].members())
                  << "\n";
    } else if (spec_cmd->parsed()) {
      FiniteRing ring = build_ring(parse_ring_dsl(dsl), caps_from_env());
      IdealLattice lat = all_ideals(ring);
      std::vector<Ideal> primes = spec_primes(lat);
      for (std::size_t i = 0; i < primes.size(); ++i)
        std::cout << "P" << i << " = " << named_members(ring, primes[i].members()) << "\n";
      auto list = [&](const char* tag, const std::vector<Ideal>& v) {
        std::cout << tag << ":";
        for (const Ideal& P : v) {
          for (std::size_t i = 0; i < primes.size(); ++i)
            if (primes[i].members() == P.members()) std::cout << " P" << i;
        }
        std::cout << "\n";
      };
      list("maximal", max_ideals(primes));
      list("minimal", min_primes(primes));
      std::cout << "bourbaki((0)):";
      for (const Ideal& B : bourbaki(zero_ideal(ring)))
        std::cout << " " << named_members(ring, B.members());
      std::cout << "\naffiliated:";
      for (const Ideal& B : affiliated_primes(ring))
        std::cout << " " << named_members(ring, B.members());
      std::cout << "\n";
    } else if (hy_check->parsed() || hy_closure->parsed() || fixed_cmd->parsed() ||
               rel_cmd->parsed()) {
      Instance in = load_instance(dsl, ysel);
      Ideal I = ideal_from_tokens(in.ring, gens);
      std::cout << "Y = " << describe_y(in) << "\n";
      print_ideal_line(in, "I", I);
      YCache c = make_ycache(in.Y, in.lattice);
      int i = in.lattice.find(I);
      if (hy_check->parsed()) {
        std::cout << "H_Y: " << (c.hy[i] ? "true" : "false")
                  << ", strong: " << (c.strong[i] ? "true" : "false")
                  << ", fixed: " << (c.hull_of_ideal[i].any() ? "true" : "false")
                  << ", Y-Hilbert: " << (c.kh_ideal[i] == I.members() ? "true" : "false")
                  << "\n";
      } else if (hy_closure->parsed()) {
        print_ideal_line(in, "I_H", in.lattice.ideals[c.ih[i]]);
        print_ideal_line(in, "I_SH", in.lattice.ideals[c.ish[i]]);
      } else if (fixed_cmd->parsed()) {
        bool fx = c.hull_of_ideal[i].any();
        std::cout << (fx ? "fixed" : "free") << "; h_Y(I) points:";
        for (int p : c.hull_of_ideal[i].members()) std::cout << " " << p;
        std::cout << "\n";
        if (!ssel.empty()) {
          Bitset S(in.Y.size());
          std::stringstream ss(ssel);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v >= static_cast<int>(in.Y.size()))
              throw BadSpec("S position out of range: " + tok);
            S.set(v);
          }
          std::cout << "fixed w.r.t. S: "
                    << (is_fixed_wrt(I, S, in.Y) ? "true" : "false") << "\n";
        }
      } else {
        RelativeResult rr = is_relative(c, i, strong);
        std::cout << (strong ? "strong " : "") << "relative: "
                  << (rr.relative ? "true" : "false") << "\n";
        std::vector<int> fs = factor_indices(c, i, strong);
        std::cout << "factors:";
        for (int j : fs)
          std::cout << " " << named_members(in.ring, in.lattice.ideals[j].members());
        std::cout << "\n";
        GreatestFactor g = greatest_factor(c, i, strong);
        std::cout << "closed-form factor set: " << named_members(in.ring, g.members)
                  << (g.is_ideal ? "" : " (not an ideal)") << "\n";
        if (g.poset_has_max)
          std::cout << "greatest factor exists"
                    << (g.matches_max ? " and matches the closed form" : "") << "\n";
      }
    } else if (verify_cmd->parsed()) {
      return cmd_verify(corpus_path, check_id, format, seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
