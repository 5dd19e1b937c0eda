#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pbk/alexander.hpp"
#include "pbk/decompose.hpp"
#include "pbk/harness.hpp"
#include "pbk/hfk.hpp"
#include "pbk/kauffman.hpp"
#include "pbk/seifert.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

struct WordArgs {
  std::vector<std::string> tokens;
  std::optional<int> strands;
  bool as_json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("word", tokens, "braid word, e.g. \"1 1 2\" or \"strands=3: 1^2 2\"")->required();
    cmd->add_option("--strands", strands, "number of strands (default: largest index + 1)");
    cmd->add_flag("--json", as_json, "print JSON");
  }
  pbk::BraidWord word() const { return pbk::parse_braid(join(tokens), strands); }
};

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_info(const WordArgs& args) {
  const auto w = args.word();
  const auto link = pbk::decompose(w);
  const auto eg = pbk::euler_and_genus(w);
  bool fibered = true;
  for (const auto& piece : pbk::split_pieces(w)) fibered = fibered && pbk::fibered_positive(pbk::from_braid(piece));
  json primes = json::array();
  for (const auto& piece : link.pieces) {
    for (const auto& p : piece.prime_words) primes.push_back(pbk::to_string(p));
  }
  json j{{"word", pbk::to_string(w)},
         {"components", link.components},
         {"splits", link.split_count()},
         {"primes", link.prime_count()},
         {"prime_words", primes},
         {"euler", eg.euler},
         {"genus", eg.genus},
         {"fibered", fibered},
         {"verified", link.verified},
         {"seifert_graph", pbk::to_string(pbk::from_braid(w))}};
  std::ostringstream text;
  text << "word        " << pbk::to_string(w) << '\n'
       << "|L|         " << link.components << '\n'
       << "s(L)        " << link.split_count() << '\n'
       << "p(L)        " << link.prime_count() << (link.verified ? "" : "  (unverified)") << '\n'
       << "chi         " << eg.euler << '\n'
       << "genus       " << eg.genus << '\n'
       << "fibered     " << (fibered ? "yes" : "no") << '\n'
       << "seifert     " << pbk::to_string(pbk::from_braid(w)) << '\n';
  emit(j, args.as_json, text.str());
  return 0;
}

int cmd_alexander(const WordArgs& args, const std::string& method) {
  const auto w = args.word();
  json j{{"word", pbk::to_string(w)}};
  std::ostringstream text;
  auto report = [&](const std::string& name, const pbk::HalfLaurent& p) {
    j[name] = pbk::to_json(p);
    text << name << ": " << p.to_string() << '\n';
  };
  if (method == "skein" || method == "all") {
    text << "conway: " << pbk::conway(w).to_string() << '\n';
    j["conway"] = pbk::conway(w).coefficients();
    report("skein", pbk::hfk_euler(w));
  }
  if (method == "burau" || method == "all") report("burau", pbk::alexander_burau(w));
  if (method == "kauffman" || (method == "all" && pbk::closure_components(w) == 1)) {
    report("kauffman", pbk::state_sum(pbk::enumerate_states(pbk::build_diagram(w))));
  }
  emit(j, args.as_json, text.str());
  return 0;
}

int cmd_hfk(const WordArgs& args) {
  const auto w = args.word();
  const auto link = pbk::decompose(w);
  const int g = pbk::euler_and_genus(w).genus;
  const auto top = pbk::predicted_top(link.split_count(), g);
  const auto next = pbk::predicted_next_to_top(link.prime_count(), link.components, link.split_count(), g);
  const auto tt = pbk::top_two_via_skein(w);
  json j{{"word", pbk::to_string(w)},
         {"genus", g},
         {"formula", {{"top", pbk::to_json(top)}, {"next", pbk::to_json(next)}}},
         {"recursion", {{"top", pbk::to_json(tt.top())}, {"next", pbk::to_json(tt.next())}}},
         {"agree", top == tt.top() && next == tt.next()}};
  std::ostringstream text;
  text << "genus g = " << g << '\n'
       << "formula    top " << top.to_string() << "   next " << next.to_string() << '\n'
       << "recursion  top " << tt.top().to_string() << "   next " << tt.next().to_string() << '\n';
  emit(j, args.as_json, text.str());
  return 0;
}

void print_report(const pbk::VerificationReport& r) {
  std::cout << pbk::to_string(r.word) << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
    std::cout << '\n';
  }
}

int cmd_verify(const WordArgs& args) {
  const auto r = pbk::verify(args.word());
  if (args.as_json) {
    std::cout << pbk::to_json(r, true).dump(2) << '\n';
  } else {
    print_report(r);
  }
  return r.passed() ? 0 : 1;
}

int cmd_corpus(int strands, int len, const std::string& file, bool run_verify, bool as_json, unsigned threads) {
  std::vector<pbk::BraidWord> words;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    words = pbk::read_corpus(in);
  } else {
    words = pbk::corpus(strands, len);
  }
  if (!run_verify) {
    if (as_json) {
      json j = json::array();
      for (const auto& w : words) j.push_back(pbk::to_string(w));
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& w : words) std::cout << pbk::to_string(w) << '\n';
    }
    return 0;
  }
  const auto reports = pbk::verify_all(words, threads);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed() ? 0 : 1;
  if (as_json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(pbk::to_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      if (!r.passed()) print_report(r);
    }
    std::cout << reports.size() - failed << '/' << reports.size() << " words pass\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_kauffman(const WordArgs& args) {
  const auto w = args.word();
  const auto states = pbk::enumerate_states(pbk::build_diagram(w));
  const auto hist = pbk::bigraded_counts(states);
  if (args.as_json) {
    json j{{"word", pbk::to_string(w)}, {"states", states.size()}, {"histogram", pbk::to_json(hist)}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& s : states) std::cout << pbk::to_string(s) << '\n';
  std::cout << states.size() << " states\n";
  for (const auto& [grading, count] : hist) {
    std::cout << "  (M=" << grading.first << ", A=" << grading.second << "): " << count << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of positive braid closures"};
  app.require_subcommand(1);

  WordArgs info_args, alex_args, hfk_args, verify_args, kauffman_args;
  info_args.attach(app.add_subcommand("info", "components, split and prime counts, genus, fiberedness"));

  auto* alex = app.add_subcommand("alexander", "Euler characteristic of HFK (symmetric Alexander polynomial)");
  alex_args.attach(alex);
  std::string method = "all";
  alex->add_option("--method", method, "engine")->check(CLI::IsMember({"skein", "burau", "kauffman", "all"}));

  hfk_args.attach(app.add_subcommand("hfk", "top and next-to-top HFK by formula and by skein recursion"));
  verify_args.attach(app.add_subcommand("verify", "cross-check every engine; exit status 1 on failure"));
  kauffman_args.attach(app.add_subcommand("kauffman", "list Kauffman states of a knot diagram"));

  auto* corp = app.add_subcommand("corpus", "enumerate (or read) a corpus of words");
  int strands = 3, len = 4;
  unsigned threads = 0;
  std::string file;
  bool run_verify = false, corpus_json = false;
  corp->add_option("--strands", strands, "maximum number of strands")->check(CLI::Range(2, pbk::kMaxStrands));
  corp->add_option("--len", len, "maximum word length")->check(CLI::NonNegativeNumber);
  corp->add_option("--file", file, "read words from a corpus file instead");
  corp->add_option("--threads", threads, "worker threads (0 = all cores)");
  corp->add_flag("--verify", run_verify, "verify every word");
  corp->add_flag("--json", corpus_json, "print JSON");

  auto* fam = app.add_subcommand("family", "build a word: torus P Q | t2 K | figure3 | connected_sum W1 W2 | disjoint_union W1 W2");
  std::string family_name;
  std::vector<std::string> family_params;
  fam->add_option("name", family_name)->required();
  fam->add_option("params", family_params);

  auto* rn = app.add_subcommand("rn", "next-to-top HFK of the ring of n unknots");
  int n = 3;
  rn->add_option("n", n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("info")) return cmd_info(info_args);
    if (app.got_subcommand("alexander")) return cmd_alexander(alex_args, method);
    if (app.got_subcommand("hfk")) return cmd_hfk(hfk_args);
    if (app.got_subcommand("verify")) return cmd_verify(verify_args);
    if (app.got_subcommand("kauffman")) return cmd_kauffman(kauffman_args);
    if (app.got_subcommand("corpus")) return cmd_corpus(strands, len, file, run_verify, corpus_json, threads);
    if (app.got_subcommand("family")) {
      std::cout << pbk::to_string(pbk::family(family_name, family_params)) << '\n';
      return 0;
    }
    if (app.got_subcommand("rn")) {
      auto r = pbk::rn_next_to_top(n);
      std::cout << r.to_string() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
