// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pbk/alexander.hpp"
#include "pbk/harness.hpp"
#include "pbk/hfk.hpp"
#include "pbk/kauffman.hpp"

using pbk::BigradedRank;
using pbk::BraidWord;
using pbk::VerificationReport;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  std::size_t checked = 0;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << number << "] " << title;
  if (o.checked) std::cout << " (" << o.checked << " words)";
  if (!o.note.empty()) std::cout << ": " << o.note;
  std::cout << std::endl;
  failures += o.pass ? 0 : 1;
}

std::vector<BraidWord> spec_corpus() {
  std::vector<BraidWord> words = pbk::corpus(4, 10);
  for (int k = 0; k <= 12; ++k) words.push_back(pbk::torus(2, k));
  for (int k = 0; k <= 8; ++k) words.push_back(pbk::torus(3, k));
  words.push_back(pbk::figure3());
  return words;
}

std::vector<BraidWord> random_combinations(const std::vector<BraidWord>& pool, int count) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<BraidWord> out;
  for (int k = 0; k < count; ++k) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    out.push_back(k % 2 == 0 ? pbk::connected_sum(a, b) : pbk::disjoint_union(a, b));
  }
  return out;
}

std::string dump_all(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += pbk::to_json(r).dump() + '\n';
  return out;
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  auto seconds_since = [](auto t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const auto base = spec_corpus();
  const auto extra = random_combinations(base, 200);
  std::vector<BraidWord> words = base;
  words.insert(words.end(), extra.begin(), extra.end());

  const auto run_started = std::chrono::steady_clock::now();
  const auto reports = pbk::verify_all(words);
  const double run_seconds = seconds_since(run_started);

  // 1. Euler characteristic agreement between independent engines.
  {
    Outcome o;
    for (const auto& r : reports) {
      ++o.checked;
      const auto w = pbk::to_string(r.word);
      if (!r.skein_euler || !r.burau_euler) {
        o.fail("engine failed on " + w);
      } else if (!(*r.skein_euler == *r.burau_euler)) {
        o.fail("skein and Burau differ on " + w);
      } else if (r.components == 1 && !(r.kauffman_euler && *r.kauffman_euler == *r.skein_euler)) {
        o.fail("Kauffman state sum differs on " + w);
      }
    }
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << run_seconds;
    if (run_seconds >= 300.0) o.fail("corpus run took " + t.str() + " s, over the 300 s target");
    else if (o.pass) o.note = "corpus run " + t.str() + " s";
    report(1, "oracle agreement: skein == Burau (== Kauffman for knots), exact", o);
  }

  // 2. Predicted next-to-top groups equal the skein recursion.
  {
    Outcome o;
    for (const auto& r : reports) {
      ++o.checked;
      const auto w = pbk::to_string(r.word);
      if (!r.skein_next || !r.skein_top) {
        o.fail("recursion failed on " + w);
      } else if (!(*r.skein_next == r.predicted_next)) {
        o.fail(w + ": recursion " + r.skein_next->to_string() + " vs formula " + r.predicted_next.to_string());
      } else if (!(*r.skein_top == r.predicted_top)) {
        o.fail(w + ": top groups differ");
      }
    }
    report(2, "next-to-top HFK: formula == skein recursion, exact bigraded", o);
  }

  // 3. Second coefficient and prime knots.
  {
    Outcome o;
    for (const auto& r : reports) {
      if (r.splits != 1) continue;
      ++o.checked;
      const auto w = pbk::to_string(r.word);
      const pbk::Coeff expected = -(r.primes + r.components - r.splits);
      if (!r.second_coefficient || *r.second_coefficient != expected) {
        o.fail(w + ": second coefficient is not -(p+|L|-s)");
      }
      if (r.components == 1 && r.primes == 1) {
        if (r.second_coefficient != -1) o.fail(w + ": prime knot without second coefficient -1");
        if (!(r.predicted_next == BigradedRank{{-1, r.genus - 1, 1}})) o.fail(w + ": prime knot group");
      }
    }
    report(3, "second coefficient -(p+|L|-s) on non-split words, -1 and F[-1] on prime knots", o);
  }

  // 4. The 10_139 diagram from figure3().
  {
    Outcome o;
    auto hist = pbk::bigraded_counts(pbk::enumerate_states(pbk::build_diagram(pbk::figure3())));
    long long top = 0;
    for (const auto& [grading, count] : hist) {
      if (grading.second == 4) top += count;
      if (grading.second == 3 && grading.first != 0 && grading.first != -1) {
        o.fail("state at A=3 with M=" + std::to_string(grading.first));
      }
    }
    if (top != 1 || hist[{0, 4}] != 1) o.fail("top Alexander grading is not a single (0,4) state");
    if (hist[{-1, 3}] < 2 || hist[{0, 3}] < 1) o.fail("states (-1,3), (-1,3), (0,3) missing");
    report(4, "figure3() states: unique (0,4), A=3 states in M {0,-1}, (-1,3) twice and (0,3) present", o);
  }

  // 5. Base values.
  {
    Outcome o;
    const BigradedRank j{{0, 1, 1}, {-1, 0, 2}, {-2, -1, 1}};
    if (!(pbk::hopf_j() == j)) o.fail("J constant");
    if (!(pbk::top_two_via_skein(BraidWord(2, {1, 1})).groups == j.alexander_at_least(0))) o.fail("Hopf top two");
    if (!(j.euler() == pbk::hfk_euler(BraidWord(2, {1, 1})))) o.fail("Hopf Euler characteristic");
    if (!(pbk::next_to_top_via_skein(BraidWord(2, {1, 1, 1})) == BigradedRank{{-1, 0, 1}})) o.fail("trefoil");
    if (!pbk::next_to_top_via_skein(BraidWord(1, {})).empty()) o.fail("unknot");
    if (!pbk::next_to_top_via_skein(BraidWord(2, {1})).empty()) o.fail("unknot as s_1");
    report(5, "base values: Hopf J, trefoil F[-1,0], unknot empty", o);
  }

  // 6. Ring of n unknots.
  {
    Outcome o;
    for (int n = 3; n <= 10; ++n) {
      try {
        if (!(pbk::rn_next_to_top(n) == BigradedRank{{-1, n - 1, n}})) o.fail("n = " + std::to_string(n));
      } catch (const std::exception& e) {
        o.fail("n = " + std::to_string(n) + ": " + e.what());
      }
    }
    report(6, "R_n next-to-top = F^n[-1, n-1] for 3 <= n <= 10", o);
  }

  // 7. Structural invariants over the whole corpus.
  {
    Outcome o;
    for (const auto& r : reports) {
      ++o.checked;
      const auto w = pbk::to_string(r.word);
      if (!r.passed()) {
        for (const auto& c : r.checks) {
          if (!c.passed) o.fail(w + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
        if (!r.decomposition_verified) o.fail(w + ": decomposition not verified");
      }
      if (!r.skein_euler) continue;
      if (r.splits == 1) {
        const auto& e = *r.skein_euler;
        if (!e.symmetric() || e.coefficient_at(r.genus) != 1 || e.max_doubled() != 2 * r.genus) {
          o.fail(w + ": Alexander polynomial shape");
        }
        // Recursion groups, so the bound is not read off the formula.
        if (r.genus >= 1 && r.skein_next && r.skein_top &&
            r.skein_next->maslov_total(-1) < r.skein_top->maslov_total(0)) {
          o.fail(w + ": rank bound at M = -1");
        }
      }
    }
    const auto stats = pbk::skein_stats();
    if (stats.genus_checks == 0) o.fail("no genus identity was checked");
    if (stats.genus_violations != 0) o.fail(std::to_string(stats.genus_violations) + " genus identity violations");
    if (o.pass) o.note = std::to_string(stats.genus_checks) + " genus identities checked, 0 violations";
    report(7, "structural: palindromic monic polynomial, genus identity, rank lower bound", o);
  }

  // 8. Determinism.
  {
    Outcome o;
    const auto first = dump_all(reports);
    const auto second = dump_all(pbk::verify_all(words));
    const auto serial = dump_all(pbk::verify_all(words, 1));
    o.checked = words.size();
    if (first != second) o.fail("second run differs");
    if (first != serial) o.fail("single-threaded run differs");
    report(8, "determinism: repeated corpus runs give byte-identical reports", o);
  }

  std::cout << "total " << seconds_since(started) << " s, " << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
