#include "pbk/harness.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <set>
#include <thread>

#include "pbk/alexander.hpp"
#include "pbk/decompose.hpp"
#include "pbk/hfk.hpp"
#include "pbk/rewrite.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

BraidWord torus(int p, int q) {
  if (p < 1 || q < 0) throw BadParams("torus needs p >= 1 and q >= 0");
  std::vector<int> letters;
  for (int r = 0; r < q; ++r) {
    for (int i = 1; i < p; ++i) letters.push_back(i);
  }
  return BraidWord(p, std::move(letters));
}

BraidWord t2(int k) {
  if (k < 0) throw BadParams("t2 needs k >= 0");
  return BraidWord(2, std::vector<int>(static_cast<std::size_t>(k), 1));
}

BraidWord figure3() { return BraidWord(3, {1, 1, 2, 2, 2, 1, 2, 2, 2, 2}); }

BraidWord connected_sum(const BraidWord& a, const BraidWord& b) {
  std::vector<int> letters = a.letters;
  for (int g : b.letters) letters.push_back(g + a.strands - 1);
  return BraidWord(a.strands + b.strands - 1, std::move(letters));
}

BraidWord disjoint_union(const BraidWord& a, const BraidWord& b) {
  std::vector<int> letters = a.letters;
  for (int g : b.letters) letters.push_back(g + a.strands);
  return BraidWord(a.strands + b.strands, std::move(letters));
}

namespace {

int int_param(const std::vector<std::string>& params, std::size_t k) {
  try {
    std::size_t used = 0;
    int v = std::stoi(params.at(k), &used);
    if (used != params[k].size()) throw BadParams("not an integer: " + params[k]);
    return v;
  } catch (const std::logic_error&) {
    throw BadParams("integer parameter " + std::to_string(k + 1) + " missing or invalid");
  }
}

BraidWord word_param(const std::vector<std::string>& params, std::size_t k) {
  if (k >= params.size()) throw BadParams("word parameter " + std::to_string(k + 1) + " missing");
  try {
    return parse_braid(params[k]);
  } catch (const std::logic_error& e) {
    throw BadParams(e.what());
  }
}

void expect_arity(const std::string& name, const std::vector<std::string>& params, std::size_t n) {
  if (params.size() != n) {
    throw BadParams(name + " takes " + std::to_string(n) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
}

bool is_least_rotation(const std::vector<int>& w) {
  for (std::size_t s = 1; s < w.size(); ++s) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      int a = w[(s + k) % w.size()], b = w[k];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

}  // namespace

BraidWord family(const std::string& name, const std::vector<std::string>& params) {
  if (name == "torus") {
    expect_arity(name, params, 2);
    return torus(int_param(params, 0), int_param(params, 1));
  }
  if (name == "t2") {
    expect_arity(name, params, 1);
    return t2(int_param(params, 0));
  }
  if (name == "figure3") {
    expect_arity(name, params, 0);
    return figure3();
  }
  if (name == "connected_sum") {
    expect_arity(name, params, 2);
    return connected_sum(word_param(params, 0), word_param(params, 1));
  }
  if (name == "disjoint_union") {
    expect_arity(name, params, 2);
    return disjoint_union(word_param(params, 0), word_param(params, 1));
  }
  throw UnknownFamily("unknown family '" + name + "'");
}

std::vector<BraidWord> corpus(int max_strands, int max_len) {
  std::vector<BraidWord> out;
  for (int n = 2; n <= max_strands; ++n) {
    std::set<CanonicalKey> seen;
    for (int len = 0; len <= max_len; ++len) {
      std::vector<int> letters(static_cast<std::size_t>(len), 1);
      while (true) {
        // The first word of a class in this order is a least rotation.
        if (is_least_rotation(letters)) {
          BraidWord w(n, letters);
          if (seen.insert(canonical_key(w)).second) out.push_back(std::move(w));
        }
        int k = len - 1;
        while (k >= 0 && letters[static_cast<std::size_t>(k)] == n - 1) letters[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++letters[static_cast<std::size_t>(k)];
      }
    }
  }
  return out;
}

std::vector<BraidWord> read_corpus(std::istream& in) {
  std::vector<BraidWord> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    words.push_back(parse_braid(line));
  }
  return words;
}

bool VerificationReport::passed() const {
  if (!decomposition_verified) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

VerificationReport verify(const BraidWord& w, std::size_t budget) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.word = w;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  };

  const LinkClass link = decompose(w, budget);
  r.components = link.components;
  r.splits = link.split_count();
  r.primes = link.prime_count();
  r.decomposition_verified = link.verified;
  check("decomposition verified", link.verified);

  const auto eg = euler_and_genus(w);
  r.euler = eg.euler;
  r.genus = eg.genus;
  const int g = r.genus;
  const bool non_split = r.splits == 1;

  r.fibered = true;
  for (const auto& piece : split_pieces(w)) r.fibered = r.fibered && fibered_positive(from_braid(piece));
  check("fibered pieces", r.fibered);

  r.predicted_top = predicted_top(r.splits, g);
  r.predicted_next = predicted_next_to_top(r.primes, r.components, r.splits, g);

  guarded("euler: skein engine", [&] { r.skein_euler = hfk_euler(w, budget); });
  guarded("euler: burau engine", [&] { r.burau_euler = alexander_burau(w); });
  if (r.skein_euler && r.burau_euler) {
    check("euler: skein == burau", *r.skein_euler == *r.burau_euler);
  }

  if (r.components == 1) {
    guarded("kauffman states", [&] {
      auto states = enumerate_states(build_diagram(w));
      r.kauffman_euler = state_sum(states);
      r.kauffman_histogram = bigraded_counts(states);
      const auto& hist = *r.kauffman_histogram;
      long long top_states = 0;
      bool next_band = true;
      bool nonpositive = true;
      for (const auto& [grading, count] : hist) {
        auto [m, a] = grading;
        if (a == g) top_states += count;
        if (a == g - 1 && m != 0 && m != -1) next_band = false;
        if (m > 0) nonpositive = false;
      }
      check("kauffman: state sum == skein", r.skein_euler && *r.kauffman_euler == *r.skein_euler);
      check("kauffman: unique top state at (0,g)", top_states == 1 && hist.count({0, g}) == 1);
      check("kauffman: states at g-1 have M in {0,-1}", next_band);
      check("kauffman: no positive Maslov grading", nonpositive);
    });
  }

  if (r.skein_euler) {
    const auto& e = *r.skein_euler;
    check("euler: integral exponents", e.integral_exponents());
    check("euler: palindromic", e.symmetric());
    if (non_split) {
      check("euler: top coefficient +1 at t^g", e.coefficient_at(g) == 1 && *e.max_doubled() == 2 * g);
      r.second_coefficient = e.coefficient_at(g - 1);
      const Coeff expected = -(r.primes + r.components - r.splits);
      check("second coefficient == -(p+|L|-s)", *r.second_coefficient == expected,
            std::to_string(*r.second_coefficient) + " vs " + std::to_string(expected));
      if (r.components == 1 && r.primes == 1) {
        check("prime knot: second coefficient == -1", *r.second_coefficient == -1);
      }
    } else {
      check("euler: split link vanishes", e.is_zero());
    }
    auto predicted = (r.predicted_top + r.predicted_next).euler();
    check("predicted groups match euler at g, g-1",
          predicted.coefficient_at(g) == e.coefficient_at(g) &&
              predicted.coefficient_at(g - 1) == e.coefficient_at(g - 1));
  }

  guarded("hfk: skein recursion", [&] {
    auto tt = top_two_via_skein(w, budget);
    r.skein_top = tt.top();
    r.skein_next = tt.next();
    check("hfk: top == predicted", *r.skein_top == r.predicted_top);
    check("hfk: next-to-top == predicted", *r.skein_next == r.predicted_next,
          r.skein_next->to_string() + " vs " + r.predicted_next.to_string());
  });

  if (non_split && g >= 1) {
    check("rank HFK_-1(g-1) >= rank HFK_0(g) = 1", r.predicted_next.maslov_total(-1) >= 1);
  }
  if (non_split) check("HFK_0(g-1) == 0", r.predicted_next.maslov_total(0) == 0);
  if (r.components == 1 && r.primes == 1) {
    check("prime knot: next-to-top == F[-1]", r.predicted_next == BigradedRank{{-1, g - 1, 1}});
  }

  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

std::vector<VerificationReport> verify_all(const std::vector<BraidWord>& words, unsigned threads,
                                           std::size_t budget) {
  std::vector<VerificationReport> out(words.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < words.size(); k = next++) out[k] = verify(words[k], budget);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

nlohmann::ordered_json to_json(const HalfLaurent& p) {
  auto j = nlohmann::ordered_json::array();
  for (auto [k, c] : p.pairs()) j.push_back({k, c});
  return j;
}

nlohmann::ordered_json to_json(const BigradedRank& r) {
  auto j = nlohmann::ordered_json::array();
  for (auto [m, a, rank] : r.triples()) j.push_back({m, a, rank});
  return j;
}

nlohmann::ordered_json to_json(const BigradingHistogram& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [grading, count] : h) {
    j[std::to_string(grading.first) + "," + std::to_string(grading.second)] = count;
  }
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  auto optional_poly = [](const std::optional<HalfLaurent>& p) {
    return p ? to_json(*p) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["word"] = to_string(r.word);
  j["components"] = r.components;
  j["splits"] = r.splits;
  j["primes"] = r.primes;
  j["euler"] = r.euler;
  j["genus"] = r.genus;
  j["verified"] = r.decomposition_verified;
  j["fibered"] = r.fibered;
  j["euler_skein"] = optional_poly(r.skein_euler);
  j["euler_burau"] = optional_poly(r.burau_euler);
  j["euler_kauffman"] = optional_poly(r.kauffman_euler);
  j["kauffman_histogram"] =
      r.kauffman_histogram ? to_json(*r.kauffman_histogram) : nlohmann::ordered_json(nullptr);
  j["second_coefficient"] =
      r.second_coefficient ? nlohmann::ordered_json(*r.second_coefficient) : nlohmann::ordered_json(nullptr);
  j["hfk"] = {
      {"predicted_top", to_json(r.predicted_top)},
      {"predicted_next", to_json(r.predicted_next)},
      {"skein_top", r.skein_top ? to_json(*r.skein_top) : nlohmann::ordered_json(nullptr)},
      {"skein_next", r.skein_next ? to_json(*r.skein_next) : nlohmann::ordered_json(nullptr)},
  };
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace pbk
