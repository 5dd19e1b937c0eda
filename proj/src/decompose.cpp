#include "pbk/decompose.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "moves.hpp"
#include "pbk/rewrite.hpp"

namespace pbk {

namespace {

struct Factorization {
  std::vector<BraidWord> primes;
  bool verified = true;
};

// Fully searched prime words, shared by every decompose call.
class PrimeCache {
 public:
  bool contains(const CanonicalKey& key) {
    std::lock_guard lock(mutex_);
    return primes_.count(key) > 0;
  }
  void insert(CanonicalKey key) {
    std::lock_guard lock(mutex_);
    primes_.emplace(std::move(key), true);
  }

 private:
  std::mutex mutex_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> primes_;
};

PrimeCache& prime_cache() {
  static PrimeCache cache;
  return cache;
}

void factorize(const BraidWord& w, std::size_t budget, Factorization& out) {
  if (w.strands == 1) return;
  if (auto f = split_connected_sum(w)) {
    factorize(f->left, budget, out);
    factorize(f->right, budget, out);
    return;
  }

  auto key = canonical_key(w);
  if (prime_cache().contains(key)) {
    out.primes.push_back(w);
    return;
  }

  const int strands = w.strands;
  auto accept = [&](const std::string& s) {
    return split_connected_sum(detail::unpack(s, strands)).has_value();
  };
  std::string found;
  switch (detail::bfs(detail::pack(w), budget, accept, found)) {
    case detail::SearchOutcome::Found:
      factorize(detail::unpack(found, strands), budget, out);
      return;
    case detail::SearchOutcome::Exhausted:
      prime_cache().insert(std::move(key));
      out.primes.push_back(w);
      return;
    case detail::SearchOutcome::BudgetExceeded:
      out.verified = false;
      out.primes.push_back(w);
      return;
  }
}

}  // namespace

int LinkClass::prime_count() const {
  return std::accumulate(pieces.begin(), pieces.end(), 0, [](int acc, const SplitPiece& p) {
    return acc + static_cast<int>(p.prime_words.size());
  });
}

LinkClass decompose(const BraidWord& w, std::size_t budget) {
  LinkClass result;
  result.components = closure_components(w);
  for (const auto& piece : split_pieces(w)) {
    Factorization f;
    factorize(piece, budget, f);
    result.verified = result.verified && f.verified;
    SplitPiece sp;
    sp.unknot = f.primes.empty();
    sp.prime_words = std::move(f.primes);
    result.pieces.push_back(std::move(sp));
  }
  return result;
}

}  // namespace pbk
