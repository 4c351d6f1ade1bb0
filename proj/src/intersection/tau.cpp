#include "twp/intersection/tau.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <functional>
#include <map>

#include "json.hpp"
#include "twp/errors.hpp"
#include "twp/tightpoly/store.hpp"

namespace twp {

TauKey::TauKey(int g, std::vector<int> d) : genus(g), indices(std::move(d)) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
}

bool TauKey::dimension_ok() const {
  long sum = 0;
  for (int d : indices) sum += d;
  return sum == 3L * genus - 3 + size();
}

std::string TauKey::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += " ";
    out += "tau_" + std::to_string(indices[i]);
  }
  return out + ">_" + std::to_string(genus);
}

std::size_t TauKeyHash::operator()(const TauKey& k) const noexcept {
  std::size_t seed = static_cast<std::size_t>(k.genus);
  boost::hash_combine(seed, boost::hash_range(k.indices.begin(), k.indices.end()));
  return seed;
}

namespace {

Rational dfact(long n) { return Rational(double_factorial(n)); }

// value -> multiplicity, largest value first
using Multiset = std::map<int, int, std::greater<>>;

Multiset to_multiset(const std::vector<int>& v) {
  Multiset m;
  for (int x : v) ++m[x];
  return m;
}

void check_key(const TauKey& key) {
  if (key.genus < 0) throw UserError("negative genus in " + key.to_string());
  for (int d : key.indices) {
    if (d < 0) throw UserError("negative index in " + key.to_string());
  }
  if (!key.stable()) throw UserError("unstable correlator " + key.to_string());
}

}  // namespace

bool IntersectionEngine::lookup(const TauKey& key, Rational& out) const {
  std::shared_lock lock(mutex_);
  const auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void IntersectionEngine::insert(const TauKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
}

Rational IntersectionEngine::get(const TauKey& key) {
  check_key(key);
  if (!key.dimension_ok()) return 0;
  Rational value;
  if (lookup(key, value)) return value;
  value = compute(key);
  insert(key, value);
  return value;
}

Rational IntersectionEngine::compute(const TauKey& key) {
  const int g = key.genus;
  const int n = key.size();
  if (g == 0 && n == 3) return 1;  // dimension forces tau_0^3
  if (g == 1 && n == 1) return Rational(1, 24);

  // indices are descending, so the smallest sits at the back
  const int smallest = key.indices.back();
  if (smallest == 0) {
    std::vector<int> rest(key.indices.begin(), key.indices.end() - 1);
    Rational sum = 0;
    const Multiset ms = to_multiset(rest);
    for (const auto& [v, mult] : ms) {
      if (v == 0) continue;
      std::vector<int> lowered = rest;
      *std::find(lowered.begin(), lowered.end(), v) = v - 1;
      sum += mult * get(TauKey(g, std::move(lowered)));
    }
    return sum;
  }
  if (smallest == 1) {
    std::vector<int> rest(key.indices.begin(), key.indices.end() - 1);
    return (2 * g - 2 + n - 1) * get(TauKey(g, std::move(rest)));
  }
  return virasoro(key);
}

// Recursion on the largest index k+1 >= 2.
Rational IntersectionEngine::virasoro(const TauKey& key) {
  const int g = key.genus;
  const int k = key.indices.front() - 1;
  const std::vector<int> rest(key.indices.begin() + 1, key.indices.end());
  const Multiset ms = to_multiset(rest);

  Rational total = 0;
  for (const auto& [v, mult] : ms) {
    std::vector<int> merged = rest;
    *std::find(merged.begin(), merged.end(), v) = k + v;
    const TauKey next(g, std::move(merged));
    if (!next.stable()) continue;
    total += mult * dfact(2 * k + 2 * v + 1) / dfact(2 * v - 1) * get(next);
  }

  Rational split_sum = 0;
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    const Rational weight = dfact(2 * r + 1) * dfact(2 * s + 1);

    if (g >= 1) {
      std::vector<int> idx = rest;
      idx.push_back(r);
      idx.push_back(s);
      const TauKey next(g - 1, std::move(idx));
      if (next.stable()) split_sum += weight * get(next);
    }

    // Sub-multisets I of rest with multiplicity-binomial weights; g1 is
    // fixed by the dimension constraint of the first factor.
    std::vector<std::pair<int, int>> groups(ms.begin(), ms.end());
    std::vector<int> take(groups.size(), 0);
    while (true) {
      std::vector<int> left{r};
      std::vector<int> right{s};
      long left_sum = r;
      Integer ways = 1;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto [v, mult] = groups[i];
        for (int c = 0; c < take[i]; ++c) left.push_back(v);
        for (int c = take[i]; c < mult; ++c) right.push_back(v);
        left_sum += static_cast<long>(v) * take[i];
        ways *= binomial(mult, take[i]);
      }
      const long num = left_sum + 3 - static_cast<long>(left.size());
      if (num % 3 == 0) {
        const int g1 = static_cast<int>(num / 3);
        const int g2 = g - g1;
        if (g1 >= 0 && g2 >= 0) {
          const TauKey a(g1, left);
          const TauKey b(g2, right);
          if (a.stable() && b.stable() && a.dimension_ok() && b.dimension_ok()) {
            const Rational va = get(a);
            if (va != 0) split_sum += weight * Rational(ways) * va * get(b);
          }
        }
      }
      std::size_t i = 0;
      while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
      if (i == groups.size()) break;
      ++take[i];
    }
  }
  total += split_sum / 2;
  return total / dfact(2 * k + 3);
}

std::size_t IntersectionEngine::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::vector<std::pair<TauKey, Rational>> IntersectionEngine::entries() const {
  std::vector<std::pair<TauKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(memo_.begin(), memo_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.genus != b.first.genus) return a.first.genus < b.first.genus;
    return a.first.indices < b.first.indices;
  });
  return out;
}

void IntersectionEngine::save(const std::filesystem::path& file) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : entries()) {
    rows.push_back({key.genus, key.indices, to_canonical_string(value)});
  }
  write_cache_file(file, cache_header("tau"), rows.dump());
}

bool IntersectionEngine::load(const std::filesystem::path& file) {
  const auto body = read_cache_file(file, cache_header("tau"));
  if (!body) return false;
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(*body);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(file.string() + ": " + e.what());
  }
  std::unique_lock lock(mutex_);
  for (const auto& row : rows) {
    TauKey key(row.at(0).get<int>(), row.at(1).get<std::vector<int>>());
    memo_.emplace(std::move(key), parse_rational(row.at(2).get<std::string>()));
  }
  return true;
}

void IntersectionEngine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

IntersectionEngine& default_intersection_engine() {
  static IntersectionEngine engine;
  return engine;
}

Rational intersection_number(const TauKey& key) {
  return default_intersection_engine().get(key);
}

}  // namespace twp
