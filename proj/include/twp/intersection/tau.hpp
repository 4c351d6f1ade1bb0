#pragma once

#include <filesystem>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "twp/ring/rational.hpp"

namespace twp {

// <tau_{d_1} ... tau_{d_n}>_g with the indices kept sorted in descending
// order so that equal correlators share one memo entry.
struct TauKey {
  int genus = 0;
  std::vector<int> indices;

  TauKey() = default;
  TauKey(int g, std::vector<int> d);
  TauKey(int g, std::initializer_list<int> d) : TauKey(g, std::vector<int>(d)) {}

  int size() const { return static_cast<int>(indices.size()); }
  bool stable() const { return 2 * genus - 2 + size() > 0; }
  // sum d_i == 3g - 3 + n
  bool dimension_ok() const;
  std::string to_string() const;

  friend bool operator==(const TauKey&, const TauKey&) = default;
};

struct TauKeyHash {
  std::size_t operator()(const TauKey& k) const noexcept;
};

// Memoized intersection numbers. Lookups take a shared lock; inserts take the
// exclusive lock. Two threads may compute the same key; both store the same
// value.
class IntersectionEngine {
 public:
  Rational get(const TauKey& key);

  std::size_t size() const;
  std::vector<std::pair<TauKey, Rational>> entries() const;

  // tau.twp persistence through the shared cache-file format.
  void save(const std::filesystem::path& file) const;
  // Merges a stored table; returns false when the file does not exist.
  bool load(const std::filesystem::path& file);
  void clear();

 private:
  bool lookup(const TauKey& key, Rational& out) const;
  void insert(const TauKey& key, const Rational& value);
  Rational compute(const TauKey& key);
  Rational virasoro(const TauKey& key);

  mutable std::shared_mutex mutex_;
  std::unordered_map<TauKey, Rational, TauKeyHash> memo_;
};

// Process-wide engine used by the free function and the polynomial builders.
IntersectionEngine& default_intersection_engine();

// Throws UserError for unstable keys or negative indices; returns 0 when the
// dimension constraint fails.
Rational intersection_number(const TauKey& key);

}  // namespace twp
