#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "twp/ring/tight_poly.hpp"

namespace twp {

inline constexpr std::size_t kDefaultMonomialBudget = 5'000'000;

// n >= 3 for g = 0, n >= 1 for g = 1, n >= 0 for g >= 2.
bool admissible(int g, int n);

struct PolyCell {
  int genus = 0;
  int boundaries = 0;
  TightPoly poly{0, 0};

  int degree() const { return 3 * genus - 3 + boundaries; }
};

// Sum over partitions of 3g-3 weighted by intersection numbers.
TightPoly build_p_g0(int g);

// One recursion step: P_{g,n-1} (boundaries shifted to 2..n) to P_{g,n}.
TightPoly recursion_step(const TightPoly& previous, int g, int n);

// Iterated d/dm_p over the entries of pvec.
TightPoly poly_dm_multi(const TightPoly& p, const std::vector<int>& pvec);

struct ValidationReport {
  bool symmetric = true;
  bool graded = true;
  std::string detail;

  bool ok() const { return symmetric && graded; }
};

// Symmetry under the generators of S_n and exact sigma-scaling at
// sigma_samples random rational sigma.
ValidationReport validate_cell_report(const PolyCell& cell, int sigma_samples,
                                      std::uint64_t seed = 7);
bool validate_cell(const PolyCell& cell, int sigma_samples);

// In-memory cells with an optional on-disk store. Cells for one genus are
// built n-increasing; every intermediate cell is kept and, with a store
// directory, written to disk.
class PolyCache {
 public:
  explicit PolyCache(std::optional<std::filesystem::path> dir = std::nullopt,
                     std::size_t budget = kDefaultMonomialBudget);

  std::shared_ptr<const PolyCell> get(int g, int n);

  const std::optional<std::filesystem::path>& directory() const { return dir_; }
  std::size_t budget() const { return budget_; }
  void set_budget(std::size_t budget) { budget_ = budget; }
  // Redirects the disk store; clears nothing in memory.
  void set_directory(std::optional<std::filesystem::path> dir);
  // Writes the intersection table to tau.twp when a directory is set.
  void flush_intersections() const;

 private:
  std::shared_ptr<const PolyCell> find(int g, int n) const;
  std::shared_ptr<const PolyCell> publish(PolyCell cell);

  std::optional<std::filesystem::path> dir_;
  std::size_t budget_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const PolyCell>> cells_;
};

PolyCache& default_poly_cache();

PolyCell p_g0(int g);
PolyCell p_gn(int g, int n);

// Disk store for single cells under <dir>/poly/.
void store_cell(const std::filesystem::path& dir, const PolyCell& cell);
std::optional<PolyCell> load_cell(const std::filesystem::path& dir, int g, int n);
std::filesystem::path cell_path(const std::filesystem::path& dir, int g, int n);

}  // namespace twp
