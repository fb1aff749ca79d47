#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fanohyp/blowup.hpp"
#include "fanohyp/singularities.hpp"
#include "fanohyp/weighted_space.hpp"

namespace fanohyp {

inline constexpr int kFamilyCount = 95;
inline constexpr int kDefaultMaxWeight = 100;

struct CountMismatch : std::runtime_error {
  explicit CountMismatch(int found_)
      : std::runtime_error("found " + std::to_string(found_) + " families, expected " +
                           std::to_string(kFamilyCount)),
        found(found_) {}
  int found;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct FamilyRecord {
  int gimel = 0;
  WeightSystem ws;
  Rational kx3;
  Basket basket;
  std::vector<PointAnalysis> points;

  int degree() const { return ws.degree(); }
  const std::array<int, 4>& weights() const { return ws.weights(); }
  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

struct Catalog {
  std::vector<FamilyRecord> records;

  std::size_t size() const { return records.size(); }
  auto begin() const { return records.begin(); }
  auto end() const { return records.end(); }
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Whether every singular vertex can be on a quasismooth member at all.
inline bool vertices_admissible(const std::array<int, 5>& w, int d) {
  for (int j = 1; j < 5; ++j) {
    if (d % w[j] == 0) continue;
    bool ok = false;
    for (int k = 0; k < 5 && !ok; ++k)
      ok = k != j && d > w[k] && (d - w[k]) % w[j] == 0;
    if (!ok) return false;
  }
  return true;
}

inline bool is_catalog_member(const WeightSystem& ws) {
  return vertices_admissible(ws.all_weights(), ws.degree()) && is_well_formed(ws) &&
         is_quasismooth_general(ws) && is_terminal_general(ws);
}

inline FamilyRecord make_record(int gimel, const WeightSystem& ws) {
  auto b = basket(ws);
  if (auto* nt = std::get_if<NotTerminal>(&b))
    throw std::invalid_argument(ws.str() + " is not terminal: " + nt->reason);
  FamilyRecord rec;
  rec.gimel = gimel;
  rec.ws = ws;
  rec.kx3 = degree_and_kx3(ws).kx3;
  rec.basket = std::get<Basket>(std::move(b));
  for (const auto& e : rec.basket.entries) rec.points.push_back(analyse_point(ws, rec.kx3, e));
  return rec;
}

/**
 * @brief All weight systems with weights up to max_weight passing the
 * membership tests, in catalog order.
 */
inline std::vector<WeightSystem> enumerate_weight_systems(int max_weight, unsigned threads = 0) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<int> next{1};
  std::mutex lock;
  std::vector<WeightSystem> found;
  auto worker = [&] {
    std::vector<WeightSystem> local;
    for (int a4; (a4 = next.fetch_add(1)) <= max_weight;) {
      for (int a3 = 1; a3 <= a4; ++a3)
        for (int a2 = 1; a2 <= a3; ++a2)
          for (int a1 = 1; a1 <= a2; ++a1) {
            const int d = a1 + a2 + a3 + a4;
            if (!vertices_admissible({1, a1, a2, a3, a4}, d)) continue;
            WeightSystem ws(a1, a2, a3, a4);
            if (is_well_formed(ws) && is_quasismooth_general(ws) && is_terminal_general(ws))
              local.push_back(ws);
          }
    }
    std::lock_guard<std::mutex> g(lock);
    found.insert(found.end(), local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(found.begin(), found.end());
  return found;
}

/// Builds the catalog; throws CountMismatch unless exactly 95 families are found.
inline Catalog enumerate_families(int max_weight = kDefaultMaxWeight, unsigned threads = 0) {
  auto systems = enumerate_weight_systems(max_weight, threads);
  if (systems.size() != kFamilyCount) throw CountMismatch(static_cast<int>(systems.size()));
  Catalog c;
  c.records.reserve(systems.size());
  for (std::size_t k = 0; k < systems.size(); ++k)
    c.records.push_back(make_record(static_cast<int>(k) + 1, systems[k]));
  return c;
}

inline const FamilyRecord& family(const Catalog& c, int gimel) {
  if (gimel < 1 || gimel > static_cast<int>(c.records.size()))
    throw OutOfRange("family ordinal " + std::to_string(gimel) + " outside 1.." +
                     std::to_string(c.records.size()));
  return c.records[gimel - 1];
}

/// Ordinal of a weight system, or 0 when it is not in the catalog.
inline int find_gimel(const Catalog& c, const WeightSystem& ws) {
  for (const auto& r : c.records)
    if (r.ws == ws) return r.gimel;
  return 0;
}

} // namespace fanohyp
