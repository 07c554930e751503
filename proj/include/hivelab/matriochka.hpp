#pragma once

#include "hivelab/hive.hpp"

#include <vector>

namespace hivelab {

struct MatriochkaLevel {
  Count m = 0;
  std::size_t points = 0;      ///< weights with N >= m
  std::size_t hull_vertices = 0;
  bool nested = false;         ///< hull of level m+1 inside hull of level m
  bool lattice_convex = false; ///< every compatible weight in the hull has N >= m
};

struct MatriochkaReport {
  Count max_multiplicity = 0;
  std::vector<MatriochkaLevel> levels;
  bool pass = false;
};

/// Level sets {nu : N_{lam mu}^nu >= m} of an SU(3) tensor product, in Dynkin coordinates.
MatriochkaReport matriochka_check(const Weight& lam, const Weight& mu,
                                  const HiveOptions& opts = default_hive_options());

} // namespace hivelab
