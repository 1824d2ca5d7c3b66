#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace blockhh {

/// Solves A x = b over Q by fraction-free elimination on an integer copy of
/// the augmented matrix (each row scaled by the lcm of its denominators, rows
/// kept primitive after every update). A may be rectangular. Returns one
/// solution with every free variable set to zero, or nullopt when the system
/// is inconsistent.
std::optional<std::vector<mpq_class>> solve_exact(const std::vector<std::vector<mpq_class>>& a,
                                                  const std::vector<mpq_class>& b);

}  // namespace blockhh
