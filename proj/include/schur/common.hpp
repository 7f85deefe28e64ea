#pragma once

// Shared aliases, budgets and error types for the schur library.
//
// Everything in this library works at desk scale: groups of order at most
// 64, so a subset of a group is a plain uint64_t bitmask indexed by element
// number. Keeping that representation global is what makes the counting
// loops (difference counts, closure refinement) cheap.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schur {

inline constexpr const char* kToolVersion = "schur 1.0.0";

// Subset of a group with order <= 64, bit i = element i.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }  // require m != 0
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
inline Mask all_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Runtime limits for the searches. Defaults match the documented budgets;
// every budgeted routine reports exhaustion explicitly instead of guessing.
struct Budgets {
  std::uint64_t enum_nodes = 1'000'000'000;   // enumeration DFS decisions
  std::uint64_t aut_nodes = 50'000'000;       // color-graph automorphism search nodes
  std::uint64_t element_cap = 10'000'000;     // group-element enumeration cap
  std::uint64_t cycle_nodes = 20'000'000;     // n-cycle witness search nodes
  std::uint64_t subset_nodes = 1'000'000'000; // difference-set subset DFS nodes
  int workers = 1;                            // parallel width for per-entry sweeps
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search would need to exceed its configured budget *and* the
// caller asked for a hard failure; most search entry points instead return a
// result carrying an explicit "complete" flag or "unknown" verdict.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Three-valued verdict for budgeted decision procedures.
enum class Flag : std::uint8_t { False = 0, True = 1, Unknown = 2 };

inline const char* to_string(Flag f) {
  switch (f) {
    case Flag::False: return "no";
    case Flag::True: return "yes";
    default: return "unknown";
  }
}

}  // namespace schur
