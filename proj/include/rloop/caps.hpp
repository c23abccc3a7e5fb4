#pragma once

namespace rloop {

// Size and search limits. Results are exact below a cap; operations refuse
// with cap_error above it instead of degrading silently.
struct Caps {
  long closure_cap = 10080;    // max element count of a permutation closure
  int aut_cap = 24;            // max group order for automorphism search
  int iso_cap = 120;           // max group order for isomorphism backtracking
  long taut_perm_cap = 40320;  // max (n-1)! for the brute-force TAut/Aut filters
  long extension_cap = 5040;   // max order of a built extension group
  long table_cap = 5040;       // max order for exhaustive associativity verification
  int enumerate_cap = 6;       // max order for right-loop enumeration
};

}  // namespace rloop
