#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcores/abacus.hpp"
#include "tcores/families.hpp"
#include "tcores/report.hpp"
#include "tcores/squares.hpp"

namespace tcores {

/// b_j = 4a_j + j for a normalized 4-core abacus (0, a_1, a_2, a_3).
struct HookShift {
  Triple b{};
  /// Indices into b with b[order[0]] < b[order[1]] < b[order[2]].
  std::array<int, 3> order{};
};

HookShift hook_shift(const Abacus& a);

/// The six values {b2, b3, b2-b1, b3-b1, (b2+b3-b1)/2, b2+b3-b1} of the
/// sorted shifts, indexed by residue mod 7 (slot 0 unused).
struct CSet {
  std::array<Int, 6> values{};
  std::array<Int, 7> by_residue{};
};

/// Throws InvariantViolation unless the six values are distinct and nonzero mod 7.
CSet c_set(const HookShift& h);

/// (-(b1+b2-b3)/2, (b1+b3-b2)/2, (b2+b3-b1)/2), a triple of 8n+5.
Triple psi(const Abacus& a);
/// Piecewise definition over the three abacus types, used as an oracle.
Triple psi_from_type_table(const Abacus& a);

/// Table of self-conjugate 7-core abaci:
///   I   (0,a,b,r,2r-b,2r-a,2r)                (7r+3, 7r+2-7a, 7r+1-7b)
///   II  (0,2r+1,a,b,r,2r-b,2r-a)              (7r+4, 7r+2-7a, 7r+1-7b)
///   III (0,a,2r+1-a,2r+1,b,r,2r-b)            (7r+5, 7r+4-7a, 7r+1-7b)
///   IV  (0,a,b,2r+1-b,2r+1-a,2r+1,r)          (7r+6, 7r+5-7a, 7r+4-7b)
///   V   (0,r+1,2r+2,a,b,2r+1-b,2r+1-a)        (7r+8, 7r+5-7a, 7r+4-7b)
///   VI  (0,a,r+1,2r+2-a,2r+2,b,2r+1-b)        (7r+9, 7r+8-7a, 7r+4-7b)
Abacus sc7_abacus(const FamilyClassification& c);
/// Throws DomainError if no shape matches, InvariantViolation if two do.
FamilyClassification classify_sc7(const Abacus& a);
/// Triple of 7n + 14 for a self-conjugate 7-core of n.
Triple rho(const Abacus& a);
/// With x = max |.|, the values {x, 2x, x+-y, x+-z} indexed by residue mod 7
/// give the abacus (0, floor(s_1/7), ..., floor(s_6/7)).
Abacus rho_inverse(const Triple& v);

/// 4-core of 7n+2 (n != 4 mod 7) to a self-conjugate 7-core of 8n+1.
Abacus phi47(const Abacus& a);

/// Checks the image, fiber sizes, conjugate pairing and phi47 = rho^-1 p psi
/// on C_4(7n+2). For n = 4 mod 7 records the class-count identity instead.
ReportRecord verify_two_to_one(Int n);

/// |K_BKM(8m+5)| = (c_4(m) + sc_4(m)) / 2.
ReportRecord kbkm_identity(Int m);

/// One map47 listing row.
struct Map47Row {
  Partition partition;
  Abacus abacus;
  Triple b{};
  Triple psi{};
  Abacus image;
  Partition image_partition;
};
std::vector<Map47Row> map47_rows(Int n);

}  // namespace tcores
