#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcores/abacus.hpp"
#include "tcores/ncoding.hpp"
#include "tcores/report.hpp"
#include "tcores/squares.hpp"

namespace tcores {

enum class FamilyType { I = 1, II, III, IV, V, VI };

std::string to_string(FamilyType f);

/// A self-conjugate 4-core (type I..IV, parameters r, a) or 6-core
/// (type I..VI, parameters r, a, b). `b` is zero for 4-cores.
struct FamilyClassification {
  FamilyType type = FamilyType::I;
  Int r = 0;
  Int a = 0;
  Int b = 0;

  friend bool operator==(const FamilyClassification&, const FamilyClassification&) = default;
};

std::string to_string(const FamilyClassification& c);

// Self-conjugate 4-cores -------------------------------------------------------

/// N-coding shapes:
///   I   [-r, a-r, r-a, r]          II [r+1, a-r, r-a, -r-1]
///   III [r+1-a, r+1, -r-1, a-r-1]  IV [a-r, -r-1, r+1, r-a]
NCoding sc4_ncoding(const FamilyClassification& c);
/// Bead count of the normalized abacus of a classified 4-core: 4r + type - 1.
Int sc4_beads(const FamilyClassification& c);
/// Matches `n` against the four shapes with r, a >= 0 and keeps the shapes
/// whose abacus at 4r + type - 1 beads is normalized. Throws DomainError if
/// nothing matches and InvariantViolation if more than one shape does.
FamilyClassification classify_sc4(const NCoding& n);
/// (x, y) with x^2 + y^2 = 8n + 5. `n` is checked against the formula.
std::pair<Int, Int> sc4_to_squares(const FamilyClassification& c, Int n);

// Self-conjugate 6-cores -------------------------------------------------------

/// N-coding shapes:
///   I   [-r, a-r, b-r, r-b, r-a, r]
///   II  [r+1, a-r, b-r, r-b, r-a, -r-1]
///   III [r+1-a, r+1, b-r, r-b, -r-1, a-r-1]
///   IV  [r+1-b, r+1-a, r+1, -r-1, a-r-1, b-r-1]
///   V   [r+1-b, r+1-a, -r-1, r+1, a-r-1, b-r-1]
///   VI  [b-r, -r-1, a-r-1, r+1-a, r+1, r-b]
NCoding sc6_ncoding(const FamilyClassification& c);
/// Normalized abacus of the family member, with 6r + type - 1 beads.
Abacus sc6_abacus(const FamilyClassification& c);
/// Checks the runner constraints of a normalized self-conjugate 6-core
/// abacus (0,a,b,c,d,e) for its bead count s mod 6 and returns the family.
/// Throws DomainError on a violated constraint.
FamilyClassification sc6_constraints_check(const Abacus& a);
/// The triple with x^2 + y^2 + z^2 = 24n + 35, residues +-1, +-3, +-5 mod 12.
Triple sc6_to_triple(const FamilyClassification& c, Int n);

/// BKM classes of sc6_to_triple over SC_6(n).
std::vector<TripleClass> sc6_image_classes(Int n);

// Identities and decomposition checks -------------------------------------------

/// 16 sc_9(n) = |S_9(n)|, where S_9(n) holds the x in Z^4 with
/// sum x_j^2 = 9n + 30 and x_j = +-(j+1) mod 9.
ReportRecord s9_identity_check(Int n);

enum class GovernanceKind { Sc2tSc2t1, CtSc2t, CtSc2t1, C4Sc7Union };

std::string to_string(GovernanceKind k);
GovernanceKind parse_governance_kind(const std::string& s);

/// Checks that two partition families land on the same represented integer.
///   Sc2tSc2t1: SC_2t((2t+1)n) and SC_{2t+1}(8tn + t(t-1)/2); for t = 3 also
///              sc_6(7n) <= sc_7(24n+3).
///   CtSc2t:    C_t(4n + (2t^2+t+1)/4) and SC_2t(n), t = 1 mod 4.
///   CtSc2t1:   C_t((2t+1)n + A) and SC_{2t+1}(2tn + B).
///   C4Sc7Union: |K_BKM(392n+245)| = (c_4(n) + sc_4(n))/2 + sc_7(56n+33).
/// `t` is ignored for C4Sc7Union.
ReportRecord governance_check(GovernanceKind kind, int t, Int n);

/// The image of SC_7(24n+3) is every BKM class of 168n + 35 and contains
/// the image of SC_6(7n).
ReportRecord sc6_sc7_cover_check(Int n);

/// (1/2)H(52) + (1/4)H_7(2548) against the triples of 637: once with the
/// raw number of triples divided by 48, once with the number of BKM classes.
std::vector<ReportRecord> h_number_consistency();

/// The sc_6 image misses a class that exists for 24n + 35, as stated for
/// n = 1 with {5,5,3} and n = 4 with {11,3,1}.
ReportRecord sc6_strictness_check(Int n, const TripleClass& missing);

}  // namespace tcores
