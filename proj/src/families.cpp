#include "tcores/families.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include "tcores/bqf.hpp"
#include "tcores/errors.hpp"

namespace tcores {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

int type_index(FamilyType f) { return static_cast<int>(f); }

// The abacus at `beads` beads if every runner is non-negative and the first
// runner is empty.
bool is_normalized_at(const NCoding& n, Int beads) {
  if (beads < 0) return false;
  try {
    return abacus_from_ncoding(n, beads).counts.front() == 0;
  } catch (const DomainError&) {
    return false;
  }
}

std::set<std::vector<Int>> sign_orbit(const std::vector<Int>& v) {
  std::set<std::vector<Int>> out;
  const size_t m = v.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    auto w = v;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t{1} << i)) w[i] = -w[i];
    out.insert(std::move(w));
  }
  return out;
}

}  // namespace

std::string to_string(FamilyType f) {
  static constexpr std::array<const char*, 6> names{"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<size_t>(type_index(f) - 1)];
}

std::string to_string(const FamilyClassification& c) {
  return to_string(c.type) + "(r=" + std::to_string(c.r) + ",a=" + std::to_string(c.a) + ",b=" + std::to_string(c.b) +
         ")";
}

NCoding sc4_ncoding(const FamilyClassification& c) {
  const Int r = c.r, a = c.a;
  switch (c.type) {
    case FamilyType::I: return NCoding({-r, a - r, r - a, r});
    case FamilyType::II: return NCoding({r + 1, a - r, r - a, -r - 1});
    case FamilyType::III: return NCoding({r + 1 - a, r + 1, -r - 1, a - r - 1});
    case FamilyType::IV: return NCoding({a - r, -r - 1, r + 1, r - a});
    default: throw DomainError("self-conjugate 4-cores have types I-IV only");
  }
}

Int sc4_beads(const FamilyClassification& c) { return 4 * c.r + type_index(c.type) - 1; }

FamilyClassification classify_sc4(const NCoding& n) {
  if (n.t != 4) throw DomainError("classify_sc4 needs a 4-core N-coding");
  if (!is_self_conjugate(n)) throw DomainError(to_string(n) + " is not self-conjugate");
  const auto& e = n.entries;
  // (type, r, a) solved from the shape's free positions.
  const std::array<FamilyClassification, 4> candidates{{
      {FamilyType::I, e[3], e[1] + e[3], 0},
      {FamilyType::II, e[0] - 1, e[1] + e[0] - 1, 0},
      {FamilyType::III, e[1] - 1, e[1] - e[0], 0},
      {FamilyType::IV, e[2] - 1, e[0] + e[2] - 1, 0},
  }};
  std::vector<FamilyClassification> hits;
  for (const auto& c : candidates) {
    if (c.r < 0 || c.a < 0 || sc4_ncoding(c) != n) continue;
    if (is_normalized_at(n, sc4_beads(c))) hits.push_back(c);
  }
  if (hits.empty()) throw DomainError("no self-conjugate 4-core family matches " + to_string(n));
  if (hits.size() > 1)
    throw InvariantViolation(to_string(n) + " matches both " + to_string(hits[0]) + " and " + to_string(hits[1]));
  return hits.front();
}

std::pair<Int, Int> sc4_to_squares(const FamilyClassification& c, Int n) {
  const Int r = c.r, a = c.a;
  std::pair<Int, Int> xy;
  switch (c.type) {
    case FamilyType::I: xy = {8 * r + 2 - 4 * a, 4 * a + 1}; break;
    case FamilyType::II: xy = {8 * r + 3 - 4 * a, 4 * a + 2}; break;
    case FamilyType::III: xy = {8 * r + 6 - 4 * a, 4 * a + 1}; break;
    case FamilyType::IV: xy = {8 * r + 6 - 4 * a, 4 * a + 3}; break;
    default: throw DomainError("self-conjugate 4-cores have types I-IV only");
  }
  if (xy.first * xy.first + xy.second * xy.second != 8 * n + 5)
    throw InvariantViolation(to_string(c) + " does not give 8n+5 for n = " + std::to_string(n));
  return xy;
}

NCoding sc6_ncoding(const FamilyClassification& c) {
  const Int r = c.r, a = c.a, b = c.b;
  switch (c.type) {
    case FamilyType::I: return NCoding({-r, a - r, b - r, r - b, r - a, r});
    case FamilyType::II: return NCoding({r + 1, a - r, b - r, r - b, r - a, -r - 1});
    case FamilyType::III: return NCoding({r + 1 - a, r + 1, b - r, r - b, -r - 1, a - r - 1});
    case FamilyType::IV: return NCoding({r + 1 - b, r + 1 - a, r + 1, -r - 1, a - r - 1, b - r - 1});
    case FamilyType::V: return NCoding({r + 1 - b, r + 1 - a, -r - 1, r + 1, a - r - 1, b - r - 1});
    case FamilyType::VI: return NCoding({b - r, -r - 1, a - r - 1, r + 1 - a, r + 1, r - b});
  }
  throw InvariantViolation("unknown family type");
}

Abacus sc6_abacus(const FamilyClassification& c) {
  return abacus_from_ncoding(sc6_ncoding(c), 6 * c.r + type_index(c.type) - 1);
}

FamilyClassification sc6_constraints_check(const Abacus& abacus) {
  if (abacus.t != 6) throw DomainError("sc6_constraints_check needs a 6-abacus");
  const auto& k = abacus.counts;
  if (k[0] != 0) throw DomainError("abacus " + to_string(abacus) + " is not normalized");
  const Int a = k[1], b = k[2], c = k[3], d = k[4], e = k[5];
  const Int s = abacus.beads();
  const Int r = s / 6;
  auto require = [&](bool cond, const char* what) {
    if (!cond)
      throw DomainError("abacus " + to_string(abacus) + " with s = " + std::to_string(s) + " violates " + what);
  };
  switch (s % 6) {
    case 0: require(e == 2 * r && a + d == 2 * r && b + c == 2 * r, "e = 2r, a+d = 2r, b+c = 2r"); break;
    case 1: require(a == 2 * r + 1 && b + e == 2 * r && c + d == 2 * r, "a = 2r+1, b+e = 2r, c+d = 2r"); break;
    case 2: require(a + b == 2 * r + 1 && c == 2 * r + 1 && d + e == 2 * r, "a+b = 2r+1, c = 2r+1, d+e = 2r"); break;
    case 3: require(b + c == 2 * r + 1 && a + d == 2 * r + 1 && e == 2 * r + 1, "b+c = 2r+1, a+d = 2r+1, e = 2r+1"); break;
    case 4: require(c + d == 2 * r + 1 && b + e == 2 * r + 1 && a == 2 * r + 2, "c+d = 2r+1, b+e = 2r+1, a = 2r+2"); break;
    default: require(d + e == 2 * r + 1 && a + b == 2 * r + 2 && c == 2 * r + 2, "d+e = 2r+1, a+b = 2r+2, c = 2r+2");
  }
  // Family parameters read back off the N-coding.
  const auto n = ncoding_from_abacus(abacus).entries;
  FamilyClassification fc{static_cast<FamilyType>(s % 6 + 1), r, 0, 0};
  switch (fc.type) {
    case FamilyType::I:
    case FamilyType::II: fc.a = n[1] + r, fc.b = n[2] + r; break;
    case FamilyType::III: fc.a = r + 1 - n[0], fc.b = n[2] + r; break;
    case FamilyType::IV:
    case FamilyType::V: fc.a = r + 1 - n[1], fc.b = r + 1 - n[0]; break;
    case FamilyType::VI: fc.a = n[2] + r + 1, fc.b = n[0] + r; break;
  }
  if (sc6_abacus(fc) != abacus)
    throw InvariantViolation("family " + to_string(fc) + " does not reproduce abacus " + to_string(abacus));
  return fc;
}

Triple sc6_to_triple(const FamilyClassification& c, Int n) {
  const Int r = c.r, a = c.a, b = c.b;
  Triple v{};
  switch (c.type) {
    case FamilyType::I: v = {12 * r + 3 - 12 * a, 12 * r + 1 - 12 * b, 12 * r + 5}; break;
    case FamilyType::II: v = {12 * r + 3 - 12 * a, 12 * r + 1 - 12 * b, 12 * r + 7}; break;
    case FamilyType::III: v = {12 * r + 1 - 12 * b, 12 * r + 7 - 12 * a, 12 * r + 9}; break;
    case FamilyType::IV: v = {12 * r + 9 - 12 * a, 12 * r + 7 - 12 * b, 12 * r + 11}; break;
    case FamilyType::V: v = {12 * r + 9 - 12 * a, 12 * r + 7 - 12 * b, 12 * r + 13}; break;
    case FamilyType::VI: v = {12 * r + 13 - 12 * a, 12 * r + 5 - 12 * b, 12 * r + 15}; break;
  }
  if (sum_of_squares(v) != 24 * n + 35)
    throw InvariantViolation(to_string(c) + " does not give 24n+35 for n = " + std::to_string(n));
  return v;
}

std::vector<TripleClass> sc6_image_classes(Int n) {
  std::set<TripleClass> out;
  for (const auto& code : enumerate_sc_t_cores_lattice(6, n)) {
    const auto fc = sc6_constraints_check(normalize_abacus(partition_from_ncoding(code), 6));
    out.insert(canonical_bkm(sc6_to_triple(fc, n)));
  }
  return {out.begin(), out.end()};
}

ReportRecord s9_identity_check(Int n) {
  const auto start = Clock::now();
  ReportRecord rec;
  rec.check = "s9";
  rec.params = {{"t", 9}, {"n", n}};
  rec.ok = true;
  const auto codings = enumerate_sc_t_cores_lattice(9, n);
  RepConstraints c;
  c.modulus = 9;
  for (Int j = 0; j < 4; ++j) c.residues.push_back({mod(j + 1, 9), mod(-(j + 1), 9)});
  const auto solutions = enumerate_reps(9 * n + 30, 4, c);
  rec.lhs = 16 * static_cast<Int>(codings.size());
  rec.rhs = static_cast<Int>(solutions.size());

  std::set<std::vector<Int>> from_cores, solved;
  for (const auto& code : codings)
    for (auto& v : sign_orbit(sc_odd_squares(code).values))
      if (!from_cores.insert(v).second) rec.fail("sign orbit overlap at " + to_string(v));
  for (const auto& s : solutions) solved.insert(s.values);
  if (from_cores != solved) rec.fail("signed images of SC_9(" + std::to_string(n) + ") differ from S_9");
  if (rec.lhs != rec.rhs) rec.fail("16 sc_9(n) = " + std::to_string(rec.lhs) + " but |S_9| = " + std::to_string(rec.rhs));
  rec.elapsed_ms = ms_since(start);
  return rec;
}

std::string to_string(GovernanceKind k) {
  switch (k) {
    case GovernanceKind::Sc2tSc2t1: return "sc2t_sc2t1";
    case GovernanceKind::CtSc2t: return "ct_sc2t";
    case GovernanceKind::CtSc2t1: return "ct_sc2t1";
    case GovernanceKind::C4Sc7Union: return "c4_sc7_union";
  }
  return "?";
}

GovernanceKind parse_governance_kind(const std::string& s) {
  for (auto k : {GovernanceKind::Sc2tSc2t1, GovernanceKind::CtSc2t, GovernanceKind::CtSc2t1, GovernanceKind::C4Sc7Union})
    if (to_string(k) == s) return k;
  throw DomainError("unknown governance kind '" + s + "'");
}

namespace {

// Every image has `length` coordinates and square sum `target`.
void check_images(ReportRecord& rec, const std::string& side, const std::vector<NCoding>& codings,
                  SquaresRep (*map)(const NCoding&), int length, Int target) {
  for (const auto& code : codings) {
    const auto img = map(code);
    const Int got = sum_of_squares(img.values);
    if (static_cast<int>(img.values.size()) != length || got != target)
      rec.fail(side + " " + to_string(partition_from_ncoding(code)) + " maps to " + to_string(img.values) +
               " with square sum " + std::to_string(got) + ", stated target " + std::to_string(target));
  }
}

ReportRecord union_check(Int n) {
  ReportRecord rec;
  rec.check = "governance";
  rec.params = {{"kind", static_cast<Int>(GovernanceKind::C4Sc7Union)}, {"n", n}};
  rec.ok = true;
  const Int target = 392 * n + 245;
  const auto classes = triple_classes(target);
  const Int c4 = count_t_cores(4, n), sc4 = count_sc_t_cores(4, n);
  const auto sc7 = enumerate_sc_t_cores_lattice(7, 56 * n + 33);
  rec.lhs = static_cast<Int>(classes.size());
  rec.rhs = (c4 + sc4) / 2 + static_cast<Int>(sc7.size());
  if ((c4 + sc4) % 2 != 0) rec.fail("c_4(n) + sc_4(n) is odd");

  std::set<TripleClass> divisible, coprime;
  for (const auto& c : classes) {
    const bool any7 = std::any_of(c.values.begin(), c.values.end(), [](Int x) { return x % 7 == 0; });
    (any7 ? divisible : coprime).insert(c);
  }
  std::set<TripleClass> small;
  for (const auto& c : triple_classes(8 * n + 5)) small.insert(canonical_bkm(Triple{7 * c.values[0], 7 * c.values[1], 7 * c.values[2]}));
  if (small != divisible) rec.fail("classes with a coordinate divisible by 7 are not 7 K_BKM(8n+5)");
  if (static_cast<Int>(small.size()) * 2 != c4 + sc4)
    rec.fail("|K_BKM(8n+5)| = " + std::to_string(small.size()) + " but (c_4+sc_4)/2 = " + std::to_string((c4 + sc4) / 2));
  if (coprime.size() != sc7.size())
    rec.fail(std::to_string(coprime.size()) + " classes prime to 7 but sc_7(56n+33) = " + std::to_string(sc7.size()));
  if (rec.lhs != rec.rhs) rec.fail("class count " + std::to_string(rec.lhs) + " vs " + std::to_string(rec.rhs));
  return rec;
}

}  // namespace

ReportRecord governance_check(GovernanceKind kind, int t_, Int n) {
  const auto start = Clock::now();
  if (kind == GovernanceKind::C4Sc7Union) {
    auto rec = union_check(n);
    rec.params = {{"n", n}};
    rec.check = "governance_" + to_string(kind);
    rec.elapsed_ms = ms_since(start);
    return rec;
  }
  const Int t = t_;
  ReportRecord rec;
  rec.check = "governance_" + to_string(kind);
  rec.params = {{"t", t}, {"n", n}};
  rec.relation = "governed";
  rec.ok = true;

  switch (kind) {
    case GovernanceKind::Sc2tSc2t1: {
      if (t < 2) throw DomainError("sc2t_sc2t1 needs t >= 2");
      const Int target = 8 * t * (2 * t + 1) * n + t * (4 * t * t - 1) / 3;
      const auto even = enumerate_sc_t_cores_lattice(static_cast<int>(2 * t), (2 * t + 1) * n);
      const auto odd = enumerate_sc_t_cores_lattice(static_cast<int>(2 * t + 1), 8 * t * n + t * (t - 1) / 2);
      check_images(rec, "SC_2t", even, sc_even_squares, static_cast<int>(t), target);
      check_images(rec, "SC_2t+1", odd, sc_odd_squares, static_cast<int>(t), target);
      rec.lhs = static_cast<Int>(even.size());
      rec.rhs = static_cast<Int>(odd.size());
      rec.params.emplace_back("target", target);
      if (t == 3) {
        rec.relation = "<=";
        if (rec.lhs > rec.rhs) rec.fail("sc_6(7n) > sc_7(24n+3)");
      }
      break;
    }
    case GovernanceKind::CtSc2t: {
      if (t < 3 || t % 4 != 1) throw DomainError("ct_sc2t needs t = 1 mod 4");
      const Int target = 8 * t * n + t * (4 * t * t - 1) / 3;
      const Int m = 4 * n + (2 * t * t + t + 1) / 4;
      const auto cores = enumerate_t_cores_lattice(static_cast<int>(t), m);
      const auto sc = enumerate_sc_t_cores_lattice(static_cast<int>(2 * t), n);
      check_images(rec, "C_t", cores, tcore_to_squares, static_cast<int>(t), target);
      check_images(rec, "SC_2t", sc, sc_even_squares, static_cast<int>(t), target);
      rec.lhs = static_cast<Int>(cores.size());
      rec.rhs = static_cast<Int>(sc.size());
      rec.params.emplace_back("target", target);
      break;
    }
    case GovernanceKind::CtSc2t1: {
      if (t < 3) throw DomainError("ct_sc2t1 needs t >= 3");
      const Int A = t % 2 ? (3 * t + 1) / 2 : 5 * t / 2 + 1;
      const Int B = t % 2 ? t : 2 * t;
      const Int target = 2 * t * (2 * t + 1) * n + 2 * t * A + t * (t - 1) * (2 * t - 1) / 6;
      const auto cores = enumerate_t_cores_lattice(static_cast<int>(t), (2 * t + 1) * n + A);
      const auto sc = enumerate_sc_t_cores_lattice(static_cast<int>(2 * t + 1), 2 * t * n + B);
      check_images(rec, "C_t", cores, tcore_to_squares, static_cast<int>(t), target);
      check_images(rec, "SC_2t+1", sc, sc_odd_squares, static_cast<int>(t), target);
      rec.lhs = static_cast<Int>(cores.size());
      rec.rhs = static_cast<Int>(sc.size());
      rec.params.emplace_back("target", target);
      break;
    }
    case GovernanceKind::C4Sc7Union: break;
  }
  rec.elapsed_ms = ms_since(start);
  return rec;
}

ReportRecord sc6_sc7_cover_check(Int n) {
  const auto start = Clock::now();
  ReportRecord rec;
  rec.check = "sc6_sc7_cover";
  rec.params = {{"n", n}, {"target", 168 * n + 35}};
  rec.relation = "covers";
  rec.ok = true;
  const auto to_class = [](const SquaresRep& r) { return canonical_bkm(Triple{r.values[0], r.values[1], r.values[2]}); };
  std::set<TripleClass> six, seven;
  for (const auto& c : enumerate_sc_t_cores_lattice(6, 7 * n)) six.insert(to_class(sc_even_squares(c)));
  for (const auto& c : enumerate_sc_t_cores_lattice(7, 24 * n + 3)) seven.insert(to_class(sc_odd_squares(c)));
  const auto all = triple_classes(168 * n + 35);
  rec.lhs = static_cast<Int>(seven.size());
  rec.rhs = static_cast<Int>(all.size());
  for (const auto& c : all) {
    if (seven.contains(c)) continue;
    const bool by7 = std::any_of(c.values.begin(), c.values.end(), [](Int x) { return x % 7 == 0; });
    rec.fail("class " + to_string(c) + " is not an SC_7 image" + (by7 ? " (a coordinate is divisible by 7)" : ""));
  }
  for (const auto& c : six)
    if (!seven.contains(c)) rec.fail("SC_6 class " + to_string(c) + " is not an SC_7 class");
  rec.elapsed_ms = ms_since(start);
  return rec;
}

std::vector<ReportRecord> h_number_consistency() {
  const auto start = Clock::now();
  const Int h52 = class_count(-52);
  const Int h7 = class_count_7primitive(-2548);
  // 48 * (H/2 + H_7/4) = 24 H + 12 H_7.
  const Int scaled = 24 * h52 + 12 * h7;
  ReportRecord raw;
  raw.check = "h_numbers_triples";
  raw.params = {{"target", 637}};
  raw.lhs = scaled;
  raw.rhs = count_triples(637);
  raw.ok = raw.lhs == raw.rhs;
  if (!raw.ok)
    raw.witnesses.push_back("48 (H(52)/2 + H_7(2548)/4) = " + std::to_string(scaled) + " but there are " +
                            std::to_string(raw.rhs) + " ordered triples");
  ReportRecord classes;
  classes.check = "h_numbers_classes";
  classes.params = {{"target", 637}};
  classes.lhs = scaled;
  classes.rhs = 48 * static_cast<Int>(triple_classes(637).size());
  classes.ok = classes.lhs == classes.rhs;
  if (!classes.ok) classes.witnesses.push_back("48 |K_BKM(637)| = " + std::to_string(classes.rhs));
  raw.elapsed_ms = classes.elapsed_ms = ms_since(start);
  return {raw, classes};
}

ReportRecord sc6_strictness_check(Int n, const TripleClass& missing) {
  const auto start = Clock::now();
  ReportRecord rec;
  rec.check = "sc6_strict";
  rec.params = {{"n", n}};
  rec.relation = "<";
  rec.ok = true;
  const auto codings = enumerate_sc_t_cores_lattice(6, n);
  std::set<TripleClass> image;
  for (const auto& code : codings) {
    const auto fc = sc6_constraints_check(normalize_abacus(partition_from_ncoding(code), 6));
    const auto v = sc6_to_triple(fc, n);
    if (!image.insert(canonical_bkm(v)).second) rec.fail("sc6_to_triple is not injective at " + to_string(v));
  }
  const auto all = triple_classes(24 * n + 35);
  rec.lhs = static_cast<Int>(image.size());
  rec.rhs = static_cast<Int>(all.size());
  if (image.contains(missing)) rec.fail("class " + to_string(missing) + " is in the image");
  if (std::find(all.begin(), all.end(), missing) == all.end())
    rec.fail("class " + to_string(missing) + " does not solve 24n+35");
  for (const auto& c : image)
    if (std::find(all.begin(), all.end(), c) == all.end()) rec.fail("image class " + to_string(c) + " is not a solution");
  if (rec.lhs >= rec.rhs) rec.fail("image is not a strict subset");
  rec.elapsed_ms = ms_since(start);
  return rec;
}

}  // namespace tcores
