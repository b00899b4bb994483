#include "tcores/map47.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "tcores/errors.hpp"
#include "tcores/ncoding.hpp"

namespace tcores {

namespace {

Int mod7(Int v) { return ((v % 7) + 7) % 7; }

void require_normalized(const Abacus& a, int t) {
  if (a.t != t) throw DomainError("expected a " + std::to_string(t) + "-abacus, got " + to_string(a));
  if (a.counts.front() != 0) throw DomainError("abacus " + to_string(a) + " is not normalized");
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

HookShift hook_shift(const Abacus& a) {
  require_normalized(a, 4);
  HookShift h;
  for (int j = 1; j <= 3; ++j) h.b[j - 1] = 4 * a.counts[j] + j;
  h.order = {0, 1, 2};
  std::sort(h.order.begin(), h.order.end(), [&](int x, int y) { return h.b[x] < h.b[y]; });
  return h;
}

CSet c_set(const HookShift& h) {
  const Int b1 = h.b[h.order[0]], b2 = h.b[h.order[1]], b3 = h.b[h.order[2]];
  CSet c;
  c.values = {b2, b3, b2 - b1, b3 - b1, (b2 + b3 - b1) / 2, b2 + b3 - b1};
  std::array<bool, 7> seen{};
  for (Int v : c.values) {
    const Int r = mod7(v);
    if (r == 0 || seen[r])
      throw InvariantViolation("C-set of b = " + to_string(h.b) + " is not distinct and nonzero mod 7");
    seen[r] = true;
    c.by_residue[r] = v;
  }
  return c;
}

Triple psi(const Abacus& a) {
  const auto b = hook_shift(a).b;
  return {-(b[0] + b[1] - b[2]) / 2, (b[0] + b[2] - b[1]) / 2, (b[1] + b[2] - b[0]) / 2};
}

Triple psi_from_type_table(const Abacus& ab) {
  require_normalized(ab, 4);
  const Int a1 = ab.counts[1], a2 = ab.counts[2], a3 = ab.counts[3];
  const Int g = std::min({a1, a2, a3});
  if (a1 == g) {
    const Int C = a2 - g, D = a3 - g;
    return {2 * C - 2 * D - 2 * g - 1, 2 * C - 2 * D + 2 * g, 2 * C + 2 * D + 2 * g + 2};
  }
  if (a2 == g) {
    const Int C = a3 - g, D = a1 - g - 1;
    return {2 * C + 2 * D + 2 * g + 3, 2 * C - 2 * D + 2 * g, 2 * C - 2 * D - 2 * g - 2};
  }
  const Int C = a1 - g - 1, D = a2 - g - 1;
  return {2 * C - 2 * D + 2 * g + 1, 2 * C + 2 * D + 2 * g + 4, 2 * C - 2 * D - 2 * g - 2};
}

Abacus sc7_abacus(const FamilyClassification& c) {
  const Int r = c.r, a = c.a, b = c.b;
  std::vector<Int> k;
  switch (c.type) {
    case FamilyType::I: k = {0, a, b, r, 2 * r - b, 2 * r - a, 2 * r}; break;
    case FamilyType::II: k = {0, 2 * r + 1, a, b, r, 2 * r - b, 2 * r - a}; break;
    case FamilyType::III: k = {0, a, 2 * r + 1 - a, 2 * r + 1, b, r, 2 * r - b}; break;
    case FamilyType::IV: k = {0, a, b, 2 * r + 1 - b, 2 * r + 1 - a, 2 * r + 1, r}; break;
    case FamilyType::V: k = {0, r + 1, 2 * r + 2, a, b, 2 * r + 1 - b, 2 * r + 1 - a}; break;
    case FamilyType::VI: k = {0, a, r + 1, 2 * r + 2 - a, 2 * r + 2, b, 2 * r + 1 - b}; break;
  }
  return Abacus(7, std::move(k));
}

FamilyClassification classify_sc7(const Abacus& ab) {
  require_normalized(ab, 7);
  const auto& k = ab.counts;
  const std::array<FamilyClassification, 6> candidates{{
      {FamilyType::I, k[3], k[1], k[2]},
      {FamilyType::II, k[4], k[2], k[3]},
      {FamilyType::III, k[5], k[1], k[4]},
      {FamilyType::IV, k[6], k[1], k[2]},
      {FamilyType::V, k[1] - 1, k[3], k[4]},
      {FamilyType::VI, k[2] - 1, k[1], k[5]},
  }};
  std::vector<FamilyClassification> hits;
  for (const auto& c : candidates) {
    if (c.r < 0 || c.a < 0 || c.b < 0) continue;
    try {
      if (sc7_abacus(c) == ab) hits.push_back(c);
    } catch (const DomainError&) {
      // a negative runner: not this shape
    }
  }
  if (hits.empty()) throw DomainError("abacus " + to_string(ab) + " matches no self-conjugate 7-core shape");
  if (hits.size() > 1)
    throw InvariantViolation("abacus " + to_string(ab) + " matches " + to_string(hits[0]) + " and " +
                             to_string(hits[1]));
  return hits.front();
}

Triple rho(const Abacus& ab) {
  const auto c = classify_sc7(ab);
  const Int r = c.r, a = c.a, b = c.b;
  switch (c.type) {
    case FamilyType::I: return {7 * r + 3, 7 * r + 2 - 7 * a, 7 * r + 1 - 7 * b};
    case FamilyType::II: return {7 * r + 4, 7 * r + 2 - 7 * a, 7 * r + 1 - 7 * b};
    case FamilyType::III: return {7 * r + 5, 7 * r + 4 - 7 * a, 7 * r + 1 - 7 * b};
    case FamilyType::IV: return {7 * r + 6, 7 * r + 5 - 7 * a, 7 * r + 4 - 7 * b};
    case FamilyType::V: return {7 * r + 8, 7 * r + 5 - 7 * a, 7 * r + 4 - 7 * b};
    case FamilyType::VI: return {7 * r + 9, 7 * r + 8 - 7 * a, 7 * r + 4 - 7 * b};
  }
  throw InvariantViolation("unknown family type");
}

Abacus rho_inverse(const Triple& v) {
  const auto c = canonical_bkm(v).values;
  const Int x = c[0], y = c[1], z = c[2];
  const std::array<Int, 6> s{x, 2 * x, x + y, x - y, x + z, x - z};
  std::array<Int, 7> by{};
  std::array<bool, 7> seen{};
  for (Int e : s) {
    const Int r = mod7(e);
    if (r == 0 || seen[r]) throw InvariantViolation("residue collision in rho_inverse for " + to_string(v));
    seen[r] = true;
    by[r] = e;
  }
  std::vector<Int> k{0};
  for (int i = 1; i <= 6; ++i) k.push_back(by[i] / 7);
  return Abacus(7, std::move(k));
}

Abacus phi47(const Abacus& a) {
  require_normalized(a, 4);
  const auto size = partition_from_abacus(a).size();
  if (size % 7 != 2) throw DomainError("phi47 needs a 4-core of 7n+2, got size " + std::to_string(size));
  if ((size / 7) % 7 == 4) throw DomainError("phi47 is undefined for n = 4 mod 7");
  const auto c = c_set(hook_shift(a));
  std::vector<Int> k{0};
  for (int i = 1; i <= 6; ++i) k.push_back(c.by_residue[i] / 7);
  return Abacus(7, std::move(k));
}

ReportRecord kbkm_identity(Int m) {
  const auto start = std::chrono::steady_clock::now();
  ReportRecord rec;
  rec.check = "kbkm";
  rec.params = {{"m", m}};
  const Int c4 = count_t_cores(4, m), sc4 = count_sc_t_cores(4, m);
  rec.lhs = 2 * static_cast<Int>(triple_classes(8 * m + 5).size());
  rec.rhs = c4 + sc4;
  rec.ok = rec.lhs == rec.rhs;
  if (!rec.ok)
    rec.witnesses.push_back("2|K_BKM(" + std::to_string(8 * m + 5) + ")| = " + std::to_string(rec.lhs) +
                            ", c_4 + sc_4 = " + std::to_string(rec.rhs));
  rec.elapsed_ms = ms_since(start);
  return rec;
}

ReportRecord verify_two_to_one(Int n) {
  const auto start = std::chrono::steady_clock::now();
  if (n % 7 == 4) {
    auto rec = kbkm_identity(7 * n + 2);
    rec.check = "map47";
    rec.params = {{"n", n}, {"fallback", 1}};
    rec.elapsed_ms = ms_since(start);
    return rec;
  }
  ReportRecord rec;
  rec.check = "map47";
  rec.params = {{"n", n}};
  rec.ok = true;
  std::map<Abacus, std::vector<Partition>> fibers;
  const auto cores = enumerate_t_cores_lattice(4, 7 * n + 2);
  for (const auto& code : cores) {
    const auto p = partition_from_ncoding(code);
    const auto a = normalize_abacus(p, 4);
    Abacus img;
    try {
      img = phi47(a);
    } catch (const InvariantViolation& e) {
      rec.fail(to_string(p) + ": " + e.what());
      continue;
    }
    const auto q = partition_from_abacus(img);
    if (q.size() != 8 * n + 1 || !is_t_core(q, 7) || !is_self_conjugate(q) || normalize_abacus(q, 7) != img)
      rec.fail(to_string(p) + " maps to " + to_string(img) + ", not an abacus of SC_7(" + std::to_string(8 * n + 1) + ")");
    const auto via = rho_inverse(psi(a));
    if (via != img) rec.fail(to_string(p) + ": phi47 " + to_string(img) + " but rho^-1 p psi " + to_string(via));
    fibers[img].push_back(p);
  }
  for (const auto& [img, parts] : fibers) {
    if (parts.size() != 2) {
      rec.fail("fiber of " + to_string(img) + " has " + std::to_string(parts.size()) + " elements");
      continue;
    }
    if (conjugate(parts[0]) != parts[1])
      rec.fail("fiber of " + to_string(img) + " is " + to_string(parts[0]) + ", " + to_string(parts[1]));
  }
  rec.lhs = static_cast<Int>(cores.size());
  rec.rhs = 2 * count_sc_t_cores(7, 8 * n + 1);
  if (static_cast<Int>(fibers.size()) * 2 != rec.rhs)
    rec.fail("image has " + std::to_string(fibers.size()) + " elements, sc_7 = " + std::to_string(rec.rhs / 2));
  if (rec.lhs != rec.rhs) rec.fail("c_4 = " + std::to_string(rec.lhs) + ", 2 sc_7 = " + std::to_string(rec.rhs));
  rec.elapsed_ms = ms_since(start);
  return rec;
}

std::vector<Map47Row> map47_rows(Int n) {
  std::vector<Map47Row> rows;
  for (const auto& code : enumerate_t_cores_lattice(4, 7 * n + 2)) {
    const auto p = partition_from_ncoding(code);
    const auto a = normalize_abacus(p, 4);
    const auto img = phi47(a);
    rows.push_back({p, a, hook_shift(a).b, psi(a), img, partition_from_abacus(img)});
  }
  std::sort(rows.begin(), rows.end(), [](const Map47Row& x, const Map47Row& y) { return x.partition > y.partition; });
  return rows;
}

}  // namespace tcores
