// Acceptance suite: runs every criterion exactly (tolerance 0 throughout)
// and prints one pass/fail line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "g1rank/catalog.hpp"
#include "g1rank/chartab.hpp"
#include "g1rank/cyclo.hpp"
#include "g1rank/errors.hpp"
#include "g1rank/modular.hpp"
#include "g1rank/numeric.hpp"
#include "g1rank/perm.hpp"
#include "g1rank/ranks.hpp"
#include "g1rank/ratrep.hpp"
#include "g1rank/splitting.hpp"

using namespace g1rank;

namespace {

int failures = 0;
std::string catalog_dir = "catalog";

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int number, const std::string& label, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

struct GroupArtifacts {
  std::string name;
  Group group;
  CharacterTable table;
  RankReport rank_report;
};

std::vector<GroupArtifacts> analyzed;  // every shipped catalog group

void compute_artifacts() {
  for (const char* file : {"order_lt24.grp", "families.grp"}) {
    auto entries = load_catalog_file(catalog_dir + "/" + file);
    for (auto& e : entries) {
      GroupArtifacts a;
      a.name = std::string(file) + ":" + e.name;
      a.group = generate_group(e.generators);
      a.table = character_table(a.group);
      a.rank_report = analyze(a.group, a.table, e.name);
      analyzed.push_back(std::move(a));
    }
  }
}

// ---- criterion 1: the headline counterexample ----
void criterion_1() {
  Timer t;
  Group g = generate_group(construct(GroupSpec::sl2_3()));
  RankReport r = analyze(g, "sl2_3");
  bool ok = r.R == 5 && r.P == 6 && r.difference == 1;
  double sec = t.seconds();
  ok = ok && sec < 1.0;
  std::ostringstream detail;
  detail << "R=" << r.R << " P=" << r.P << " diff=" << r.difference;
  report(1, "SL(2,F3) headline: R=5, P=6, P-R=1, under 1s", ok, sec,
         detail.str());
}

// ---- criterion 2: per-representation data ----
void criterion_2() {
  Timer t;
  Group g = generate_group(construct(GroupSpec::sl2_3()));
  RankReport r = analyze(g, "sl2_3");
  std::multiset<std::tuple<int64_t, int64_t, int64_t>> ovw;
  std::multiset<int64_t> degrees;
  for (const auto& row : r.rows) {
    ovw.insert({row.omega, row.v, row.w});
    degrees.insert(row.field_degree);
  }
  std::multiset<std::tuple<int64_t, int64_t, int64_t>> expected_ovw{
      {1, 2, 0}, {4, 2, 1}, {12, 2, 2}, {3, 2, 1}, {12, 2, 2}};
  std::multiset<int64_t> expected_degrees{1, 1, 1, 2, 2};
  bool ok = ovw == expected_ovw && degrees == expected_degrees;
  report(2, "SL(2,F3) per-representation (omega, v, w) and field degrees",
         ok, t.seconds());
}

// ---- criterion 3: the character table itself ----
void criterion_3() {
  Timer t;
  Group g = generate_group(construct(GroupSpec::sl2_3()));
  CharacterTable tab = character_table(g);

  std::multiset<int64_t> sizes, orders;
  for (const auto& c : tab.classes.classes) {
    sizes.insert(c.size);
    orders.insert(c.element_order);
  }
  bool ok = sizes == std::multiset<int64_t>{1, 1, 6, 4, 4, 4, 4} &&
            orders == std::multiset<int64_t>{1, 2, 4, 6, 3, 6, 3};

  // expected rows in the classical column order
  // (1)(−1)(order4)(order6a)(order3a)(order6b)(order3b), xi = zeta_3
  CycloNum one = CycloNum::one(12);
  CycloNum zero = CycloNum::zero(12);
  CycloNum two(12, Rat(2)), three(12, Rat(3));
  CycloNum m_one(12, Rat(-1)), m_two(12, Rat(-2));
  CycloNum xi = CycloNum::root_of_unity(12, 4);
  CycloNum xi2 = CycloNum::root_of_unity(12, 8);
  using Row = std::vector<CycloNum>;
  std::vector<Row> expected = {
      {one, one, one, one, one, one, one},
      {three, three, m_one, zero, zero, zero, zero},
      {two, m_two, zero, one, m_one, one, m_one},
      {one, one, one, xi, xi, xi2, xi2},
      {one, one, one, xi2, xi2, xi, xi},
      {two, m_two, zero, xi, -xi, xi2, -xi2},
      {two, m_two, zero, xi2, -xi2, xi, -xi},
  };

  // canonical class order here is (element order, size): find the class
  // indices per column role; the two order-3 and two order-6 classes are
  // presentational choices, so try both assignments of each pair
  std::vector<int> order3, order6;
  int col_id = -1, col_center = -1, col_4 = -1;
  for (int c = 0; c < tab.class_count(); ++c) {
    int64_t o = tab.classes.classes[c].element_order;
    if (o == 1) col_id = c;
    if (o == 2) col_center = c;
    if (o == 4) col_4 = c;
    if (o == 3) order3.push_back(c);
    if (o == 6) order6.push_back(c);
  }
  bool matched = false;
  if (ok && order3.size() == 2 && order6.size() == 2) {
    auto row_key = [&](const Row& row) {
      std::string k;
      for (const auto& v : row) k += v.str() + "|";
      return k;
    };
    std::multiset<std::string> computed;
    for (const auto& chi : tab.characters) computed.insert(row_key(chi.values));
    for (int swap6 = 0; swap6 < 2 && !matched; ++swap6)
      for (int swap3 = 0; swap3 < 2 && !matched; ++swap3) {
        // paper columns -> our class indices
        std::vector<int> cols = {col_id,
                                 col_center,
                                 col_4,
                                 order6[swap6],
                                 order3[swap3],
                                 order6[1 - swap6],
                                 order3[1 - swap3]};
        std::multiset<std::string> want;
        for (const auto& row : expected) {
          Row permuted(7, zero);
          for (int p = 0; p < 7; ++p) permuted[cols[p]] = row[p];
          want.insert(row_key(permuted));
        }
        matched = want == computed;
      }
  }
  report(3, "SL(2,F3) character table matches the classical table", ok && matched,
         t.seconds());
}

// ---- criterion 4: Berman counts ----
void criterion_4() {
  Timer t;
  Group g = generate_group(construct(GroupSpec::sl2_3()));
  ClassData cd = conjugacy_classes(g);
  int64_t c3 = fp_class_report(g, cd, 3).fused_class_count;
  int64_t c2 = fp_class_report(g, cd, 2).fused_class_count;
  int64_t eps = epsilon(g, cd);
  bool ok = c3 == 3 && c2 == 2 && eps == 5;
  std::ostringstream detail;
  detail << "p=3: " << c3 << ", p=2: " << c2 << ", epsilon=" << eps;
  report(4, "SL(2,F3) modular class counts", ok, t.seconds(), detail.str());
}

// ---- criterion 5: the order-<24 scan ----
void criterion_5() {
  Timer t;
  auto entries = load_catalog_file(catalog_dir + "/order_lt24.grp");
  ScanResult clean = scan(entries, 200);
  bool ok = clean.items.size() == 59 && clean.violators.empty();
  for (const auto& item : clean.items)
    ok = ok && item.status == ScanItem::Status::ok;

  // appending SL(2,F3) makes it the unique violator
  CatalogEntry sl;
  sl.name = "SL23";
  sl.generators = construct(GroupSpec::sl2_3());
  entries.push_back(sl);
  ScanResult with_sl = scan(entries, 200);
  ok = ok && with_sl.violators == std::vector<std::string>{"SL23"};

  double sec = t.seconds();
  ok = ok && sec < 60.0;
  report(5, "order-<24 scan: zero violators; appended SL(2,F3) is the "
            "unique violator; under 60s",
         ok, sec);
}

// ---- criterion 6: the S5 regression ----
void criterion_6() {
  Timer t;
  Group g = generate_group(construct(GroupSpec::symmetric(5)));
  RankReport r = analyze(g, "symmetric:5");
  // golden values produced by this pipeline and cross-checked by hand
  // from the rational character theory of S5
  bool ok = r.difference > 0 && r.R == 7 && r.P == 13 && r.difference == 6;
  double sec = t.seconds();
  ok = ok && sec < 120.0;
  std::ostringstream detail;
  detail << "R=" << r.R << " P=" << r.P << " diff=" << r.difference;
  report(6, "S5 difference is positive (golden: 6), under 120s", ok, sec,
         detail.str());
}

// ---- criterion 7: theorem-backed inequalities on every catalog group ----
void criterion_7() {
  Timer t;
  bool ok = true;
  std::string first_bad;
  for (const auto& a : analyzed) {
    bool good = a.rank_report.difference >= 0;
    try {
      for (const auto& [p, margin] : theorem_b_margins(a.rank_report))
        good = good && margin >= 0;
    } catch (const Error&) {
      good = false;
    }
    if (!good && first_bad.empty()) first_bad = a.name;
    ok = ok && good;
  }
  report(7, "P - R >= 0 and per-prime counting margins >= 0 on every "
            "catalog group",
         ok, t.seconds(), first_bad);
}

// ---- criterion 8: splitting against the Dedekind oracle ----
void criterion_8() {
  Timer t;
  bool ok = true;
  for (int64_t n = 1; n <= 30 && ok; ++n) {
    AbelianFieldDescriptor field = field_from_stabilizer(n, {1 % n});
    IntPolynomial phi_n = cyclotomic_polynomial(n);
    for (int64_t p = 2; p <= 30; ++p) {
      if (!is_prime(p)) continue;
      int64_t group_count = primes_above_count(field, p);
      int64_t oracle_count =
          n == 1 ? 1 : dedekind_factor_count_oracle(phi_n, p);
      if (group_count != oracle_count) {
        ok = false;
        std::fprintf(stderr, "  mismatch at n=%lld p=%lld: %lld vs %lld\n",
                     static_cast<long long>(n), static_cast<long long>(p),
                     static_cast<long long>(group_count),
                     static_cast<long long>(oracle_count));
        break;
      }
    }
  }
  // the two concrete Q(zeta_3) cases: one prime above 3, one above 2
  AbelianFieldDescriptor qz3 = field_from_stabilizer(3, {1});
  ok = ok && primes_above_count(qz3, 3) == 1 && primes_above_count(qz3, 2) == 1;
  report(8, "prime splitting agrees with polynomial factorization for "
            "n <= 30, p <= 30",
         ok, t.seconds());
}

// ---- criterion 9: character table invariants on every catalog group ----
void criterion_9() {
  Timer t;
  bool ok = true;
  std::string first_bad;
  for (const auto& a : analyzed) {
    const CharacterTable& tab = a.table;
    int k = tab.class_count();
    bool good = static_cast<int>(tab.characters.size()) == k;

    Int degree_sum = 0;
    for (const auto& chi : tab.characters)
      degree_sum += Int(chi.degree) * chi.degree;
    good = good && degree_sum == tab.group_order;

    std::vector<int> inv = class_power_map(a.group, tab.classes, -1);
    std::vector<CycloNum> size_consts;
    for (int c = 0; c < k; ++c)
      size_consts.push_back(
          CycloNum(tab.group_exponent, Rat(tab.classes.classes[c].size)));

    // exact row orthogonality
    for (size_t i = 0; i < tab.characters.size() && good; ++i)
      for (size_t j = i; j < tab.characters.size() && good; ++j) {
        CycloNum sum = CycloNum::zero(tab.group_exponent);
        for (int c = 0; c < k; ++c)
          sum += size_consts[c] * tab.characters[i].values[c] *
                 tab.characters[j].values[inv[c]];
        Rat expected = i == j ? Rat(tab.group_order) : Rat(0);
        good = good && sum == CycloNum(tab.group_exponent, expected);
      }

    // exact column orthogonality (the (b, a) cases are the complex
    // conjugates of the (a, b) ones)
    for (int aidx = 0; aidx < k && good; ++aidx)
      for (int b = aidx; b < k && good; ++b) {
        CycloNum sum = CycloNum::zero(tab.group_exponent);
        for (const auto& chi : tab.characters)
          sum += chi.values[aidx] * chi.values[inv[b]];
        Rat expected =
            aidx == b
                ? Rat(Int(tab.group_order / tab.classes.classes[aidx].size))
                : Rat(0);
        good = good && sum == CycloNum(tab.group_exponent, expected);
      }

    // lift consistency: zeta_e -> zeta_residue reproduces residues mod q
    const ClassData& cd = tab.classes;
    ModqTable modq = character_table_mod_q(a.group, cd);
    std::multiset<std::vector<int64_t>> residue_rows(modq.rows.begin(),
                                                     modq.rows.end());
    std::multiset<std::vector<int64_t>> mapped_rows;
    for (const auto& chi : tab.characters) {
      std::vector<int64_t> row;
      for (const auto& v : chi.values) {
        int64_t mapped = 0;
        int64_t zpow = 1;
        for (const Rat& coef : v.coeffs()) {
          if (coef.get_den() != 1) {
            good = false;
            break;
          }
          Int num = coef.get_num() % modq.q;
          if (num < 0) num += modq.q;
          mapped = (mapped + mulmod(num.get_si(), zpow, modq.q)) % modq.q;
          zpow = mulmod(zpow, modq.zeta_residue, modq.q);
        }
        row.push_back(mapped);
      }
      mapped_rows.insert(std::move(row));
    }
    good = good && mapped_rows == residue_rows;

    if (!good && first_bad.empty()) first_bad = a.name;
    ok = ok && good;
  }
  report(9, "character-table invariants (degrees, orthogonality, lift) on "
            "every catalog group",
         ok, t.seconds(), first_bad);
}

// ---- criterion 10: nilpotent groups satisfy the decomposition ----
void criterion_10() {
  Timer t;
  bool ok = true;
  int nilpotent_count = 0, odd_count = 0;
  std::string first_bad;
  for (const auto& a : analyzed) {
    bool good = true;
    if (a.rank_report.abelian && !a.rank_report.nilpotent)
      good = false;  // abelian groups are nilpotent
    if (a.rank_report.nilpotent) {
      ++nilpotent_count;
      good = good && a.rank_report.difference == 0;
    }
    // regression, not a theorem: every odd-order group in the shipped
    // catalogs has difference 0
    if (a.rank_report.group_order % 2 == 1) {
      ++odd_count;
      good = good && a.rank_report.difference == 0;
    }
    if (!good && first_bad.empty()) first_bad = a.name;
    ok = ok && good;
  }
  std::ostringstream detail;
  detail << nilpotent_count << " nilpotent and " << odd_count
         << " odd-order groups checked";
  if (!first_bad.empty()) detail << "; first failure " << first_bad;
  report(10, "every abelian/nilpotent (and odd-order) catalog group has "
             "difference 0",
         ok, t.seconds(), detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) catalog_dir = argv[1];
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();

    Timer t;
    compute_artifacts();
    std::printf("-- analyzed %zu catalog groups in %.2fs --\n",
                analyzed.size(), t.seconds());

    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 2;
  }
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
