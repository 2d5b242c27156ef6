// Shared fixture data for the unit and acceptance suites: the published
// coefficient tables, the worked discretization examples, the generic
// recurrence relations and the complete reduction catalog with its expected
// substitutions and example decompositions. Entries that repair a known
// misprint in the source tables are marked "corrected" next to the value.
#ifndef LIEPOLY_TESTS_FIXTURES_HPP
#define LIEPOLY_TESTS_FIXTURES_HPP

#include <cmath>
#include <string>
#include <vector>

#include <liepoly/branching.hpp>

namespace fixtures {

using liepoly::Monomial;
using liepoly::MultiPoly;
using liepoly::Rat;
using liepoly::Weight;

// ---------------------------------------------------------------------------
// Coefficient tables. Each block lists labels of one congruence class; the
// monomial columns are the leading monomials of the block's rows, so row i
// stores coefficients against monomial(labels[j]) for j <= i. The stored
// rows are the complete polynomials.
struct TableBlock {
  const char* group;
  std::vector<Weight> labels;
  std::vector<std::vector<long long>> coeffs;
};

inline const std::vector<TableBlock>& table_blocks() {
  static const std::vector<TableBlock> blocks = {
      // A2, classes 0 / 1 / 2
      {"A2",
       {{0, 0}, {1, 1}, {3, 0}, {0, 3}},
       {{1}, {-3, 1}, {3, -3, 1}, {3, -3, 0, 1}}},
      {"A2", {{0, 1}, {2, 0}, {1, 2}}, {{1}, {-2, 1}, {-1, -2, 1}}},
      {"A2", {{1, 0}, {0, 2}, {2, 1}}, {{1}, {-2, 1}, {-1, -2, 1}}},
      // C2, classes 0 / 1
      {"C2",
       {{0, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {0, 3}},
       {{1},
        {0, 1},
        {-4, -2, 1},
        {4, 4, -2, 1},
        {0, -6, 0, -2, 1},
        {0, 9, 0, 6, -3, 1}}},
      {"C2",
       {{1, 0}, {1, 1}, {3, 0}, {1, 2}},
       {{1}, {-2, 1}, {-3, -3, 1}, {6, 3, -2, 1}}},
      // A3, classes 0 / 1 / 2 / 3
      {"A3",
       {{0, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 2}, {2, 1, 0}},
       {{1}, {-4, 1}, {2, -2, 1}, {4, -1, -2, 1}, {4, -1, -2, 0, 1}}},
      {"A3",
       {{1, 0, 0}, {0, 1, 1}, {0, 0, 3}, {2, 0, 1}, {1, 2, 0}},
       {{1}, {-3, 1}, {3, -3, 1}, {-1, -2, 0, 1}, {5, -1, 0, -2, 1}}},
      {"A3",
       {{0, 1, 0}, {0, 0, 2}, {2, 0, 0}, {1, 1, 1}, {0, 3, 0}},
       {{1}, {-2, 1}, {-2, 0, 1}, {4, -3, -3, 1}, {-3, 3, 3, -3, 1}}},
      {"A3",
       {{0, 0, 1}, {1, 1, 0}, {3, 0, 0}, {1, 0, 2}, {0, 2, 1}},
       {{1}, {-3, 1}, {3, -3, 1}, {-1, -2, 0, 1}, {5, -1, 0, -2, 1}}},
      // B3, classes 0 / 1
      {"B3",
       {{0, 0, 0},
        {1, 0, 0},
        {0, 1, 0},
        {2, 0, 0},
        {0, 0, 2},
        {1, 1, 0},
        {1, 0, 2},
        {3, 0, 0},
        {0, 2, 0},
        {0, 1, 2},
        {2, 1, 0}},
       {{1},
        {0, 1},
        {0, 0, 1},
        {-6, 0, -2, 1},
        {-8, -4, -2, 0, 1},
        {24, 8, 6, 0, -3, 1},
        {0, -8, -2, -4, 0, -2, 1},
        {-24, -15, -6, 0, 3, -3, 0, 1},
        {12, 16, 8, 4, 0, 4, -2, 0, 1},
        {-48, -20, -20, 0, 6, -6, 0, 0, -2, 1},
        {0, 8, -6, 4, 0, 2, -1, 0, -2, 0, 1}}},
      {"B3",
       {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 3}, {2, 0, 1}, {1, 1, 1}},
       {{1},
        {-3, 1},
        {3, -2, 1},
        {-9, -3, -3, 1},
        {-3, -1, -2, 0, 1},
        {30, 12, 8, -3, -2, 1}}},
      // C3, classes 0 / 1
      {"C3",
       {{0, 0, 0},
        {0, 1, 0},
        {2, 0, 0},
        {1, 0, 1},
        {0, 2, 0},
        {2, 1, 0},
        {0, 0, 2},
        {1, 1, 1},
        {0, 3, 0},
        {0, 1, 2}},
       {{1},
        {0, 1},
        {-6, -2, 1},
        {0, -2, 0, 1},
        {12, 8, -4, -2, 1},
        {0, -6, 0, -1, -2, 1},
        {-8, -8, 4, 4, -2, 0, 1},
        {0, 12, 0, -4, 4, -2, -3, 1},
        {0, 9, 0, 3, 6, -3, 3, -3, 1},
        {0, -18, 0, 3, -12, 6, 3, 3, -2, 1}}},
      {"C3",
       {{1, 0, 0},
        {0, 0, 1},
        {1, 1, 0},
        {3, 0, 0},
        {0, 1, 1},
        {2, 0, 1},
        {1, 2, 0},
        {1, 0, 2},
        {0, 2, 1},
        {0, 0, 3}},
       {{1},
        {0, 1},
        {-4, -3, 1},
        {-3, 3, -3, 1},
        {4, 6, -2, 0, 1},
        {0, -9, 0, 0, -2, 1},
        {12, -3, 9, -4, -1, -2, 1},
        {-12, -6, -6, 4, -1, 4, -2, 1},
        {0, 27, 0, 0, 12, -6, 0, -2, 1},
        {0, -27, 0, 0, -18, 9, 0, 6, -3, 1}}},
  };
  return blocks;
}

inline MultiPoly table_row_poly(const TableBlock& block, size_t row) {
  int n = (int)block.labels[0].size();
  MultiPoly p(n);
  for (size_t j = 0; j < block.coeffs[row].size(); ++j) {
    if (block.coeffs[row][j] == 0) continue;
    Monomial m(block.labels[j].begin(), block.labels[j].end());
    p.add_term(m, Rat(block.coeffs[row][j]));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Worked discretization examples: grid point s/M with its realified u-image.
struct GridImage {
  const char* group;
  long long M;
  std::vector<long long> s;
  std::vector<double> u;
  bool exact; // closed-form algebraic coordinates, asserted at 1e-12
};

inline const std::vector<GridImage>& grid_images() {
  const double pi = 3.14159265358979323846;
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  auto c = [&](double num, double den) { return std::cos(pi * num / den); };
  auto s = [&](double num, double den) { return std::sin(pi * num / den); };
  static const std::vector<GridImage> rows = {
      // Rank 2, M = 3 triangle (coordinates (Re u1, Im u1)).
      {"A2", 3, {0, 0}, {3, 0}, true},
      {"A2", 3, {0, 3}, {-1.5, 1.5 * r3}, true},
      {"A2", 3, {2, 1}, {-2 * c(1, 9) + c(2, 9), -2 * s(1, 9) - s(2, 9)}, false},
      {"A2", 3, {3, 0}, {-1.5, -1.5 * r3}, true},
      {"A2", 3, {2, 0}, {-c(1, 9) + 2 * s(1, 18), -2 * c(1, 18) + s(1, 9)}, false},
      {"A2", 3, {1, 2}, {-2 * c(1, 9) + c(2, 9), 2 * s(1, 9) + s(2, 9)}, false},
      {"A2", 3, {1, 0}, {2 * c(2, 9) + s(1, 18), c(1, 18) - 2 * s(2, 9)}, false},
      {"A2", 3, {0, 1}, {2 * c(2, 9) + s(1, 18), -c(1, 18) + 2 * s(2, 9)}, false},
      {"A2", 3, {1, 1}, {0, 0}, true},
      // corrected: the leading cosine enters once, by u1 <-> conj(u1) symmetry
      // with the s = (2,0) row
      {"A2", 3, {0, 2}, {-c(1, 9) + 2 * s(1, 18), 2 * c(1, 18) - s(1, 9)}, false},
      // C2, M = 4.
      {"C2", 4, {0, 0}, {4, 4}, true},
      {"C2", 4, {0, 1}, {2 * r2, 2}, true},
      {"C2", 4, {2, 0}, {0, -4}, true},
      {"C2", 4, {0, 2}, {0, 0}, true},
      {"C2", 4, {0, 3}, {-2 * r2, 2}, true},
      {"C2", 4, {1, 2}, {-2, 0}, true},
      {"C2", 4, {0, 4}, {-4, 4}, true},
      {"C2", 4, {1, 0}, {2, 0}, true},
      {"C2", 4, {1, 1}, {0, -2}, true},
      // A3, M = 3 (coordinates (Re u1, u2, Im u1)).
      {"A3", 3, {0, 0, 0}, {4, 6, 0}, true},
      {"A3", 3, {0, 0, 3}, {0, -6, 4}, true},
      {"A3", 3, {0, 3, 0}, {-4, 6, 0}, true},
      {"A3", 3, {2, 0, 1}, {0, -3, -2}, true},
      {"A3", 3, {2, 1, 0}, {-0.5, -3, -1.5 * r3}, true},
      {"A3", 3, {1, 0, 2}, {0, -3, 2}, true},
      {"A3", 3, {1, 2, 0}, {-1.5 * r3, 3, -0.5}, true},
      {"A3", 3, {0, 2, 1}, {-1.5 * r3, 3, 0.5}, true},
      {"A3", 3, {1, 0, 0}, {1.5 * r3, 3, -0.5}, true},
      {"A3", 3, {0, 1, 0}, {2, 3, 0}, true},
      {"A3", 3, {1, 1, 0}, {0, 0, -1}, true},
      {"A3", 3, {1, 0, 1}, {1, 0, 0}, true},
      {"A3", 3, {1, 1, 1}, {-1, 0, 0}, true},
      {"A3", 3, {2, 0, 0}, {0.5, -3, -1.5 * r3}, true},
      {"A3", 3, {0, 0, 2}, {0.5, -3, 1.5 * r3}, true},
      {"A3", 3, {3, 0, 0}, {0, -6, -4}, true},
      {"A3", 3, {0, 1, 2}, {-0.5, -3, 1.5 * r3}, true},
      {"A3", 3, {0, 0, 1}, {1.5 * r3, 3, 0.5}, true},
      {"A3", 3, {0, 1, 1}, {0, 0, 1}, true},
      {"A3", 3, {0, 2, 0}, {-2, 3, 0}, true},
      // B3, M = 4.
      {"B3", 4, {0, 0, 0}, {6, 12, 8}, true},
      {"B3", 4, {0, 0, 1}, {0, 0, 2 * r2}, true},
      {"B3", 4, {0, 2, 0}, {-2, -4, 0}, true},
      {"B3", 4, {2, 1, 0}, {2, 0, -4}, true},
      {"B3", 4, {4, 0, 0}, {6, 12, -8}, true},
      {"B3", 4, {3, 0, 0}, {4, 4, -4 * r2}, true},
      {"B3", 4, {0, 1, 0}, {2, 0, 4}, true},
      {"B3", 4, {1, 0, 0}, {4, 4, 4 * r2}, true},
      {"B3", 4, {1, 1, 0}, {0, -4, 0}, true},
      {"B3", 4, {2, 0, 0}, {2, -4, 0}, true},
      {"B3", 4, {2, 0, 1}, {0, 0, -2 * r2}, true},
      {"B3", 4, {1, 0, 1}, {-2, 0, 0}, true},
      {"B3", 4, {0, 1, 1}, {-4, 4, 0}, true},
      {"B3", 4, {0, 0, 2}, {-6, 12, 0}, true},
      // C3, M = 4.
      {"C3", 4, {0, 0, 0}, {6, 12, 8}, true},
      {"C3", 4, {0, 0, 1}, {3 * r2, 6, 2 * r2}, true},
      {"C3", 4, {0, 1, 0}, {2, 0, 0}, true},
      {"C3", 4, {0, 1, 1}, {-r2, -2, 2 * r2}, true},
      {"C3", 4, {1, 0, 1}, {r2, -2, -2 * r2}, true},
      {"C3", 4, {1, 0, 2}, {-2, 0, 0}, true},
      {"C3", 4, {1, 1, 0}, {0, -4, 0}, true},
      {"C3", 4, {0, 2, 0}, {-2, -4, 8}, true},
      {"C3", 4, {0, 1, 2}, {-4, 4, 0}, true},
      {"C3", 4, {2, 0, 0}, {2, -4, -8}, true},
      {"C3", 4, {0, 0, 4}, {-6, 12, -8}, true},
      {"C3", 4, {0, 0, 2}, {0, 0, 0}, true},
      {"C3", 4, {1, 0, 0}, {4, 4, 0}, true},
      {"C3", 4, {0, 0, 3}, {-3 * r2, 6, -2 * r2}, true},
  };
  return rows;
}

// ---------------------------------------------------------------------------
// Generic and edge recurrences. A definition fixes the group, family and
// variable index; "subtract" lists the index offsets of the lower terms,
// "fixed" pins coordinates (-1 = free), "min_free" gives the printed
// validity bound per coordinate.
struct RecurrenceDef {
  const char* name;
  const char* group;
  char family; // 'C' or 'S'
  int var;
  std::vector<std::vector<long long>> subtract;
  std::vector<long long> fixed;
  std::vector<long long> min_free;
};

inline const std::vector<RecurrenceDef>& recurrences() {
  static const std::vector<RecurrenceDef> defs = {
      // --- A2 ---
      {"A2 C u1", "A2", 'C', 0, {{0, -1}, {-1, 1}}, {-1, -1}, {2, 2}},
      {"A2 C u2", "A2", 'C', 1, {{1, -1}, {-1, 0}}, {-1, -1}, {2, 2}},
      {"A2 C u1 edge", "A2", 'C', 0, {{-1, 1}}, {-1, 0}, {2, 0}},
      {"A2 C u2 edge", "A2", 'C', 1, {{1, -1}}, {0, -1}, {0, 2}},
      {"A2 S u1", "A2", 'S', 0, {{0, -1}, {-1, 1}}, {-1, -1}, {2, 2}},
      {"A2 S u2", "A2", 'S', 1, {{-1, 0}, {1, -1}}, {-1, -1}, {2, 2}},
      // --- C2 ---
      {"C2 C u1", "C2", 'C', 0, {{-1, 0}, {1, -1}, {-1, 1}}, {-1, -1}, {2, 2}},
      {"C2 C u2", "C2", 'C', 1, {{0, -1}, {2, -1}, {-2, 1}}, {-1, -1}, {3, 2}},
      {"C2 C u1 edge", "C2", 'C', 0, {{-1, 0}, {-1, 1}}, {-1, 0}, {2, 0}},
      {"C2 C u2 edge", "C2", 'C', 1, {{0, -1}, {2, -1}}, {0, -1}, {0, 2}},
      {"C2 S u1", "C2", 'S', 0, {{1, -1}, {-1, 1}, {-1, 0}}, {-1, -1}, {2, 2}},
      {"C2 S u2", "C2", 'S', 1, {{0, -1}, {2, -1}, {-2, 1}}, {-1, -1}, {3, 2}},
      // --- A3 ---
      {"A3 C u1", "A3", 'C', 0, {{-1, 1, 0}, {0, 0, -1}, {0, -1, 1}}, {-1, -1, -1}, {2, 2, 2}},
      {"A3 C u2", "A3", 'C', 1,
       {{1, 0, -1}, {1, -1, 1}, {-1, 1, -1}, {-1, 0, 1}, {0, -1, 0}},
       {-1, -1, -1},
       {2, 2, 2}},
      {"A3 C u3", "A3", 'C', 2, {{1, -1, 0}, {-1, 0, 0}, {0, 1, -1}}, {-1, -1, -1}, {2, 2, 2}},
      {"A3 C u1 k00", "A3", 'C', 0, {{-1, 1, 0}}, {-1, 0, 0}, {2, 0, 0}},
      {"A3 C u2 0k0", "A3", 'C', 1, {{0, -1, 0}, {1, -1, 1}}, {0, -1, 0}, {0, 2, 0}},
      {"A3 C u1 kl0", "A3", 'C', 0, {{0, -1, 1}, {-1, 1, 0}}, {-1, -1, 0}, {2, 2, 0}},
      {"A3 C u2 kl0", "A3", 'C', 1,
       {{-1, 0, 1}, {0, -1, 0}, {1, -1, 1}},
       {-1, -1, 0},
       {2, 2, 0}},
      {"A3 C u1 k0m", "A3", 'C', 0, {{-1, 1, 0}, {0, 0, -1}}, {-1, 0, -1}, {2, 0, 2}},
      {"A3 S u1", "A3", 'S', 0, {{-1, 1, 0}, {0, 0, -1}, {0, -1, 1}}, {-1, -1, -1}, {2, 2, 2}},
      {"A3 S u2", "A3", 'S', 1,
       {{0, -1, 0}, {1, -1, 1}, {-1, 1, -1}, {1, 0, -1}, {-1, 0, 1}},
       {-1, -1, -1},
       {2, 2, 2}},
      {"A3 S u3", "A3", 'S', 2, {{1, -1, 0}, {-1, 0, 0}, {0, 1, -1}}, {-1, -1, -1}, {2, 2, 2}},
      // --- C3 generic ---
      {"C3 C u1", "C3", 'C', 0,
       {{0, -1, 1}, {1, -1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, 1, -1}},
       {-1, -1, -1},
       {2, 2, 2}},
      {"C3 C u2", "C3", 'C', 1,
       {{1, 0, -1},
        {-1, 0, 1},
        {0, -1, 0},
        {1, 1, -1},
        {-2, 1, 0},
        {-1, -1, 1},
        {-1, 1, -1},
        {2, -1, 0},
        {1, -1, 1},
        {1, -2, 1},
        {-1, 2, -1}},
       {-1, -1, -1},
       {3, 3, 2}},
      {"C3 C u3", "C3", 'C', 2,
       {{0, -2, 1}, {-2, 0, 1}, {0, 2, -1}, {0, 0, -1}, {2, -2, 1}, {-2, 2, -1}, {2, 0, -1}},
       {-1, -1, -1},
       {3, 3, 2}},
      // --- C3 additional ---
      {"C3 C u1 k00", "C3", 'C', 0, {{-1, 1, 0}, {-1, 0, 0}}, {-1, 0, 0}, {2, 0, 0}},
      {"C3 C u1 kl0", "C3", 'C', 0,
       {{0, -1, 1}, {-1, 0, 0}, {1, -1, 0}, {-1, 1, 0}},
       {-1, -1, 0},
       {2, 2, 0}},
      {"C3 C u2 kl0", "C3", 'C', 1,
       {{-1, 0, 1}, {0, -1, 0}, {2, -1, 0}, {-2, 1, 0}, {-1, -1, 1}, {1, -1, 1}, {1, -2, 1}},
       {-1, -1, 0},
       {3, 3, 0}},
      {"C3 C u2 0lm", "C3", 'C', 1,
       {{1, 0, -1}, {0, -1, 0}, {2, -1, 0}, {1, 1, -1}, {1, -1, 1}, {1, -2, 1}},
       {0, -1, -1},
       {0, 3, 2}},
      {"C3 C u3 0lm", "C3", 'C', 2,
       {{0, -2, 1}, {0, 0, -1}, {2, -2, 1}, {2, 0, -1}, {0, 2, -1}},
       {0, -1, -1},
       {0, 3, 2}},
      {"C3 C u1 k0m", "C3", 'C', 0,
       {{-1, 1, 0}, {0, 1, -1}, {-1, 0, 0}},
       {-1, 0, -1},
       {2, 0, 2}},
      {"C3 C u3 k0m", "C3", 'C', 2,
       {{-2, 0, 1}, {0, 0, -1}, {-2, 2, -1}, {2, 0, -1}, {0, 2, -1}},
       {-1, 0, -1},
       {3, 0, 2}},
      {"C3 C u2 0l0", "C3", 'C', 1,
       {{0, -1, 0}, {2, -1, 0}, {1, -1, 1}, {1, -2, 1}},
       {0, -1, 0},
       {0, 3, 0}},
      {"C3 C u3 00m", "C3", 'C', 2, {{0, 0, -1}, {2, 0, -1}, {0, 2, -1}}, {0, 0, -1}, {0, 0, 2}},
      // --- C3 S generic ---
      {"C3 S u1", "C3", 'S', 0,
       {{0, -1, 1}, {1, -1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, 1, -1}},
       {-1, -1, -1},
       {2, 2, 2}},
      {"C3 S u2", "C3", 'S', 1,
       {{1, 0, -1},
        {-1, 0, 1},
        {2, -1, 0},
        {-2, 1, 0},
        {-1, -1, 1},
        {-1, 1, -1},
        {1, 1, -1},
        {1, -1, 1},
        {1, -2, 1},
        {-1, 2, -1},
        {0, -1, 0}},
       {-1, -1, -1},
       {2, 2, 2}},
      {"C3 S u3", "C3", 'S', 2,
       {{0, -2, 1}, {-2, 0, 1}, {0, 2, -1}, {2, -2, 1}, {-2, 2, -1}, {2, 0, -1}, {0, 0, -1}},
       {-1, -1, -1},
       {2, 2, 2}},
  };
  return defs;
}

// ---------------------------------------------------------------------------
// Reduction catalog fixtures.
struct ProjectionFixture {
  const char* rule;
  std::vector<std::vector<long long>> projection;
  bool corrected; // differs from the printed matrix (see notes in the tests)
};

inline const std::vector<ProjectionFixture>& projections() {
  static const std::vector<ProjectionFixture> rows = {
      {"A2:A1", {{2, 2}}, false},
      {"C2:A1xA1", {{1, 1}, {0, 1}}, false},
      {"C2:A1", {{3, 4}}, false},
      {"G2:A1xA1", {{1, 1}, {3, 1}}, false},
      {"G2:A2", {{1, 0}, {1, 1}}, false},
      {"G2:A1", {{10, 6}}, false},
      {"A3:C2", {{1, 0, 1}, {0, 1, 0}}, false},
      {"A3:A1xA1", {{1, 0, 1}, {1, 2, 1}}, false},
      // corrected: row two reads (1,0,0); the variant with (1,1,0) does not
      // project parent orbits onto child-invariant point sets
      {"B3:A3", {{0, 1, 1}, {1, 0, 0}, {0, 1, 0}}, true},
      {"B3:A1xA1xA1", {{1, 1, 0}, {1, 1, 1}, {0, 2, 1}}, false},
      {"B3:G2", {{0, 1, 0}, {1, 0, 1}}, false},
      {"C3:C2xA1", {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, false},
      {"C3:A2", {{1, 1, 2}, {0, 1, 0}}, false},
      {"C3:A1", {{5, 8, 9}}, false},
  };
  return rows;
}

// Term list over the child's concatenated variables.
using Terms = std::vector<std::pair<Monomial, long long>>;

inline MultiPoly make_poly(int arity, const Terms& terms) {
  MultiPoly p(arity);
  for (const auto& [m, c] : terms) p.add_term(m, Rat(c));
  return p;
}

struct SubstitutionFixture {
  const char* rule;
  int var; // 0-based parent variable
  Terms image;
  bool corrected;
};

inline const std::vector<SubstitutionFixture>& substitutions() {
  static const std::vector<SubstitutionFixture> rows = {
      {"A2:A1", 0, {{{2}, 1}, {{0}, -1}}, false},
      {"A2:A1", 1, {{{2}, 1}, {{0}, -1}}, false},
      {"C2:A1xA1", 0, {{{1, 0}, 1}, {{0, 1}, 1}}, false},
      {"C2:A1xA1", 1, {{{1, 1}, 1}}, false},
      {"C2:A1", 0, {{{3}, 1}, {{1}, -2}}, false},
      {"C2:A1", 1, {{{4}, 1}, {{2}, -3}}, false},
      {"G2:A1xA1", 0, {{{1, 3}, 1}, {{1, 1}, -3}, {{2, 0}, 1}, {{0, 0}, -2}}, false},
      {"G2:A1xA1", 1, {{{1, 1}, 1}, {{0, 2}, 1}, {{0, 0}, -2}}, false},
      {"G2:A2", 0, {{{1, 1}, 1}, {{0, 0}, -3}}, false},
      {"G2:A2", 1, {{{1, 0}, 1}, {{0, 1}, 1}}, false},
      // corrected: the degree-4 coefficient is -30 (the printed -31 breaks
      // the defining identity X1 = C10 + C8 + C2 at Y = 2)
      {"G2:A1", 0,
       {{{10}, 1}, {{8}, -9}, {{6}, 27}, {{4}, -30}, {{2}, 10}, {{0}, -2}},
       true},
      {"G2:A1", 1, {{{6}, 1}, {{4}, -5}, {{2}, 6}, {{0}, -2}}, false},
      {"A3:C2", 0, {{{1, 0}, 1}}, false},
      {"A3:C2", 1, {{{0, 1}, 1}, {{0, 0}, 2}}, false},
      {"A3:C2", 2, {{{1, 0}, 1}}, false},
      {"A3:A1xA1", 0, {{{1, 1}, 1}}, false},
      // corrected: the orbit of omega_2 also meets (+-2, 0), so X2 picks up
      // Y1^2 as well
      {"A3:A1xA1", 1, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -2}}, true},
      {"A3:A1xA1", 2, {{{1, 1}, 1}}, false},
      // corrected along with the B3:A3 projection matrix
      {"B3:A3", 0, {{{0, 1, 0}, 1}}, true},
      {"B3:A3", 1, {{{1, 0, 1}, 1}, {{0, 0, 0}, -4}}, true},
      {"B3:A3", 2, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, true},
      {"B3:A1xA1xA1", 0, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}, {{0, 0, 0}, -2}}, false},
      {"B3:A1xA1xA1", 1,
       {{{1, 1, 2}, 1}, {{1, 1, 0}, -2}, {{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 0}, -4}},
       false},
      {"B3:A1xA1xA1", 2, {{{1, 0, 1}, 1}, {{0, 1, 1}, 1}}, false},
      {"B3:G2", 0, {{{0, 1}, 1}}, false},
      {"B3:G2", 1, {{{1, 0}, 1}, {{0, 1}, 1}}, false},
      {"B3:G2", 2, {{{0, 1}, 1}, {{0, 0}, 2}}, false},
      {"C3:C2xA1", 0, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, false},
      {"C3:C2xA1", 1, {{{0, 1, 0}, 1}, {{1, 0, 1}, 1}}, false},
      {"C3:C2xA1", 2, {{{0, 1, 1}, 1}}, false},
      {"C3:A2", 0, {{{1, 0}, 1}, {{0, 1}, 1}}, false},
      {"C3:A2", 1, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -3}}, false},
      {"C3:A2", 2,
       {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, -2}, {{0, 1}, -2}, {{0, 0}, 2}},
       false},
      {"C3:A1", 0, {{{5}, 1}, {{3}, -4}, {{1}, 3}}, false},
      {"C3:A1", 1, {{{8}, 1}, {{6}, -7}, {{4}, 16}, {{2}, -13}}, false},
      {"C3:A1", 2, {{{9}, 1}, {{7}, -8}, {{5}, 20}, {{3}, -15}}, false},
  };
  return rows;
}

struct ReductionFixture {
  const char* rule;
  Weight parent_label;
  Terms image; // over child variables
  std::vector<std::pair<Weight, long long>> decomposition;
  bool corrected;
};

inline const std::vector<ReductionFixture>& reductions() {
  static const std::vector<ReductionFixture> rows = {
      {"A2:A1", {1, 1}, {{{4}, 1}, {{2}, -2}, {{0}, -2}}, {{{4}, 1}, {{2}, 2}}, false},
      {"A2:A1", {0, 2}, {{{4}, 1}, {{2}, -4}, {{0}, 3}}, {{{4}, 1}, {{0}, 1}}, false},
      {"C2:A1xA1",
       {2, 1},
       {{{3, 1}, 1}, {{1, 3}, 1}, {{1, 1}, -6}},
       {{{3, 1}, 1}, {{1, 3}, 1}},
       false},
      {"C2:A1xA1",
       {3, 0},
       {{{3, 0}, 1}, {{0, 3}, 1}, {{1, 0}, -3}, {{0, 1}, -3}},
       {{{3, 0}, 1}, {{0, 3}, 1}},
       false},
      // corrected: the T~5 coefficient is +2 and the linear term is Y
      {"C2:A1",
       {1, 1},
       {{{7}, 1}, {{5}, -5}, {{3}, 4}, {{1}, 4}},
       {{{7}, 1}, {{5}, 2}, {{1}, 1}},
       true},
      {"C2:A1",
       {2, 0},
       {{{6}, 1}, {{4}, -6}, {{2}, 10}, {{0}, -4}},
       {{{6}, 1}, {{2}, 1}},
       false},
      {"G2:A2",
       {0, 2},
       {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, -2}, {{0, 1}, -2}},
       {{{2, 0}, 1}, {{0, 2}, 1}},
       false},
      {"G2:A2",
       {1, 1},
       {{{2, 1}, 1}, {{1, 2}, 1}, {{2, 0}, -2}, {{0, 2}, -2}, {{1, 0}, -1}, {{0, 1}, -1}},
       {{{2, 1}, 1}, {{1, 2}, 1}},
       false},
      // corrected: no constant term in the decomposition
      {"G2:A1xA1",
       {0, 2},
       {{{0, 4}, 1}, {{2, 2}, 1}, {{0, 2}, -6}, {{2, 0}, -2}, {{0, 0}, 6}},
       {{{2, 2}, 1}, {{0, 4}, 1}},
       true},
      // corrected: the image has 2 Y1^2 and every decomposition sign is +
      {"G2:A1xA1",
       {1, 1},
       {{{1, 5}, 1}, {{2, 4}, 1}, {{0, 4}, -2}, {{1, 3}, -5}, {{2, 2}, -4},
        {{0, 2}, 8}, {{3, 1}, 1}, {{1, 1}, 2}, {{2, 0}, 2}, {{0, 0}, -4}},
       {{{3, 1}, 1}, {{2, 4}, 1}, {{1, 5}, 1}},
       true},
      // corrected: follows the corrected X1; the decomposition collapses to
      // T~12 + T~8 + T~4
      {"G2:A1",
       {0, 2},
       {{{12}, 1}, {{10}, -12}, {{8}, 55}, {{6}, -120}, {{4}, 126}, {{2}, -56}, {{0}, 6}},
       {{{12}, 1}, {{8}, 1}, {{4}, 1}},
       true},
      {"A3:C2",
       {1, 0, 1},
       {{{2, 0}, 1}, {{0, 0}, -4}},
       {{{2, 0}, 1}, {{0, 1}, 2}},
       false},
      {"A3:C2",
       {0, 1, 1},
       {{{1, 1}, 1}, {{1, 0}, -1}},
       {{{1, 1}, 1}, {{1, 0}, 1}},
       false},
      {"A3:A1xA1",
       {1, 0, 1},
       {{{2, 2}, 1}, {{0, 0}, -4}},
       {{{2, 2}, 1}, {{2, 0}, 2}, {{0, 2}, 2}},
       false},
      // corrected: uses the corrected X2, hence the extra Y1 Y2 term
      {"A3:A1xA1",
       {0, 1, 1},
       {{{3, 1}, 1}, {{1, 3}, 1}, {{1, 1}, -5}},
       {{{3, 1}, 1}, {{1, 3}, 1}, {{1, 1}, 1}},
       true},
      // corrected: whole B3:A3 block recomputed from the corrected matrix
      {"B3:A3",
       {1, 0, 1},
       {{{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 0}, -3}, {{0, 0, 1}, -3}},
       {{{1, 1, 0}, 1}, {{0, 1, 1}, 1}},
       true},
      {"B3:A3",
       {2, 0, 0},
       {{{0, 2, 0}, 1}, {{1, 0, 1}, -2}, {{0, 0, 0}, 2}},
       {{{0, 2, 0}, 1}},
       true},
      {"B3:A1xA1xA1",
       {1, 0, 1},
       {{{2, 1, 1}, 1}, {{1, 2, 1}, 1}, {{1, 0, 3}, 1}, {{0, 1, 3}, 1},
        {{1, 0, 1}, -5}, {{0, 1, 1}, -5}},
       {{{2, 1, 1}, 1}, {{1, 2, 1}, 1}, {{1, 0, 3}, 1}, {{0, 1, 3}, 1}},
       false},
      {"B3:A1xA1xA1",
       {0, 1, 1},
       {{{2, 1, 3}, 1}, {{1, 2, 3}, 1}, {{2, 1, 1}, -3}, {{1, 2, 1}, -3},
        {{3, 0, 1}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, -2}, {{0, 1, 3}, -2},
        {{1, 0, 1}, 3}, {{0, 1, 1}, 3}},
       {{{2, 1, 3}, 1}, {{1, 2, 3}, 1}, {{3, 0, 1}, 1}, {{0, 3, 1}, 1}},
       false},
      {"B3:G2",
       {1, 0, 1},
       {{{0, 2}, 1}, {{0, 1}, -1}, {{0, 0}, -6}},
       {{{0, 2}, 1}, {{1, 0}, 2}, {{0, 1}, 1}},
       false},
      // published under the label (1,1,0); the polynomial printed there is
      // the (2,0,0) row of the coefficient table
      {"B3:G2",
       {2, 0, 0},
       {{{0, 2}, 1}, {{0, 1}, -2}, {{1, 0}, -2}, {{0, 0}, -6}},
       {{{0, 2}, 1}},
       true},
      {"C3:C2xA1",
       {1, 0, 1},
       {{{1, 1, 1}, 1}, {{0, 1, 2}, 1}, {{1, 0, 1}, -2}, {{0, 1, 0}, -2}},
       {{{1, 1, 1}, 1}, {{0, 1, 2}, 1}},
       false},
      {"C3:C2xA1",
       {2, 0, 0},
       {{{2, 0, 0}, 1}, {{0, 0, 2}, 1}, {{0, 1, 0}, -2}, {{0, 0, 0}, -6}},
       {{{2, 0, 0}, 1}, {{0, 0, 2}, 1}},
       false},
      {"C3:A2",
       {1, 0, 1},
       {{{3, 0}, 1}, {{0, 3}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{2, 0}, -2},
        {{0, 2}, -2}, {{1, 1}, -6}, {{0, 0}, 6}},
       {{{3, 0}, 1}, {{0, 3}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}},
       false},
      {"C3:A2",
       {2, 0, 0},
       {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, -2}, {{0, 1}, -2}},
       {{{2, 0}, 1}, {{0, 2}, 1}},
       false},
      // corrected: the closing terms are + T~3 + 2Y
      {"C3:A1",
       {1, 1, 0},
       {{{13}, 1}, {{11}, -11}, {{9}, 44}, {{7}, -74}, {{5}, 36}, {{3}, 22}, {{1}, -12}},
       {{{13}, 1}, {{11}, 2}, {{9}, 1}, {{7}, 3}, {{5}, 2}, {{3}, 1}, {{1}, 2}},
       true},
      // corrected: the constant term is 4
      {"C3:A1",
       {1, 0, 1},
       {{{14}, 1}, {{12}, -12}, {{10}, 55}, {{8}, -121}, {{6}, 134}, {{4}, -77}, {{2}, 26}},
       {{{14}, 1}, {{12}, 2}, {{10}, 2}, {{8}, 1}, {{6}, 2}, {{4}, 1}, {{2}, 1}, {{0}, 4}},
       true},
  };
  return rows;
}

// Alias pinning the corrected B3:A3 block: the published variable images.
// They fail the defining pointwise identity (evaluating them at the child's
// origin image gives 18/36/20 instead of the parent orbit sizes 6/12/8), so
// the suite asserts their rejection rather than their reproduction.
inline const std::vector<std::pair<int, Terms>>& b3_a3_published_substitutions() {
  static const std::vector<std::pair<int, Terms>> rows = {
      {0, {{{0, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 0, 0}, -4}}},
      {1,
       {{{1, 1, 1}, 1}, {{0, 1, 2}, 1}, {{2, 0, 0}, -3}, {{0, 0, 2}, -3},
        {{0, 2, 0}, -2}, {{1, 0, 1}, -1}, {{0, 1, 0}, 4}, {{0, 0, 0}, 4}}},
      {2, {{{0, 1, 1}, 1}, {{1, 0, 0}, -2}, {{0, 0, 1}, 1}}},
  };
  return rows;
}

} // namespace fixtures

#endif
