#ifndef SCALFORM_GUESSER_HPP
#define SCALFORM_GUESSER_HPP

#include <vector>
#include <optional>
#include <string>
#include "scalform/fpseries.hpp"
#include "scalform/threadpool.hpp"
#include "json.hpp"

namespace scalform {

// Modular guessing: reduce a parametric series mod p, search for an
// annihilating ODE in the homogeneous derivative x D_x under an order/degree
// budget, and scan the parameter over the whole prime field.

struct GuessBudget {
  int qmax = 6;       // maximal ODE order
  int product = 220;  // (Q+1)(D+1) bound
  uint64_t prime = 32749;
  int terms = 0;      // series length (x-orders); default 2*product
  int length() const { return terms ? terms : 2 * product; }
};

struct GuessHit {
  uint64_t residue = 0;
  bool reconstructed = false;
  Rat value;          // small rational lift when found
  int order = 0;      // Q of the smallest cell with a nullspace
  int degree = 0;     // D of that cell
  int nullity = 0;
  bool degenerate = false; // constant/zero series
};

// Series values f_k (coefficients of x^k) of the even family at a residue.
inline std::vector<Fp> project_series_even_family(Fp a2, int xorders)
{
  EvenFamilyFp fam(xorders + 16);
  auto evens = fam.generate(a2, xorders / 2 + 1);
  std::vector<Fp> f(xorders, Fp{0});
  for (int j = 0; 2 * j < xorders; ++j) f[2 * j] = evens[j];
  return f;
}

namespace detail {

// Incremental column-rank tracker over Fp with on-the-fly elimination.
struct RankTracker {
  int rows;
  std::vector<std::vector<Fp>> echelon; // reduced rows
  std::vector<int> pivots;

  explicit RankTracker(int rows_) : rows(rows_) {}

  // returns true when the column is independent; false = nullspace found
  // (combo receives the dependency coefficients over previous columns)
  bool add_column(std::vector<Fp> col, std::vector<Fp>* combo_out,
                  std::vector<std::vector<Fp>>* basis_cols)
  {
    std::vector<Fp> combo(basis_cols ? basis_cols->size() + 1 : 0, Fp{0});
    if (!combo.empty()) combo.back() = Fp{1};
    for (size_t e = 0; e < echelon.size(); ++e) {
      Fp f = col[pivots[e]];
      if (f.is_zero()) continue;
      for (int r = 0; r < rows; ++r) col[r] -= f * echelon[e][r];
      if (basis_cols && combo_out) {
        auto& bc = (*basis_cols)[e];
        for (size_t i = 0; i < bc.size(); ++i) combo[i] -= f * bc[i];
      }
    }
    int pr = -1;
    for (int r = 0; r < rows; ++r)
      if (!col[r].is_zero()) { pr = r; break; }
    if (pr < 0) {
      if (combo_out) *combo_out = combo;
      return false;
    }
    Fp inv = col[pr].inv();
    for (int r = 0; r < rows; ++r) col[r] = col[r] * inv;
    if (basis_cols) {
      for (auto& c : combo) c = c * inv;
      basis_cols->push_back(combo);
    }
    echelon.push_back(std::move(col));
    pivots.push_back(pr);
    return true;
  }
};

} // namespace detail

// Search the smallest (Q, D), lexicographic in Q then D, whose homogeneous
// derivative ansatz annihilates the series through all supplied terms.
inline std::optional<GuessHit> search_ode(const std::vector<Fp>& f, const GuessBudget& budget)
{
  int n = (int)f.size();
  if (n < 2 * budget.product)
    throw std::invalid_argument("series too short for the guessing budget");
  bool constant = true, even = true;
  for (int k = 1; k < n; ++k) {
    if (!f[k].is_zero()) {
      constant = false;
      if (k % 2) even = false;
    }
  }
  if (constant) {
    GuessHit hit;
    hit.order = 1;
    hit.degree = 0;
    hit.degenerate = true;
    return hit;
  }
  // an even series has an even-degree minimal homogeneous-derivative ansatz,
  // and only the even coefficient rows carry information
  int dstep = even ? 2 : 1;
  int qmax = budget.qmax;
  std::vector<std::vector<Fp>> tp(qmax + 1, std::vector<Fp>(n));
  tp[0] = f;
  for (int q = 1; q <= qmax; ++q)
    for (int k = 0; k < n; ++k) tp[q][k] = tp[q - 1][k] * Fp::from_int(k);
  for (int Q = 1; Q <= qmax; ++Q) {
    int dmax = budget.product / (Q + 1) - 1;
    if (dmax < 0) continue;
    int ncols = (Q + 1) * (dmax / dstep + 1);
    std::vector<int> rows_idx;
    for (int r = 0; r < n && (int)rows_idx.size() < ncols + 24; r += dstep) rows_idx.push_back(r);
    int rows = (int)rows_idx.size();
    detail::RankTracker rank(rows);
    std::vector<std::vector<Fp>> basis_cols;
    std::vector<std::pair<int, int>> cells;
    auto column = [&](int q, int d) {
      std::vector<Fp> col(rows, Fp{0});
      for (int i = 0; i < rows; ++i)
        if (rows_idx[i] >= d) col[i] = tp[q][rows_idx[i] - d];
      return col;
    };
    auto verify = [&](const std::vector<Fp>& combo) {
      std::vector<Fp> acc(n, Fp{0});
      for (size_t c = 0; c < cells.size() && c < combo.size(); ++c) {
        if (combo[c].is_zero()) continue;
        auto [q, d] = cells[c];
        for (int r = d; r < n; ++r) acc[r] += combo[c] * tp[q][r - d];
      }
      for (int r = 0; r < n; ++r)
        if (!acc[r].is_zero()) return false;
      return true;
    };
    for (int D = 0; D <= dmax; D += dstep) {
      bool found = false;
      std::vector<Fp> combo;
      for (int q = 0; q <= Q && !found; ++q) {
        cells.push_back({q, D});
        if (!rank.add_column(column(q, D), &combo, &basis_cols)) {
          if (verify(combo)) {
            found = true;
          } else {
            cells.pop_back(); // dependent on the sampled rows only; skip
          }
        }
      }
      if (found) {
        GuessHit hit;
        hit.order = Q;
        hit.degree = D;
        hit.nullity = 1;
        return hit;
      }
    }
  }
  return std::nullopt;
}

// Scan a2 over [1, p-1]; returns all hits in residue order, with rational
// reconstructions attempted. Residues are processed in parallel and merged
// deterministically.
inline std::vector<GuessHit> scan_parameter(const GuessBudget& budget,
                                            bool include_zero = false)
{
  Fp::set_modulus(budget.prime);
  uint64_t p = budget.prime;
  int terms = budget.length();
  uint64_t lo = include_zero ? 0 : 1;
  uint64_t count = p - lo;
  int chunks = 256;
  auto merged = parallel_chunks<std::vector<GuessHit>>(
      chunks,
      [&](int c) {
        std::vector<GuessHit> local;
        for (uint64_t a = lo + c; a < p; a += chunks) {
          std::vector<Fp> f;
          try {
            f = project_series_even_family(Fp{a}, terms);
          } catch (const std::exception&) {
            continue; // bad prime for this residue
          }
          auto hit = search_ode(f, budget);
          if (hit) {
            hit->residue = a;
            Int num, den;
            if (rational_reconstruct(a, p, num, den)) {
              hit->reconstructed = true;
              hit->value = rat(num, den);
            }
            local.push_back(*hit);
          }
        }
        return local;
      },
      [](std::vector<GuessHit> acc, std::vector<GuessHit> more) {
        for (auto& h : more) acc.push_back(h);
        return acc;
      },
      std::vector<GuessHit>{});
  std::sort(merged.begin(), merged.end(),
            [](const GuessHit& a, const GuessHit& b) { return a.residue < b.residue; });
  (void)count;
  return merged;
}

inline nlohmann::json to_json(const std::vector<GuessHit>& hits)
{
  nlohmann::json arr = nlohmann::json::array();
  for (auto& h : hits) {
    nlohmann::json j;
    j["residue"] = h.residue;
    j["order"] = h.order;
    j["degree"] = h.degree;
    j["degenerate"] = h.degenerate;
    if (h.reconstructed) j["value"] = to_string(h.value);
    arr.push_back(j);
  }
  return arr;
}

} // namespace scalform

#endif
