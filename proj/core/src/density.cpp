#include "monocomp/density.hpp"

#include <algorithm>
#include <string>

#include "monocomp/errors.hpp"

namespace monocomp {

namespace {

// Enumerates every connected vertex set S (with its anchor min(S)) exactly
// once, by frontier extension: candidates are neighbors of S larger than the
// anchor, and after a candidate's branch is exhausted it is excluded from
// the remaining branches at that level.
struct Enumerator {
  int smax;
  std::int64_t budget;
  std::vector<std::vector<int>> nbr;                    // deduped, no self
  std::vector<std::vector<std::pair<int, int>>> madj;   // (neighbor, multiplicity)
  std::vector<std::int64_t> loops;
  std::vector<char> in_set, seen;
  std::vector<std::vector<int>> ext_pool;
  std::vector<int> cur;
  std::int64_t cur_e = 0;

  std::int64_t count = 0;
  std::int64_t best_e = -1;
  int best_s = 1;
  std::vector<int> best_set;

  Enumerator(const MultiGraph& g, int smax_, std::int64_t budget_)
      : smax(smax_), budget(budget_) {
    nbr.resize(g.n);
    madj.resize(g.n);
    loops.assign(g.n, 0);
    std::vector<std::vector<int>> raw(g.n);
    for (const Edge& e : g.edges) {
      if (e.u == e.v) {
        ++loops[e.u];
      } else {
        raw[e.u].push_back(e.v);
        raw[e.v].push_back(e.u);
      }
    }
    for (int v = 0; v < g.n; ++v) {
      auto& lst = raw[v];
      std::sort(lst.begin(), lst.end());
      for (std::size_t i = 0; i < lst.size();) {
        std::size_t j = i;
        while (j < lst.size() && lst[j] == lst[i]) ++j;
        nbr[v].push_back(lst[i]);
        madj[v].emplace_back(lst[i], static_cast<int>(j - i));
        i = j;
      }
    }
    in_set.assign(g.n, 0);
    seen.assign(g.n, 0);
    ext_pool.resize(smax + 1);
  }

  void emit() {
    if (++count > budget)
      throw contract_violation("local density audit: more than " + std::to_string(budget) +
                               " connected sets up to size " + std::to_string(smax) +
                               "; raise the budget or lower smax");
    const auto s = static_cast<std::int64_t>(cur.size());
    if (best_e < 0 || cur_e * best_s > best_e * s) {
      best_e = cur_e;
      best_s = static_cast<int>(s);
      best_set = cur;
    }
  }

  std::int64_t added_edges(int w) const {
    std::int64_t d = loops[w];
    for (const auto& [u, mult] : madj[w]) {
      if (in_set[u]) d += mult;
    }
    return d;
  }

  void extend(int anchor, int depth) {
    emit();
    if (static_cast<int>(cur.size()) >= smax) return;
    const auto& ext = ext_pool[depth];
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const int w = ext[i];
      auto& next = ext_pool[depth + 1];
      next.assign(ext.begin() + i + 1, ext.end());
      std::vector<int> newly;
      for (int u : nbr[w]) {
        if (u > anchor && !seen[u]) {
          seen[u] = 1;
          newly.push_back(u);
          next.push_back(u);
        }
      }
      cur_e += added_edges(w);
      in_set[w] = 1;
      cur.push_back(w);
      extend(anchor, depth + 1);
      cur.pop_back();
      in_set[w] = 0;
      cur_e -= added_edges(w);
      for (int u : newly) seen[u] = 0;
    }
  }

  void run(int n) {
    for (int a = 0; a < n; ++a) {
      cur.assign(1, a);
      in_set[a] = 1;
      seen[a] = 1;
      cur_e = loops[a];
      auto& ext = ext_pool[0];
      ext.clear();
      for (int u : nbr[a]) {
        if (u > a && !seen[u]) {
          seen[u] = 1;
          ext.push_back(u);
        }
      }
      extend(a, 0);
      for (int u : ext) seen[u] = 0;
      seen[a] = 0;
      in_set[a] = 0;
    }
  }
};

}  // namespace

DensityAudit local_density_audit(const MultiGraph& g, double c, int smax,
                                 std::int64_t budget) {
  if (!(c > 0.0)) throw config_error("density audit needs c > 0");
  if (smax < 1) throw config_error("density audit needs smax >= 1");
  if (budget < 1) throw config_error("density audit needs a positive budget");

  DensityAudit audit;
  audit.c = c;
  audit.smax = smax;
  if (g.n == 0) return audit;

  Enumerator en(g, std::min(smax, g.n), budget);
  en.run(g.n);

  audit.sets_enumerated = en.count;
  audit.worst_ratio = static_cast<double>(en.best_e) / en.best_s;
  audit.witness = en.best_set;
  std::sort(audit.witness.begin(), audit.witness.end());
  audit.violation = static_cast<double>(en.best_e) > c * en.best_s + 1e-12;
  return audit;
}

}  // namespace monocomp
