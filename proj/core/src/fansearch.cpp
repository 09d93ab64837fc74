#include "hypfan/fansearch.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hypfan/error.hpp"
#include "hypfan/sphere2.hpp"

namespace hypfan {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Infeasible: return "Infeasible";
    case SearchStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

// Point on the boundary of [-1,1]^2 at perimeter parameter t in [0,8),
// starting from (1,0) counter-clockwise. P(t + 4) = -P(t).
Vec square_point(const Rational& t) {
  if (t < 1) return {Rational(1), t};
  if (t < 3) return {Rational(2) - t, Rational(1)};
  if (t < 5) return {Rational(-1), Rational(4) - t};
  if (t < 7) return {t - Rational(6), Rational(-1)};
  return {Rational(1), t - Rational(8)};
}

Vec primitive(const Vec& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    ints.push_back(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Vec out;
  for (const auto& n : ints) out.emplace_back(g == 0 ? n : mpz_class(n / g));
  return out;
}

bool cyclically_monotone(const std::vector<int>& p) {
  const std::size_t m = p.size();
  if (m <= 2) return true;
  int desc = 0, asc = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (p[(j + 1) % m] < p[j])
      ++desc;
    else
      ++asc;
  }
  return desc == 1 || asc == 1;
}

struct Constraint {
  int from, to;
  Rational w;  // x_to - x_from <= w
};

// Bellman-Ford from a virtual source; nullopt on a negative cycle.
std::optional<std::vector<Rational>> solve_difference(int n, const std::vector<Constraint>& cs) {
  std::vector<Rational> dist(n, Rational(0));
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& c : cs) {
      Rational cand = dist[c.from] + c.w;
      if (cand < dist[c.to]) {
        dist[c.to] = cand;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  return std::nullopt;
}

}  // namespace

SearchResult search_fan(const SurfaceComplex& c, std::uint64_t budget) {
  SearchResult res;
  const int N = static_cast<int>(c.num_loops());
  std::vector<std::vector<Label>> faces;
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto& ls = c.faces()[f].labels;
    if (ls.size() < 3) {
      res.reason = "face " + std::to_string(f) + " has " + std::to_string(ls.size()) + " sides";
      return res;
    }
    std::set<Label> distinct(ls.begin(), ls.end());
    if (distinct.size() != ls.size()) {
      res.reason = "face " + std::to_string(f) + " meets a loop twice";
      return res;
    }
    faces.push_back(ls);
  }
  if (N < 3) {
    res.reason = "fewer than three loops";
    return res;
  }
  std::vector<std::vector<int>> faces_of(N);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (Label l : faces[f]) faces_of[l].push_back(static_cast<int>(f));

  const Rational delta(1, N + 1);
  std::vector<int> pos(N, -1);
  std::vector<Label> order;

  auto face_ok = [&](int f) {
    std::vector<int> p;
    for (Label l : faces[f])
      if (pos[l] >= 0) p.push_back(pos[l]);
    return cyclically_monotone(p);
  };

  auto realize = [&]() -> std::optional<Fan> {
    std::vector<Constraint> cs;
    for (int k = 0; k + 1 < N; ++k) cs.push_back({order[k + 1], order[k], -delta});
    cs.push_back({order[0], order[N - 1], Rational(2) - delta});
    for (const auto& face : faces) {
      std::vector<Label> seq = face;
      std::vector<int> p;
      for (Label l : seq) p.push_back(pos[l]);
      int desc = 0;
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p[(j + 1) % p.size()] < p[j]) ++desc;
      if (desc != 1) std::reverse(seq.begin(), seq.end());
      for (std::size_t j = 0; j < seq.size(); ++j) {
        Label a = seq[j], b = seq[(j + 1) % seq.size()];
        cs.push_back({a, b, (pos[b] > pos[a] ? Rational(1) : Rational(-1)) - delta});
      }
    }
    auto x = solve_difference(N, cs);
    if (!x) return std::nullopt;
    Fan fan(2);
    Rational base = (*x)[order[0]];
    for (Label l = 0; l < N; ++l) fan.set(l, primitive(square_point(Rational(4) * ((*x)[l] - base))));
    return fan;
  };

  bool out_of_budget = false;
  std::function<bool()> place = [&]() -> bool {
    if (static_cast<int>(order.size()) == N) {
      auto fan = realize();
      if (fan && fan_compatible(c, *fan).ok) {
        res.fan = std::move(fan);
        return true;
      }
      return false;
    }
    for (Label l = 1; l < N; ++l) {
      if (pos[l] >= 0) continue;
      if (l == 2 && pos[1] < 0) continue;
      if (++res.nodes > budget) {
        out_of_budget = true;
        return false;
      }
      pos[l] = static_cast<int>(order.size());
      order.push_back(l);
      bool ok = std::all_of(faces_of[l].begin(), faces_of[l].end(), face_ok);
      if (ok && place()) return true;
      order.pop_back();
      pos[l] = -1;
      if (out_of_budget) return false;
    }
    return false;
  };

  pos[0] = 0;
  order.push_back(0);
  if (place()) {
    res.status = SearchStatus::Found;
    res.order = order;
  } else if (out_of_budget) {
    res.status = SearchStatus::BudgetExhausted;
    res.reason = "node budget of " + std::to_string(budget) + " reached";
  } else {
    res.reason = "no circular order of the loop directions fits every face";
  }
  return res;
}

RealizabilityReport realizability_report(const SurfaceComplex& c, std::uint64_t budget) {
  RealizabilityReport rep;
  auto reject = [&](const std::string& what) {
    rep.verdict = "Rejected";
    rep.failed_condition = what;
    return rep;
  };
  if (c.euler_characteristic() == 2 && c.surface().orientable) {
    for (const auto& v : parity_theorem(c).verdicts) {
      rep.verdicts.push_back(v);
      if (!v.pass) return reject(v.name);
    }
    for (Label i = 0; i < static_cast<Label>(c.num_loops()); ++i)
      for (const auto& v : vertex_parities(c, i).verdicts) {
        rep.verdicts.push_back(v);
        if (!v.pass) return reject(v.name);
      }
    FaceColoring col;
    try {
      col = bicolor(c);
    } catch (const Error& e) {
      check(rep.verdicts, "bicolouring", false, e.what());
      return reject("bicolouring");
    }
    std::set<std::pair<Label, Label>> crossing;
    for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
      auto l = c.vertex_labels(v);
      if (l[0] != l[1]) crossing.insert({std::min(l[0], l[1]), std::max(l[0], l[1])});
    }
    for (auto [i, j] : crossing)
      for (const auto& e : eyes(c, i, j)) {
        if (!e.is_eye()) continue;
        for (const auto& v : eye_checks(c, e, col).verdicts) {
          rep.verdicts.push_back(v);
          if (!v.pass) return reject(v.name);
        }
      }
  }
  rep.search = search_fan(c, budget);
  switch (rep.search.status) {
    case SearchStatus::Found: rep.verdict = "Realizable"; break;
    case SearchStatus::Infeasible: rep.verdict = "Infeasible"; break;
    case SearchStatus::BudgetExhausted: rep.verdict = "BudgetExhausted"; break;
  }
  check(rep.verdicts, "fan search", rep.search.status == SearchStatus::Found,
        to_string(rep.search.status) + (rep.search.reason.empty() ? "" : ": " + rep.search.reason));
  return rep;
}

}  // namespace hypfan
