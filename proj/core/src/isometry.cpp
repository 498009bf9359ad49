#include "quatgraphs/isometry.hpp"

#include <algorithm>

namespace quatgraphs {

struct IsometryEngine::Search {
  const IsometryEngine* engine = nullptr;
  const HermitianForm* dst = nullptr;
  long long n = 0;
  int g = 0;
  std::vector<const std::vector<Candidate>*> per_column;
  std::vector<const Candidate*> chosen;
  std::vector<std::vector<OrderElem>> chosen_conj;
  std::vector<OrderMat>* out = nullptr;
  long long count = 0;
  bool stop_at_first = false;

  void run() {
    chosen.assign(g, nullptr);
    chosen_conj.assign(g, {});
    pick(0);
  }

  void pick(int k) {
    if (stop_at_first && count > 0) return;
    const MaximalOrder& O = engine->src_.order();
    for (const Candidate& cand : *per_column[k]) {
      if (stop_at_first && count > 0) return;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l) {
        // conj(m_l)^T (H m_k) must equal n * dst_{lk}.
        OrderElem want = oe_scale(n, dst->mat.at(l, k));
        OrderElem got = {0, 0, 0, 0};
        for (int s = 0; s < g; ++s) {
          if (oe_is_zero(chosen_conj[l][s]) || oe_is_zero(cand.hcol[s])) continue;
          got = oe_add(got, oe_mul(O, chosen_conj[l][s], cand.hcol[s]));
        }
        ok = (got == want);
      }
      if (!ok) continue;
      if (k + 1 == g) {
        ++count;
        if (out) {
          OrderMat m;
          m.order = &O;
          m.g = g;
          m.entries.assign((size_t)g * g, OrderElem{0, 0, 0, 0});
          for (int col = 0; col < k; ++col)
            for (int s = 0; s < g; ++s) m.at(s, col) = chosen[col]->col[s];
          for (int s = 0; s < g; ++s) m.at(s, k) = cand.col[s];
          out->push_back(std::move(m));
        }
      } else {
        chosen[k] = &cand;
        if (chosen_conj[k].empty()) chosen_conj[k].resize(g);
        for (int s = 0; s < g; ++s) chosen_conj[k][s] = oe_conj(O, cand.col[s]);
        pick(k + 1);
      }
    }
  }
};

IsometryEngine::IsometryEngine(const HermitianForm& src)
    : src_(src), gram_(trace_gram(src)) {}

const std::vector<IsometryEngine::Candidate>& IsometryEngine::candidates(
    long long target) {
  auto it = by_target_.find(target);
  if (it != by_target_.end()) return it->second;
  const int g = src_.g();
  std::vector<Candidate> cands;
  for (auto& coords : short_vectors(gram_, Rat(target))) {
    Candidate c;
    c.col.resize(g);
    for (int s = 0; s < g; ++s)
      for (int m = 0; m < 4; ++m) c.col[s][m] = coords[(size_t)4 * s + m];
    c.hcol = herm_apply(src_, c.col);
    cands.push_back(std::move(c));
  }
  return by_target_.emplace(target, std::move(cands)).first->second;
}

void IsometryEngine::solve(const HermitianForm& dst, long long n,
                           std::vector<OrderMat>* out, long long* count,
                           bool stop_at_first) {
  QG_REQUIRE(src_.g() == dst.g() && &src_.order() == &dst.order(),
             "isometry between incompatible forms");
  QG_REQUIRE(n >= 1, "isometry multiplier must be positive");
  const int g = src_.g();

  Search s;
  s.engine = this;
  s.dst = &dst;
  s.n = n;
  s.g = g;
  s.out = out;
  s.stop_at_first = stop_at_first;
  s.per_column.resize(g);
  for (int k = 0; k < g; ++k) {
    long long tval = 0;
    QG_CHECK(oe_scalar(src_.order(), dst.mat.at(k, k), &tval), "non-scalar diagonal");
    s.per_column[k] = &candidates(tval * n);
  }
  s.run();
  if (count) *count = s.count;
}

std::vector<OrderMat> IsometryEngine::solutions(const HermitianForm& dst,
                                                long long n) {
  std::vector<OrderMat> out;
  solve(dst, n, &out, nullptr, false);
  return out;
}

long long IsometryEngine::count(const HermitianForm& dst, long long n) {
  long long c = 0;
  solve(dst, n, nullptr, &c, false);
  return c;
}

bool IsometryEngine::exists(const HermitianForm& dst, long long n) {
  long long c = 0;
  solve(dst, n, nullptr, &c, true);
  return c > 0;
}

std::vector<OrderMat> isometry_solutions(const HermitianForm& src,
                                         const HermitianForm& dst,
                                         long long n) {
  return IsometryEngine(src).solutions(dst, n);
}

long long isometry_count(const HermitianForm& src, const HermitianForm& dst,
                         long long n) {
  return IsometryEngine(src).count(dst, n);
}

bool isometry_exists(const HermitianForm& src, const HermitianForm& dst,
                     long long n) {
  return IsometryEngine(src).exists(dst, n);
}

std::vector<OrderMat> automorphism_group(const HermitianForm& H) {
  return isometry_solutions(H, H, 1);
}

std::string order_mat_key(const OrderMat& m) {
  std::string s;
  s.reserve(m.entries.size() * 4 * 8);
  for (const OrderElem& e : m.entries)
    for (long long v : e) s.append(reinterpret_cast<const char*>(&v), sizeof v);
  return s;
}

}  // namespace quatgraphs
