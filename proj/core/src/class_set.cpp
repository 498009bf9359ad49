#include "quatgraphs/class_set.hpp"

#include "quatgraphs/isometry.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace quatgraphs {

Rat mass(int g, long long p) {
  QG_REQUIRE(g >= 1, "dimension must be positive");
  QG_REQUIRE(is_prime(p), "p must be prime");
  int exp = (g * (g + 1) / 2) % 2;
  Rat out = exp ? Rat(-1) : Rat(1);
  out /= Rat(Int(1) << g);
  for (int k = 1; k <= g; ++k) {
    // zeta(1 - 2k) = -B_{2k} / (2k)
    out *= -bernoulli(2 * k) / Rat(2 * k);
  }
  Int pk = 1;
  for (int k = 1; k <= g; ++k) {
    pk *= p;
    out *= Rat(pk + ((k % 2) ? -1 : 1));
  }
  return out;
}

namespace {

std::vector<long long> ideal_theta(const IdealLattice& I, int upto) {
  return theta_prefix(norm_form(I), upto);
}

std::vector<long long> form_theta(const HermitianForm& H, int upto) {
  return theta_prefix(trace_gram(H), upto);
}

constexpr int kSortThetaDepth = 8;

void canonical_sort(ClassSet& cs) {
  const int h = cs.h();
  std::vector<std::pair<std::vector<long long>, std::string>> keys(h);
  for (int i = 0; i < h; ++i) {
    if (cs.g == 1) {
      keys[i] = {ideal_theta(cs.ideal_reps[i], kSortThetaDepth),
                 gram_bytes(norm_form(cs.ideal_reps[i]))};
    } else {
      keys[i] = {form_theta(cs.form_reps[i], kSortThetaDepth),
                 gram_bytes(trace_gram(cs.form_reps[i]))};
    }
  }
  std::vector<int> perm(h);
  for (int i = 0; i < h; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  ClassSet sorted = cs;
  sorted.ideal_reps.clear();
  sorted.left_orders.clear();
  sorted.form_reps.clear();
  sorted.aut_counts.clear();
  for (int i : perm) {
    if (cs.g == 1) {
      sorted.ideal_reps.push_back(cs.ideal_reps[i]);
      sorted.left_orders.push_back(cs.left_orders[i]);
    } else {
      sorted.form_reps.push_back(cs.form_reps[i]);
    }
    sorted.aut_counts.push_back(cs.aut_counts[i]);
  }
  cs = std::move(sorted);
}

}  // namespace

std::vector<long long> rep_theta(const ClassSet& cs, int index, int upto) {
  if (cs.g == 1) return ideal_theta(cs.ideal_reps[index], upto);
  return form_theta(cs.form_reps[index], upto);
}

ClassSet right_ideal_classes(std::shared_ptr<const MaximalOrder> order) {
  const MaximalOrder& O = *order;
  ClassSet cs;
  cs.g = 1;
  cs.p = O.alg.p;
  cs.order = order;
  cs.mass_value = mass(1, cs.p);

  long long q = 2;
  while (q == O.alg.p) q = (q == 2) ? 3 : q + 2;

  Rat accumulated = 0;
  auto admit = [&](const IdealLattice& I) {
    cs.ideal_reps.push_back(I);
    auto lo = left_order(I);
    long long e = (long long)order_units(*lo).size();
    cs.left_orders.push_back(std::move(lo));
    cs.aut_counts.push_back(e);
    accumulated += Rat(1, e);
    QG_CHECK(accumulated <= cs.mass_value,
             "mass exceeded: equivalence test admitted a duplicate class");
  };

  admit(unit_ideal(O));
  std::deque<int> frontier = {0};
  while (accumulated != cs.mass_value) {
    QG_CHECK(!frontier.empty(),
             "neighbor expansion exhausted before meeting the mass");
    int i = frontier.front();
    frontier.pop_front();
    IdealLattice base = cs.ideal_reps[i];
    for (IdealLattice& nb : ideal_neighbors(base, q)) {
      bool known = false;
      for (const IdealLattice& rep : cs.ideal_reps)
        if (ideal_equivalent(nb, rep)) {
          known = true;
          break;
        }
      if (known) continue;
      admit(nb);
      frontier.push_back((int)cs.ideal_reps.size() - 1);
      if (accumulated == cs.mass_value) break;
    }
  }
  canonical_sort(cs);
  return cs;
}

namespace {

// Lexicographically minimal byte key of u * x * v over the given unit lists.
OrderElem two_sided_unit_min(const MaximalOrder& O, const OrderElem& x,
                             const std::vector<OrderElem>& units) {
  OrderElem best = x;
  auto better = [](const OrderElem& a, const OrderElem& b) {
    for (int m = 0; m < 4; ++m)
      if (a[m] != b[m]) return a[m] < b[m];
    return false;
  };
  for (const OrderElem& u : units)
    for (const OrderElem& v : units) {
      OrderElem c = oe_mul(O, oe_mul(O, u, x), v);
      if (better(c, best)) best = c;
    }
  return best;
}

std::vector<OrderElem> unit_coords(const MaximalOrder& O) {
  QuadraticLattice L;
  L.dim = 4;
  L.gram.assign(4, IntVec(4));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) L.gram[m][n] = O.trace_gram[m][n];
  std::vector<OrderElem> out;
  for (auto& v : short_vectors(L, Rat(1))) out.push_back({v[0], v[1], v[2], v[3]});
  return out;
}

struct FormCollector {
  std::shared_ptr<const MaximalOrder> order;
  int g;
  Rat target_mass;
  Rat accumulated = 0;
  std::set<std::string> seen;  // gram keys of all candidates processed
  std::vector<HermitianForm> reps;
  std::vector<long long> aut_counts;
  // One engine per accepted class; probing candidates against a fixed source
  // reuses its short-vector lists (n = 1 solutions are unimodular, so
  // rep -> candidate solvability equals candidate -> rep solvability).
  std::vector<std::unique_ptr<IsometryEngine>> engines;

  bool done() const { return accumulated == target_mass; }

  void process(const HermitianForm& H) {
    QuadraticLattice L = trace_gram(H);
    std::string key = gram_bytes(L);
    if (!seen.insert(key).second) return;
    for (auto& engine : engines)
      if (engine->exists(H, 1)) return;  // known class
    QG_CHECK(haupt_norm(H) == 1, "generated candidate does not have haupt norm 1");
    QG_CHECK(is_positive_definite(H), "generated candidate is not positive definite");
    reps.push_back(H);
    engines.push_back(std::make_unique<IsometryEngine>(reps.back()));
    long long e = engines.back()->count(reps.back(), 1);
    aut_counts.push_back(e);
    accumulated += Rat(1, e);
    QG_CHECK(accumulated <= target_mass,
             "mass exceeded: isometry test admitted a duplicate class");
  }
};

}  // namespace

ClassSet hermitian_class_reps(int g, std::shared_ptr<const MaximalOrder> order,
                              int max_bound) {
  QG_REQUIRE(g == 2 || g == 3, "hermitian class enumeration supports g in {2, 3}");
  const MaximalOrder& O = *order;

  FormCollector fc;
  fc.order = order;
  fc.g = g;
  fc.target_mass = mass(g, O.alg.p);

  std::vector<OrderElem> units = unit_coords(O);

  QuadraticLattice nrd_form;
  nrd_form.dim = 4;
  nrd_form.gram.assign(4, IntVec(4));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) nrd_form.gram[m][n] = O.trace_gram[m][n];

  // Canonicalized entries b with nrd(b) = t, cached per t.
  std::map<long long, std::vector<OrderElem>> entry_cache;
  auto entries_of_norm = [&](long long t) -> const std::vector<OrderElem>& {
    auto it = entry_cache.find(t);
    if (it != entry_cache.end()) return it->second;
    std::vector<OrderElem> out;
    if (t == 0) {
      out.push_back(OrderElem{0, 0, 0, 0});
    } else {
      std::set<std::string> canon;
      for (auto& v : short_vectors(nrd_form, Rat(t))) {
        OrderElem b = {v[0], v[1], v[2], v[3]};
        OrderElem m = two_sided_unit_min(O, b, units);
        std::string k(reinterpret_cast<const char*>(m.data()), sizeof m);
        if (canon.insert(k).second) out.push_back(m);
      }
    }
    return entry_cache.emplace(t, std::move(out)).first->second;
  };

  auto scalar = [&](long long t) { return oe_scale(t, O.one_coords); };

  // Candidates in order of increasing diagonal trace, so small classes are
  // found first and the mass certificate stops the scan as early as possible.
  if (g == 2) {
    for (long long trace = 2; trace <= 2 * max_bound && !fc.done(); ++trace)
      for (long long a = 1; 2 * a <= trace && !fc.done(); ++a) {
        long long c = trace - a;
        for (const OrderElem& b : entries_of_norm(a * c - 1)) {
          OrderMat m;
          m.order = &O;
          m.g = 2;
          m.entries = {scalar(a), b, oe_conj(O, b), scalar(c)};
          fc.process(make_hermitian(std::move(m)));
          if (fc.done()) break;
        }
      }
  } else {
    using Col = std::array<OrderElem, 2>;
    auto col_bytes = [](const Col& c) {
      return std::string(reinterpret_cast<const char*>(c.data()), sizeof c);
    };
    for (long long trace = 3; trace <= 3 * max_bound && !fc.done(); ++trace)
      for (long long a = 1; 3 * a <= trace && !fc.done(); ++a)
        for (long long c22 = a; 2 * c22 <= trace - a && !fc.done(); ++c22) {
          long long c33 = trace - a - c22;
          for (long long d2 = 1; d2 <= a * c22 && !fc.done(); ++d2)
            for (const OrderElem& b12 : entries_of_norm(a * c22 - d2)) {
              if (fc.done()) break;
              // Bordering: the adjugate of the leading 2x2 block is the
              // quadratic form whose value on the border column forces
              // haupt norm 1.
              OrderMat adj;
              adj.order = &O;
              adj.g = 2;
              adj.entries = {scalar(c22), oe_neg(b12), oe_neg(oe_conj(O, b12)),
                             scalar(a)};
              QuadraticLattice col_form = trace_gram(make_hermitian(adj));
              long long tcol = c33 * d2 - 1;
              std::vector<Col> cols;
              if (tcol == 0) {
                cols.push_back({OrderElem{0, 0, 0, 0}, OrderElem{0, 0, 0, 0}});
              } else {
                std::set<std::string> canon;
                for (auto& v : short_vectors(col_form, Rat(tcol))) {
                  Col col = {OrderElem{v[0], v[1], v[2], v[3]},
                             OrderElem{v[4], v[5], v[6], v[7]}};
                  // Canonicalize under right multiplication by units.
                  Col best = col;
                  for (const OrderElem& u : units) {
                    Col alt = {oe_mul(O, col[0], u), oe_mul(O, col[1], u)};
                    if (col_bytes(alt) < col_bytes(best)) best = alt;
                  }
                  if (canon.insert(col_bytes(best)).second) cols.push_back(best);
                }
              }
              for (const Col& col : cols) {
                OrderMat m;
                m.order = &O;
                m.g = 3;
                m.entries = {scalar(a),           b12,
                             col[0],              oe_conj(O, b12),
                             scalar(c22),         col[1],
                             oe_conj(O, col[0]),  oe_conj(O, col[1]),
                             scalar(c33)};
                fc.process(make_hermitian(std::move(m)));
                if (fc.done()) break;
              }
            }
        }
  }
  if (!fc.done())
    throw enumeration_ceiling_error(
        "class enumeration bound exhausted before meeting the mass");

  ClassSet cs;
  cs.g = g;
  cs.p = O.alg.p;
  cs.order = order;
  cs.form_reps = std::move(fc.reps);
  cs.aut_counts = std::move(fc.aut_counts);
  cs.mass_value = fc.target_mass;
  canonical_sort(cs);

  bool has_identity = false;
  for (const HermitianForm& H : cs.form_reps)
    if (H.mat == om_identity(O, g)) has_identity = true;
  QG_CHECK(has_identity, "identity form missing from class set");
  return cs;
}

ClassSet compute_class_set(int g, long long p) {
  auto O = std::make_shared<const MaximalOrder>(maximal_order(algebra_for_prime(p)));
  if (g == 1) return right_ideal_classes(std::move(O));
  return hermitian_class_reps(g, std::move(O));
}

namespace {

using nlohmann::json;

json rat_to_json(const Rat& r) { return num(r).str() + "/" + den(r).str(); }

Rat rat_from_json(const json& j) {
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  QG_REQUIRE(slash != std::string::npos, "malformed rational");
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

std::string class_set_to_json(const ClassSet& cs) {
  json j;
  j["format_version"] = 1;
  j["kind"] = "classset";
  j["g"] = cs.g;
  j["p"] = cs.p;
  j["h"] = cs.h();
  j["mass"] = rat_to_json(cs.mass_value);
  j["algebra"] = {{"p", cs.order->alg.p}, {"a", cs.order->alg.a}, {"b", cs.order->alg.b}};
  j["aut_counts"] = cs.aut_counts;
  json reps = json::array();
  if (cs.g == 1) {
    for (const IdealLattice& I : cs.ideal_reps) {
      json r;
      json basis = json::array();
      for (int col = 0; col < 4; ++col) {
        json v = json::array();
        for (int row = 0; row < 4; ++row) v.push_back(I.coords[row][col].str());
        basis.push_back(v);
      }
      r["basis"] = basis;
      r["den"] = I.den.str();
      r["norm"] = rat_to_json(I.norm);
      reps.push_back(r);
    }
  } else {
    for (const HermitianForm& H : cs.form_reps) {
      json r;
      json entries = json::array();
      for (const OrderElem& e : H.mat.entries)
        entries.push_back(std::vector<long long>(e.begin(), e.end()));
      r["entries"] = entries;
      reps.push_back(r);
    }
  }
  j["reps"] = reps;
  return j.dump(2) + "\n";
}

ClassSet class_set_from_json(const std::string& text) {
  json j = json::parse(text);
  QG_REQUIRE(j.at("format_version").get<int>() == 1, "unknown format version");
  QG_REQUIRE(j.at("kind").get<std::string>() == "classset", "not a class set");
  ClassSet cs;
  cs.g = j.at("g").get<int>();
  cs.p = j.at("p").get<long long>();
  cs.order = std::make_shared<const MaximalOrder>(
      maximal_order(algebra_for_prime(cs.p)));
  QG_REQUIRE(cs.order->alg.a == j.at("algebra").at("a").get<long long>() &&
                 cs.order->alg.b == j.at("algebra").at("b").get<long long>(),
             "algebra mismatch");
  cs.mass_value = rat_from_json(j.at("mass"));
  QG_REQUIRE(cs.mass_value == mass(cs.g, cs.p), "stored mass mismatch");
  cs.aut_counts = j.at("aut_counts").get<std::vector<long long>>();
  if (cs.g == 1) {
    for (const auto& r : j.at("reps")) {
      IntMat gens(4, IntVec(4));
      for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row)
          gens[row][col] = Int(r.at("basis")[col][row].get<std::string>());
      IdealLattice I = make_ideal(*cs.order, gens, Int(r.at("den").get<std::string>()));
      QG_REQUIRE(I.norm == rat_from_json(r.at("norm")), "stored ideal norm mismatch");
      cs.ideal_reps.push_back(std::move(I));
      cs.left_orders.push_back(left_order(cs.ideal_reps.back()));
    }
  } else {
    for (const auto& r : j.at("reps")) {
      OrderMat m;
      m.order = cs.order.get();
      m.g = cs.g;
      for (const auto& e : r.at("entries")) {
        auto v = e.get<std::vector<long long>>();
        QG_REQUIRE(v.size() == 4, "malformed entry");
        m.entries.push_back(OrderElem{v[0], v[1], v[2], v[3]});
      }
      QG_REQUIRE((int)m.entries.size() == cs.g * cs.g, "malformed rep");
      cs.form_reps.push_back(make_hermitian(std::move(m)));
    }
  }
  QG_REQUIRE((int)cs.aut_counts.size() == j.at("h").get<int>(), "h mismatch");
  // Mass certificate must hold for the loaded data.
  Rat acc = 0;
  for (long long e : cs.aut_counts) acc += Rat(1, e);
  QG_REQUIRE(acc == cs.mass_value, "loaded class set fails the mass certificate");
  return cs;
}

std::string class_set_hash(const ClassSet& cs) {
  std::string s = class_set_to_json(cs);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace quatgraphs
