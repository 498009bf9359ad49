#include "quatgraphs/brandt.hpp"

#include "quatgraphs/isometry.hpp"
#include "quatgraphs/parallel.hpp"

#include "json.hpp"

#include <numeric>

namespace quatgraphs {

Int BrandtMatrix::row_sum(int i) const {
  Int s = 0;
  for (const Int& v : entries[i]) s += v;
  return s;
}

Int regular_degree(int g, long long ell) {
  Int out = 1, pw = 1;
  for (int k = 1; k <= g; ++k) {
    pw *= ell;
    out *= pw + 1;
  }
  return out;
}

BrandtMatrix brandt(const ClassSet& classes, long long n) {
  QG_REQUIRE(n >= 1, "brandt matrix needs n >= 1");
  const int h = classes.h();
  BrandtMatrix B;
  B.g = classes.g;
  B.p = classes.p;
  B.n = n;
  B.h = h;
  B.weights = classes.aut_counts;
  B.entries.assign(h, IntVec(h, 0));

  std::vector<long long> raw((size_t)h * h, 0);
  if (classes.g == 1) {
    parallel_for(h * h, [&](int idx) {
      int i = idx / h, j = idx % h;
      // Count lambda in I_i conj(I_j) with nrd = n * norm(I_i) * norm(I_j).
      IdealLattice L = ideal_product(classes.ideal_reps[i],
                                     ideal_conjugate(classes.ideal_reps[j]));
      raw[idx] = (long long)short_vectors(norm_form(L), Rat(n)).size();
    });
  } else {
    parallel_for(h * h, [&](int idx) {
      int i = idx / h, j = idx % h;
      raw[idx] = isometry_count(classes.form_reps[i], classes.form_reps[j], n);
    });
  }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      long long cnt = raw[(size_t)i * h + j];
      long long e = classes.aut_counts[j];
      QG_CHECK(cnt % e == 0, "isometry count is not divisible by e_j");
      B.entries[i][j] = cnt / e;
    }
  return B;
}

RatMat brandt_zero(const ClassSet& classes) {
  const int h = classes.h();
  RatMat out(h, std::vector<Rat>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) out[i][j] = Rat(1, classes.aut_counts[j]);
  return out;
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string mat_str(const IntMat& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    s += i ? ";" : "";
    for (size_t j = 0; j < m[i].size(); ++j)
      s += (j ? "," : "") + m[i][j].str();
  }
  return s + "]";
}

}  // namespace

IdentityReport verify_identities(const ClassSet& classes, long long upto) {
  QG_REQUIRE(upto >= 2, "verification horizon must be >= 2");
  IdentityReport rep;
  const long long p = classes.p;
  const int g = classes.g;
  const int h = classes.h();

  std::vector<BrandtMatrix> B(upto + 1);
  for (long long n = 1; n <= upto; ++n) B[n] = brandt(classes, n);

  {
    IdentityCheck c;
    c.name = "B(1) = identity";
    c.pass = int_eq(B[1].entries, int_identity(h));
    if (!c.pass) c.detail = "B(1) = " + mat_str(B[1].entries);
    rep.checks.push_back(c);
  }

  for (long long n = 2; n <= upto; ++n) {
    if (std::gcd(n, p) != 1) continue;
    IdentityCheck c;
    c.name = "row sums constant, n=" + std::to_string(n);
    Int first = B[n].row_sum(0);
    c.pass = true;
    for (int i = 1; i < h; ++i)
      if (B[n].row_sum(i) != first) c.pass = false;
    if (c.pass && is_prime(n)) {
      Int expect = regular_degree(g, n);
      if (first != expect) {
        c.pass = false;
        c.detail = "row sum " + first.str() + ", expected " + expect.str();
      }
    }
    rep.checks.push_back(c);
  }

  for (long long n = 1; n <= upto; ++n) {
    IdentityCheck c;
    c.name = "weighted symmetry, n=" + std::to_string(n);
    c.pass = true;
    for (int i = 0; i < h && c.pass; ++i)
      for (int j = 0; j < h && c.pass; ++j)
        if (Int(classes.aut_counts[j]) * B[n].entries[i][j] !=
            Int(classes.aut_counts[i]) * B[n].entries[j][i]) {
          c.pass = false;
          c.detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.checks.push_back(c);
  }

  for (long long m = 2; m <= upto; ++m)
    for (long long n = m + 1; m * n <= upto; ++n) {
      if (std::gcd(m, n) != 1) continue;
      IdentityCheck c;
      c.name = "B(" + std::to_string(m) + ")B(" + std::to_string(n) + ") = B(" +
               std::to_string(m * n) + ")";
      c.pass = int_eq(int_mul(B[m].entries, B[n].entries), B[m * n].entries);
      if (!c.pass)
        c.detail = "product " + mat_str(int_mul(B[m].entries, B[n].entries)) +
                   " vs " + mat_str(B[m * n].entries);
      rep.checks.push_back(c);
    }

  {
    IdentityCheck c;
    c.name = "pairwise commutativity, n <= " + std::to_string(upto);
    c.pass = true;
    for (long long m = 2; m <= upto && c.pass; ++m)
      for (long long n = m + 1; n <= upto && c.pass; ++n)
        if (!int_eq(int_mul(B[m].entries, B[n].entries),
                    int_mul(B[n].entries, B[m].entries))) {
          c.pass = false;
          c.detail = "B(" + std::to_string(m) + ") and B(" + std::to_string(n) +
                     ") do not commute";
        }
    rep.checks.push_back(c);
  }
  return rep;
}

namespace {
using nlohmann::json;
}

std::string brandt_to_json(const BrandtMatrix& B) {
  json j;
  j["format_version"] = 1;
  j["kind"] = "brandt";
  j["g"] = B.g;
  j["p"] = B.p;
  j["n"] = B.n;
  j["h"] = B.h;
  json rows = json::array();
  for (const auto& row : B.entries) {
    json r = json::array();
    for (const Int& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  j["entries"] = rows;
  j["weights"] = B.weights;
  return j.dump(2) + "\n";
}

BrandtMatrix brandt_from_json(const std::string& text) {
  json j = json::parse(text);
  QG_REQUIRE(j.at("format_version").get<int>() == 1, "unknown format version");
  QG_REQUIRE(j.at("kind").get<std::string>() == "brandt", "not a brandt matrix");
  BrandtMatrix B;
  B.g = j.at("g").get<int>();
  B.p = j.at("p").get<long long>();
  B.n = j.at("n").get<long long>();
  B.h = j.at("h").get<int>();
  for (const auto& row : j.at("entries")) {
    IntVec r;
    for (const auto& v : row) r.push_back(Int(v.get<std::string>()));
    QG_REQUIRE((int)r.size() == B.h, "malformed row");
    B.entries.push_back(std::move(r));
  }
  QG_REQUIRE((int)B.entries.size() == B.h, "malformed matrix");
  B.weights = j.at("weights").get<std::vector<long long>>();
  QG_REQUIRE((int)B.weights.size() == B.h, "malformed weights");
  return B;
}

std::string brandt_to_csv(const BrandtMatrix& B) {
  std::string s;
  for (const auto& row : B.entries) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ",";
      s += row[j].str();
    }
    s += "\n";
  }
  return s;
}

}  // namespace quatgraphs
