#include "enriched/sset.hpp"

#include <algorithm>

namespace enriched {

  bool TruncSSet::nondegenerate_edge(std::size_t x) const {
    return std::find(degen0.begin(), degen0.end(), x) == degen0.end();
  }

  bool TruncSSet::nondegenerate_triangle(std::size_t t) const {
    for (auto const& s : degen1) {
      if (std::find(s.begin(), s.end(), t) != s.end()) {
        return false;
      }
    }
    return true;
  }

  std::size_t TruncSSet::count_nondegenerate_edges() const {
    std::size_t n = 0;
    for (std::size_t x = 0; x < size1(); ++x) {
      n += nondegenerate_edge(x) ? 1 : 0;
    }
    return n;
  }

  std::size_t TruncSSet::count_nondegenerate_triangles() const {
    std::size_t n = 0;
    for (std::size_t t = 0; t < size2(); ++t) {
      n += nondegenerate_triangle(t) ? 1 : 0;
    }
    return n;
  }

  std::vector<std::string> identity_violations(TruncSSet const& x) {
    std::vector<std::string> out;
    auto const n0 = x.size0(), n1 = x.size1(), n2 = x.size2();

    auto sized = [&](auto const& table, std::size_t n, std::size_t range,
                     char const* what) {
      if (table.size() != n) {
        out.push_back(std::string(what) + ": wrong table size");
        return false;
      }
      for (auto v : table) {
        if (v >= range) {
          out.push_back(std::string(what) + ": value out of range");
          return false;
        }
      }
      return true;
    };
    bool ok = sized(x.face1[0], n1, n0, "d0 on X1")
              & sized(x.face1[1], n1, n0, "d1 on X1")
              & sized(x.face2[0], n2, n1, "d0 on X2")
              & sized(x.face2[1], n2, n1, "d1 on X2")
              & sized(x.face2[2], n2, n1, "d2 on X2")
              & sized(x.degen0, n0, n1, "s0 on X0")
              & sized(x.degen1[0], n1, n2, "s0 on X1")
              & sized(x.degen1[1], n1, n2, "s1 on X1");
    if (!ok) {
      return out;
    }

    auto fail = [&](std::string const& law, std::size_t at) {
      out.push_back(law + " fails at " + std::to_string(at));
    };
    auto const& d = x.face1;
    auto const& D = x.face2;
    auto const& s = x.degen0;
    auto const& S = x.degen1;

    for (std::size_t v = 0; v < n0; ++v) {
      if (d[0][s[v]] != v) fail("d0 s0 = id on X0", v);
      if (d[1][s[v]] != v) fail("d1 s0 = id on X0", v);
      if (S[0][s[v]] != S[1][s[v]]) fail("s1 s0 = s0 s0", v);
    }
    for (std::size_t e = 0; e < n1; ++e) {
      if (D[0][S[0][e]] != e) fail("d0 s0 = id on X1", e);
      if (D[1][S[0][e]] != e) fail("d1 s0 = id on X1", e);
      if (D[2][S[0][e]] != s[d[1][e]]) fail("d2 s0 = s0 d1", e);
      if (D[0][S[1][e]] != s[d[0][e]]) fail("d0 s1 = s0 d0", e);
      if (D[1][S[1][e]] != e) fail("d1 s1 = id on X1", e);
      if (D[2][S[1][e]] != e) fail("d2 s1 = id on X1", e);
    }
    for (std::size_t t = 0; t < n2; ++t) {
      if (d[0][D[1][t]] != d[0][D[0][t]]) fail("d0 d1 = d0 d0", t);
      if (d[0][D[2][t]] != d[1][D[0][t]]) fail("d0 d2 = d1 d0", t);
      if (d[1][D[2][t]] != d[1][D[1][t]]) fail("d1 d2 = d1 d1", t);
    }
    return out;
  }

  TruncSSet rgraph_to_sset(ReflexiveGraph const& r) {
    TruncSSet x;
    auto const n = r.vertices.size();
    x.points     = r.vertices;
    for (std::size_t v = 0; v < n; ++v) {
      x.edge_names.push_back("i(" + r.vertices[v] + ")");
      x.face1[0].push_back(v);
      x.face1[1].push_back(v);
      x.degen0.push_back(v);
    }
    for (auto const& e : r.edges) {
      x.edge_names.push_back(e.label);
      x.face1[0].push_back(e.target);
      x.face1[1].push_back(e.source);
    }
    auto const n1 = x.size1();
    // s0(e) is the triangle (a,a,b): faces (e, e, s0 a).
    for (std::size_t e = 0; e < n1; ++e) {
      x.degen1[0].push_back(e);
      x.face2[0].push_back(e);
      x.face2[1].push_back(e);
      x.face2[2].push_back(x.degen0[x.face1[1][e]]);
    }
    // s1(e) is the triangle (a,b,b): faces (s0 b, e, e).
    for (std::size_t e = 0; e < n1; ++e) {
      if (e < n) {
        x.degen1[1].push_back(e);
        continue;
      }
      x.degen1[1].push_back(x.face2[0].size());
      x.face2[0].push_back(x.degen0[x.face1[0][e]]);
      x.face2[1].push_back(e);
      x.face2[2].push_back(e);
    }
    x.triangles = x.face2[0].size();
    return x;
  }

  TruncSSet product_sset(TruncSSet const& a, TruncSSet const& b) {
    TruncSSet  x;
    auto const b0 = b.size0(), b1 = b.size1(), b2 = b.size2();
    for (auto const& p : a.points) {
      for (auto const& q : b.points) {
        x.points.push_back("(" + p + "," + q + ")");
      }
    }
    for (auto const& p : a.edge_names) {
      for (auto const& q : b.edge_names) {
        x.edge_names.push_back("(" + p + "," + q + ")");
      }
    }
    x.triangles = a.size2() * b2;

    for (std::size_t i = 0; i < a.size1(); ++i) {
      for (std::size_t j = 0; j < b1; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          x.face1[k].push_back(a.face1[k][i] * b0 + b.face1[k][j]);
          x.degen1[k].push_back(a.degen1[k][i] * b2 + b.degen1[k][j]);
        }
      }
    }
    for (std::size_t i = 0; i < a.size2(); ++i) {
      for (std::size_t j = 0; j < b2; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          x.face2[k].push_back(a.face2[k][i] * b1 + b.face2[k][j]);
        }
      }
    }
    for (std::size_t i = 0; i < a.size0(); ++i) {
      for (std::size_t j = 0; j < b0; ++j) {
        x.degen0.push_back(a.degen0[i] * b1 + b.degen0[j]);
      }
    }
    return x;
  }

  TruncSSet terminal_sset() {
    return rgraph_to_sset(discrete_rgraph(1));
  }

}  // namespace enriched
