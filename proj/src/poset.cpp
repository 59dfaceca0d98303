#include "enriched/poset.hpp"

#include <algorithm>
#include <numeric>

namespace enriched {

  std::vector<std::pair<std::size_t, std::size_t>> FinPoset::hasse() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto const n = size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !leq[a][b]) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < n && covered; ++c) {
          covered = c == a || c == b || !(leq[a][c] && leq[c][b]);
        }
        if (covered) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> FinPoset::minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
      bool min = true;
      for (std::size_t b = 0; b < size() && min; ++b) {
        min = b == a || !leq[b][a];
      }
      if (min) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<std::string> validate(FinPoset const& p) {
    std::vector<std::string> out;
    auto const               n = p.size();
    if (p.leq.size() != n) {
      return {"order matrix has wrong size"};
    }
    for (auto const& row : p.leq) {
      if (row.size() != n) {
        return {"order matrix has wrong size"};
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!p.leq[a][a]) {
        out.push_back("not reflexive at " + p.elements[a]);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && p.leq[a][b] && p.leq[b][a]) {
          out.push_back("not antisymmetric: " + p.elements[a] + ", " + p.elements[b]);
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (p.leq[a][b] && p.leq[b][c] && !p.leq[a][c]) {
            out.push_back("not transitive: " + p.elements[a] + ", " + p.elements[b]
                          + ", " + p.elements[c]);
          }
        }
      }
    }
    return out;
  }

  FinPoset discrete_poset(std::size_t n) {
    FinPoset p;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      p.elements.push_back(std::to_string(i));
      p.leq[i][i] = true;
    }
    return p;
  }

  FinPoset chain_poset(std::size_t n) {
    auto p = discrete_poset(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        p.leq[i][j] = true;
      }
    }
    return p;
  }

  FinPoset product_pos(FinPoset const& p, FinPoset const& q) {
    FinPoset   out;
    auto const np = p.size(), nq = q.size();
    for (auto const& a : p.elements) {
      for (auto const& b : q.elements) {
        out.elements.push_back("(" + a + "," + b + ")");
      }
    }
    out.leq.assign(np * nq, std::vector<bool>(np * nq, false));
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < nq; ++b)
        for (std::size_t c = 0; c < np; ++c)
          for (std::size_t d = 0; d < nq; ++d)
            out.leq[a * nq + b][c * nq + d] = p.leq[a][c] && q.leq[b][d];
    return out;
  }

  namespace {
    std::pair<std::size_t, std::size_t> degree(FinPoset const& p, std::size_t a) {
      std::size_t below = 0, above = 0;
      for (std::size_t b = 0; b < p.size(); ++b) {
        below += p.leq[b][a] ? 1 : 0;
        above += p.leq[a][b] ? 1 : 0;
      }
      return {below, above};
    }

    bool extend(FinPoset const&           p,
                FinPoset const&           q,
                std::vector<std::size_t>& image,
                std::vector<bool>&        used,
                std::size_t               a) {
      if (a == p.size()) {
        return true;
      }
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (used[b] || degree(p, a) != degree(q, b)) {
          continue;
        }
        bool ok = p.leq[a][a] == q.leq[b][b];
        for (std::size_t c = 0; c < a && ok; ++c) {
          ok = p.leq[a][c] == q.leq[b][image[c]] && p.leq[c][a] == q.leq[image[c]][b];
        }
        if (!ok) {
          continue;
        }
        image[a] = b;
        used[b]  = true;
        if (extend(p, q, image, used, a + 1)) {
          return true;
        }
        used[b] = false;
      }
      return false;
    }

    // Reachability along generators, reflexive.
    std::vector<std::vector<bool>> reachability(PathCategory const& c) {
      auto const                     n = c.objects().size();
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      std::vector<std::vector<std::size_t>> out(n);
      for (auto const& g : c.generators()) {
        out[g.source].push_back(g.target);
      }
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
          auto v = stack.back();
          stack.pop_back();
          for (auto w : out[v]) {
            if (!reach[s][w]) {
              reach[s][w] = true;
              stack.push_back(w);
            }
          }
        }
      }
      return reach;
    }
  }  // namespace

  bool poset_iso(FinPoset const& p, FinPoset const& q) {
    if (p.size() != q.size()) {
      return false;
    }
    std::vector<std::size_t> image(p.size());
    std::vector<bool>        used(q.size(), false);
    return extend(p, q, image, used, 0);
  }

  std::vector<std::size_t> free_poset_classes(PathCategory const& c) {
    auto const               n     = c.objects().size();
    auto const               reach = reachability(c);
    std::vector<std::size_t> cls(n, n);
    std::size_t              next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (cls[a] != n) {
        continue;
      }
      for (std::size_t b = a; b < n; ++b) {
        if (reach[a][b] && reach[b][a]) {
          cls[b] = next;
        }
      }
      ++next;
    }
    return cls;
  }

  FinPoset free_poset(PathCategory const& c) {
    auto const n     = c.objects().size();
    auto const reach = reachability(c);
    auto const cls   = free_poset_classes(c);
    auto const k     = n == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;

    FinPoset p;
    p.elements.assign(k, "");
    p.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < n; ++a) {
      auto& name = p.elements[cls[a]];
      name += (name.empty() ? "" : " ~ ") + c.objects()[a];
      for (std::size_t b = 0; b < n; ++b) {
        if (reach[a][b]) {
          p.leq[cls[b]][cls[a]] = true;
        }
      }
    }
    return p;
  }

  std::vector<std::string> validate(Partition const& p) {
    std::vector<std::string> out;
    std::vector<int>         seen(p.carrier, 0);
    for (auto const& cls : p.classes) {
      if (cls.empty()) {
        out.push_back("empty class");
      }
      for (auto x : cls) {
        if (x >= p.carrier) {
          out.push_back("element " + std::to_string(x) + " outside carrier");
        } else if (++seen[x] > 1) {
          out.push_back("element " + std::to_string(x) + " in two classes");
        }
      }
    }
    for (std::size_t x = 0; x < p.carrier; ++x) {
      if (seen[x] == 0) {
        out.push_back("element " + std::to_string(x) + " uncovered");
      }
    }
    return out;
  }

  Partition components(FinPoset const& p) {
    auto const               n = p.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (p.leq[a][b]) {
          auto ra = find(a), rb = find(b);
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
    Partition                          out{n, {}};
    std::vector<std::size_t>           slot(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      auto r = find(a);
      if (slot[r] == n) {
        slot[r] = out.classes.size();
        out.classes.emplace_back();
      }
      out.classes[slot[r]].push_back(a);
    }
    return out;
  }

}  // namespace enriched
