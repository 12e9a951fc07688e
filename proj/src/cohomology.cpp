#include "torictop/cohomology.hpp"

#include "torictop/error.hpp"
#include "torictop/integer_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace torictop::cohomology {

using combinatorics::Face;

void RingPresentation::check() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (!names.insert(g.name).second) throw InvalidInput("duplicate generator name " + g.name);
    if (g.degree <= 0 || g.degree % 2 != 0) throw InvalidInput("generator degrees must be positive and even");
  }
  for (const auto& rel : relations) {
    std::optional<int> deg;
    for (const auto& t : rel) {
      int d = 0;
      for (auto [idx, pw] : t.mono) {
        if (idx >= generators.size()) throw InvalidInput("relation uses a missing generator");
        d += generators[idx].degree * pw;
      }
      if (deg && *deg != d) throw InvalidInput("relation is not homogeneous");
      deg = d;
    }
  }
}

std::string RingPresentation::to_text() const {
  std::string s = "Z[";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i].name;
  s += "]";
  if (relations.empty()) return s;
  s += "/(";
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (r) s += ", ";
    const auto& rel = relations[r];
    if (rel.empty()) s += "0";
    for (std::size_t t = 0; t < rel.size(); ++t) {
      std::int64_t c = rel[t].coef;
      if (t) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      std::int64_t mag = c < 0 ? -c : c;
      std::string mono;
      for (std::size_t k = 0; k < rel[t].mono.size(); ++k) {
        auto [idx, pw] = rel[t].mono[k];
        mono += (k ? "*" : "") + generators[idx].name;
        if (pw != 1) mono += "^" + std::to_string(pw);
      }
      if (mono.empty()) s += std::to_string(mag);
      else if (mag != 1) s += std::to_string(mag) + "*" + mono;
      else s += mono;
    }
  }
  return s + ")";
}

namespace {

Polynomial squarefree(const Face& f) {
  Monomial m;
  for (int v : f) m.emplace_back(static_cast<std::size_t>(v - 1), 1);
  return {Term{1, std::move(m)}};
}

std::vector<Generator> numbered(const std::string& stem, int m) {
  std::vector<Generator> gens;
  for (int i = 1; i <= m; ++i) gens.push_back({stem + "_" + std::to_string(i), 2});
  return gens;
}

void require_complete(const MultiFan& f) {
  if (!fans::is_complete(f)) throw NotComplete("fan is not complete");
}

}  // namespace

RingPresentation face_ring_presentation(const SimplicialComplex& k) {
  RingPresentation p;
  p.generators = numbered("tau", k.vertex_count());
  for (const auto& s : combinatorics::minimal_nonfaces(k)) p.relations.push_back(squarefree(s));
  return p;
}

RingPresentation dj_presentation(const MultiFan& f) {
  require_complete(f);
  if (!fans::is_nonsingular(f)) throw PreconditionViolated("fan is singular");
  RingPresentation p;
  p.generators = numbered("mu", f.complex().vertex_count());
  for (const auto& s : combinatorics::minimal_nonfaces(f.complex())) p.relations.push_back(squarefree(s));
  for (int j = 0; j < f.dimension(); ++j) {
    Polynomial lin;
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
      auto c = f.rays()[i][static_cast<std::size_t>(j)];
      if (c != 0) lin.push_back(Term{c, {{i, 1}}});
    }
    p.relations.push_back(std::move(lin));
  }
  return p;
}

GradedDims betti_numbers(const MultiFan& f) {
  require_complete(f);
  auto h = combinatorics::h_from_f(combinatorics::f_vector(f.complex()));
  return GradedDims{h.entries};
}

GradedDims standard_monomial_count(const SimplicialComplex& k,
                                   const std::vector<IntVec>& linear_forms, int degree_bound) {
  if (degree_bound < 0) throw InvalidInput("degree bound must be nonnegative");
  const auto m = static_cast<std::size_t>(k.vertex_count());
  for (const auto& form : linear_forms)
    if (form.size() != m) throw InvalidInput("linear form needs one coefficient per vertex");

  // Monomials of the face ring in polynomial degree d: exponent vectors whose
  // support is a face.
  using Exponents = std::vector<int>;
  auto basis_in_degree = [&](int d) {
    std::vector<Exponents> out;
    for (const auto& face : k.faces()) {
      const int s = static_cast<int>(face.size());
      if (s > d || (s == 0 && d > 0)) continue;
      Exponents e(m, 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s) {
          if (left == 0) out.push_back(e);
          return;
        }
        const int room = left - (s - pos - 1);
        for (int x = 1; x <= room; ++x) {
          e[static_cast<std::size_t>(face[static_cast<std::size_t>(pos)] - 1)] = x;
          rec(pos + 1, left - x);
        }
        e[static_cast<std::size_t>(face[static_cast<std::size_t>(pos)] - 1)] = 0;
      };
      rec(0, d);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto supported = [&](const Exponents& e) {
    Face f;
    for (std::size_t i = 0; i < m; ++i)
      if (e[i] > 0) f.push_back(static_cast<int>(i + 1));
    return k.contains(f);
  };

  GradedDims out;
  std::vector<Exponents> previous;
  for (int d = 0; 2 * d <= degree_bound; ++d) {
    auto basis = basis_in_degree(d);
    std::map<Exponents, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);
    std::vector<IntVec> rows;
    if (d > 0)
      for (const auto& form : linear_forms)
        for (const auto& b : previous) {
          IntVec row(basis.size(), 0);
          bool nonzero = false;
          for (std::size_t i = 0; i < m; ++i) {
            if (form[i] == 0) continue;
            Exponents e = b;
            ++e[i];
            if (!supported(e)) continue;
            row[col.at(e)] += form[i];
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
    std::size_t r = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows, basis.size()));
    out.dims.push_back(static_cast<std::int64_t>(basis.size() - r));
    previous = std::move(basis);
  }
  return out;
}

RingPresentation poset_face_ring(const SimplicialPoset& p) {
  RingPresentation out;
  std::vector<std::size_t> gen_of(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == p.bottom()) continue;
    gen_of[i] = out.generators.size();
    out.generators.push_back({"tau_" + p.element(i).name, 2 * p.element(i).rank});
  }
  auto product = [&](std::vector<std::size_t> elems) {
    std::map<std::size_t, int> pw;
    for (auto e : elems)
      if (e != p.bottom()) ++pw[gen_of[e]];
    return Monomial(pw.begin(), pw.end());
  };
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (a == p.bottom() || b == p.bottom()) continue;
      if (p.less_equal(a, b) || p.less_equal(b, a)) continue;
      Polynomial rel{Term{1, product({a, b})}};
      auto uppers = p.minimal_upper_bounds(a, b);
      if (!uppers.empty()) {
        auto meets = p.maximal_lower_bounds(a, b);
        if (meets.size() != 1)
          throw InvalidInput("elements " + p.element(a).name + " and " + p.element(b).name +
                             " have a common upper bound but no unique meet");
        for (auto e : uppers) rel.push_back(Term{-1, product({meets.front(), e})});
      }
      out.relations.push_back(std::move(rel));
    }
  return out;
}

std::int64_t square_zero_index(std::int64_t a) {
  // (p x + q y)^2 = (A p^2 + B pq + C q^2) xy after x^2 -> 0, y^2 -> -a xy.
  const std::int64_t A = 0, B = 2, C = -a;
  std::vector<IntVec> lines;
  auto add = [&](IntVec v) {
    v = primitive_part(v);
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = {-v[0], -v[1]};
    if (std::find(lines.begin(), lines.end(), v) == lines.end()) lines.push_back(v);
  };
  const std::int64_t disc = checked_add(checked_mul(B, B), -checked_mul(4, checked_mul(A, C)));
  if (disc < 0) return 0;
  std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(disc)));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  if (s * s != disc) return 0;
  if (A == 0) {
    add({1, 0});
    if (B != 0 || C != 0) add({-C, B});
  } else {
    add({-B + s, 2 * A});
    add({-B - s, 2 * A});
  }
  if (lines.size() < 2) return 0;
  std::int64_t det = lines[0][0] * lines[1][1] - lines[0][1] * lines[1][0];
  return det < 0 ? -det : det;
}

RingClass hirzebruch_ring_class(std::int64_t a) {
  return square_zero_index(a) == 1 ? RingClass::Even : RingClass::Odd;
}

}  // namespace torictop::cohomology
