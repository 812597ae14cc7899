#include "freealg/operators.hpp"

#include <algorithm>
#include <numeric>

#include "freealg/errors.hpp"

namespace freealg {

const char* conventions_text() {
  return
      "delta:   (delta f)(x1..x_{n+1}) = sum_{i=1..n+1} (-1)^(i-1) f(omit slot i)\n"
      "s:       (s f)(x1..xn) = f(0, x1, .., xn); satisfies s delta + delta s = Id\n"
      "deltaA:  (deltaA g)(x1..x_{m+1}) = g(x2..x_{m+1})\n"
      "           + sum_{i=1..m} (-1)^i g(x1, .., xi + x_{i+1}, .., x_{m+1})\n"
      "           + (-1)^(m+1) g(x1..xm)\n"
      "Ant:     ant(g) = (1/m!) sum_sigma sgn(sigma) sigma(multilinear part of g)\n"
      "P:       eps-multilinear coefficient over permutations of {2..n},\n"
      "         integrated over the standard simplex {t_i >= 0, sum t_i <= 1}\n"
      "G:       inductive homotopy with G^1 = G^2 = 0; G delta + delta G = Id - P\n"
      "GA:      Rinv . G . R on translation invariants;\n"
      "         GA deltaA + deltaA GA = Id - Ant\n";
}

std::vector<std::vector<int>> permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

static void require_plain(const NCPoly& f, const char* op) {
  FREEALG_REQUIRE(f.aux_dim() == 0,
                  std::string(op) + ": auxiliary variables present");
}

NCPoly delta(const NCPoly& f) {
  require_plain(f, "delta");
  const int n = f.arity();
  NCPoly result(n + 1);
  for (int i = 1; i <= n + 1; ++i) {
    LinearSubstitution omit(n, n + 1);
    for (int j = 1; j <= n; ++j) omit.map_to_letter(j, active(j < i ? j : j + 1));
    NCPoly term = substitute(f, omit);
    if (i % 2 == 0) term = -term;
    result += term;
  }
  return result;
}

NCPoly s_retract(const NCPoly& f) {
  FREEALG_REQUIRE(f.arity() >= 1, "s_retract: arity must be at least 1");
  require_plain(f, "s_retract");
  const int n = f.arity() - 1;
  LinearSubstitution sub(n + 1, n);
  sub.map_to_zero(1);
  for (int j = 2; j <= n + 1; ++j) sub.map_to_letter(j, active(j - 1));
  return substitute(f, sub);
}

NCPoly tau_defect(const NCPoly& f) {
  require_plain(f, "tau_defect");
  FREEALG_REQUIRE(!f.has_y(), "tau_defect: input already contains y");
  const int n = f.arity();
  LinearSubstitution sub(n, n);
  for (int j = 1; j <= n; ++j) {
    sub.add_image_term(j, Scalar(1), active(j));
    sub.add_image_term(j, Scalar(1), kLetterY);
  }
  return substitute(f, sub) - f;
}

NCPoly r_embed(const NCPoly& g) {
  require_plain(g, "r_embed");
  const int m = g.arity();
  LinearSubstitution sub(m, m + 1);
  for (int j = 1; j <= m; ++j) {
    sub.add_image_term(j, Scalar(1), active(j + 1));
    sub.add_image_term(j, Scalar(-1), active(j));
  }
  return substitute(g, sub);
}

NCPoly r_invert(const NCPoly& f) {
  require_plain(f, "r_invert");
  FREEALG_REQUIRE(f.arity() >= 1, "r_invert: arity must be at least 1");
  NCPoly defect = tau_defect(f);
  FREEALG_REQUIRE(defect.is_zero(),
                  "r_invert: input is not translation-invariant; defect = " +
                      defect.to_string());
  const int m = f.arity() - 1;
  LinearSubstitution sub(m + 1, m);
  sub.map_to_zero(1);
  for (int j = 2; j <= m + 1; ++j) {
    for (int i = 1; i < j; ++i) sub.add_image_term(j, Scalar(1), active(i));
  }
  return substitute(f, sub);
}

NCPoly delta_A(const NCPoly& g) {
  require_plain(g, "delta_A");
  const int m = g.arity();
  NCPoly result(m + 1);

  LinearSubstitution drop_first(m, m + 1);
  for (int j = 1; j <= m; ++j) drop_first.map_to_letter(j, active(j + 1));
  result += substitute(g, drop_first);

  for (int i = 1; i <= m; ++i) {
    LinearSubstitution merge(m, m + 1);
    for (int j = 1; j < i; ++j) merge.map_to_letter(j, active(j));
    merge.add_image_term(i, Scalar(1), active(i));
    merge.add_image_term(i, Scalar(1), active(i + 1));
    for (int j = i + 1; j <= m; ++j) merge.map_to_letter(j, active(j + 1));
    NCPoly term = substitute(g, merge);
    if (i % 2 == 1) term = -term;
    result += term;
  }

  LinearSubstitution drop_last(m, m + 1);
  for (int j = 1; j <= m; ++j) drop_last.map_to_letter(j, active(j));
  NCPoly last = substitute(g, drop_last);
  if (m % 2 == 0) last = -last;
  result += last;

  return result;
}

NCPoly ant(const NCPoly& g) {
  require_plain(g, "ant");
  FREEALG_REQUIRE(!g.has_param_letters() && !g.has_y(),
                  "ant: param letters present");
  const int m = g.arity();
  NCPoly ml = multilinear_part(g);
  NCPoly result(m);
  Word image;
  for (const auto& sigma : permutations(m)) {
    const int sign = permutation_sign(sigma);
    for (const auto& [w, c] : ml.terms()) {
      image.clear();
      for (Letter l : w)
        image.push_back(active(sigma[static_cast<std::size_t>(l - 1)]));
      result.add_term(image, sign > 0 ? c : -c);
    }
  }
  result *= make_scalar(Integer(1), factorial(static_cast<unsigned>(m)));
  return result;
}

NCPoly antisymmetrizer(int m) {
  NCPoly result(m);
  Word w(static_cast<std::size_t>(m));
  for (const auto& sigma : permutations(m)) {
    for (int i = 0; i < m; ++i)
      w[static_cast<std::size_t>(i)] = active(sigma[static_cast<std::size_t>(i)]);
    result.add_term(w, Scalar(permutation_sign(sigma)));
  }
  return result;
}

namespace {

// x(t) = x_1 + sum_{i=1}^{k} t_i (x_{i+1} - x_1) as a linear image.
LinearImage barycentric_image(int k) {
  LinearImage xt;
  CoefPoly lead(Scalar(1), k);
  for (int i = 1; i <= k; ++i) lead -= CoefPoly::t_var(i, k);
  xt.emplace_back(lead, active(1));
  for (int i = 1; i <= k; ++i) xt.emplace_back(CoefPoly::t_var(i, k), active(i + 1));
  return xt;
}

}  // namespace

NCPoly p_project(const NCPoly& f) {
  require_plain(f, "p_project");
  const int n = f.arity();
  if (n <= 1) return f;
  const int k = n - 1;
  FREEALG_CHECK(k <= packed::kMaxAux, "p_project arity exceeds packed capacity");

  const LinearImage xt = barycentric_image(k);
  NCPoly acc(n, k);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);  // sigma[0] stays 1
  do {
    const int sign = permutation_sign(sigma);
    LinearSubstitution sub(n, n, k);
    sub.set_image(1, xt);
    for (int j = 2; j <= n; ++j) {
      LinearImage img = xt;
      CoefPoly eps = CoefPoly::eps_var(j - 1, k);
      img.emplace_back(eps, active(sigma[static_cast<std::size_t>(j - 1)]));
      img.emplace_back(-eps, active(1));
      sub.set_image(j, std::move(img));
    }
    NCPoly term = detail::substitute_eps_capped(f, sub);
    if (sign < 0) term = -term;
    acc += term;
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));

  NCPoly result = simplex_integrate(eps_coefficient(acc));
  FREEALG_CHECK(result.aux_dim() == 0, "p_project leaked auxiliary variables");
  return result;
}

NCPoly g_homotopy(const NCPoly& f) {
  require_plain(f, "g_homotopy");
  const int a = f.arity();
  FREEALG_REQUIRE(a >= 1, "g_homotopy: arity must be at least 1");
  if (a <= 2) return NCPoly(a - 1);

  const int next_param = f.max_param_index() + 1;
  FREEALG_CHECK(next_param <= kMaxParams, "g_homotopy recursion exhausted params");
  const Letter p = param(next_param);

  LinearSubstitution shift(a, a - 1);
  shift.set_image(1, {{CoefPoly(Scalar(1)), p}});
  for (int j = 2; j <= a; ++j) {
    shift.add_image_term(j, Scalar(1), p);
    shift.add_image_term(j, Scalar(1), active(j - 1));
  }
  NCPoly phi = substitute(f, shift);

  NCPoly psi = phi - p_project(phi) - delta(g_homotopy(phi));

  LinearSubstitution finish(a - 1, a - 1);
  finish.map_to_zero(1);
  for (int j = 2; j <= a - 1; ++j) {
    finish.add_image_term(j, Scalar(1), active(j));
    finish.add_image_term(j, Scalar(-1), active(1));
  }
  finish.set_param_image(p, {{CoefPoly(Scalar(1)), active(1)}});
  return substitute(psi, finish);
}

NCPoly g_a(const NCPoly& g) {
  require_plain(g, "g_a");
  FREEALG_REQUIRE(g.arity() >= 1, "g_a: arity must be at least 1");
  NCPoly mid = g_homotopy(r_embed(g));
  NCPoly defect = tau_defect(mid);
  FREEALG_REQUIRE(defect.is_zero(),
                  "g_a: homotopy image is not translation-invariant; defect = " +
                      defect.to_string());
  return r_invert(mid);
}

namespace {

// Single-(t, eps) line integral: substitute, take the eps coefficient,
// integrate t over [0, 1].
NCPoly line_integral(const NCPoly& f, const LinearSubstitution& sub) {
  return simplex_integrate(
      eps_coefficient(detail::substitute_eps_capped(f, sub)));
}

NCPoly g3_closed(const NCPoly& f) {
  LinearSubstitution collapse(3, 2);
  collapse.map_to_letter(1, active(1));
  collapse.map_to_letter(2, active(1));
  collapse.map_to_letter(3, active(2));
  NCPoly first = substitute(f, collapse);

  LinearSubstitution path(3, 2, 1);
  path.map_to_letter(1, active(1));
  LinearImage b;
  b.emplace_back(CoefPoly(Scalar(1), 1) - CoefPoly::t_var(1, 1), active(1));
  b.emplace_back(CoefPoly::t_var(1, 1), active(2));
  path.set_image(2, b);
  LinearImage c = b;
  CoefPoly eps = CoefPoly::eps_var(1, 1);
  c.emplace_back(eps, active(2));
  c.emplace_back(-eps, active(1));
  path.set_image(3, std::move(c));

  return first - line_integral(f, path);
}

// slot -> x_base + t (x_to - x_base), and with_eps adds eps (x_to - x_base).
LinearImage segment_image(int base, int to, bool with_eps) {
  LinearImage img;
  CoefPoly t = CoefPoly::t_var(1, 1);
  img.emplace_back(CoefPoly(Scalar(1), 1) - t, active(base));
  img.emplace_back(t, active(to));
  if (with_eps) {
    CoefPoly eps = CoefPoly::eps_var(1, 1);
    img.emplace_back(eps, active(to));
    img.emplace_back(-eps, active(base));
  }
  return img;
}

NCPoly g4_0(const NCPoly& f) {
  auto plain = [&](int a, int b, int c, int d) {
    LinearSubstitution sub(4, 3);
    sub.map_to_letter(1, active(a));
    sub.map_to_letter(2, active(b));
    sub.map_to_letter(3, active(c));
    sub.map_to_letter(4, active(d));
    return substitute(f, sub);
  };
  return plain(1, 1, 2, 3) - plain(1, 2, 2, 3) + plain(1, 1, 1, 3) -
         plain(1, 1, 1, 2);
}

NCPoly g4_1(const NCPoly& f) {
  auto term = [&](int first, int second, int base, int to) {
    LinearSubstitution sub(4, 3, 1);
    sub.map_to_letter(1, active(first));
    sub.map_to_letter(2, active(second));
    sub.set_image(3, segment_image(base, to, false));
    sub.set_image(4, segment_image(base, to, true));
    return line_integral(f, sub);
  };
  return term(1, 2, 2, 3) - term(1, 1, 1, 3) + term(1, 1, 1, 2);
}

NCPoly g4_2(const NCPoly& f) {
  // V(t) = x_1 + t_1 (x_2 - x_1) + t_2 (x_3 - x_1)
  LinearImage vt;
  CoefPoly t1 = CoefPoly::t_var(1, 2), t2 = CoefPoly::t_var(2, 2);
  vt.emplace_back(CoefPoly(Scalar(1), 2) - t1 - t2, active(1));
  vt.emplace_back(t1, active(2));
  vt.emplace_back(t2, active(3));

  auto term = [&](int eps_a, int eps_b) {
    // slot 3 gets V(t + eps_a), slot 4 gets V(t + eps_b);
    // t + eps_1 perturbs t_1 (direction x_2 - x_1), t + eps_2 perturbs t_2
    // (direction x_3 - x_1).
    auto perturbed = [&](int which) {
      LinearImage img = vt;
      CoefPoly eps = CoefPoly::eps_var(which, 2);
      img.emplace_back(eps, active(which + 1));
      img.emplace_back(-eps, active(1));
      return img;
    };
    LinearSubstitution sub(4, 3, 2);
    sub.map_to_letter(1, active(1));
    sub.set_image(2, vt);
    sub.set_image(3, perturbed(eps_a));
    sub.set_image(4, perturbed(eps_b));
    return simplex_integrate(
        eps_coefficient(detail::substitute_eps_capped(f, sub)));
  };
  return -term(1, 2) - term(2, 1);
}

}  // namespace

NCPoly g_closed_form(int order, const NCPoly& f) {
  require_plain(f, "g_closed_form");
  FREEALG_REQUIRE(order == 3 || order == 4, "g_closed_form: order must be 3 or 4");
  FREEALG_REQUIRE(f.arity() == order,
                  "g_closed_form: arity must match the order");
  if (order == 3) return g3_closed(f);
  return g4_0(f) + g4_1(f) + g4_2(f);
}

G4Diagnostic g4_diagnostic(int degree) {
  G4Diagnostic diag;
  diag.degree = degree;
  std::vector<int> digits(static_cast<std::size_t>(degree), 1);
  Word w(static_cast<std::size_t>(degree));
  while (true) {
    for (std::size_t i = 0; i < digits.size(); ++i) w[i] = active(digits[i]);
    NCPoly f = NCPoly::monomial(4, w);
    ++diag.total;
    if (g_closed_form(4, f) == g_homotopy(f)) {
      ++diag.matching;
    } else {
      diag.mismatches.push_back(w);
    }
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == 4) {
      digits[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return diag;
}

}  // namespace freealg
