#include "freealg/series.hpp"

#include "freealg/errors.hpp"

namespace freealg {

NCPoly exp_trunc(const NCPoly& f, int max_degree) {
  FREEALG_REQUIRE(sgn(f.constant_term()) == 0,
                  "exp needs a zero constant term");
  FREEALG_REQUIRE(max_degree >= 0, "exp needs max_degree >= 0");
  NCPoly acc = NCPoly::constant(f.arity(), Scalar(1));
  NCPoly pow = acc;
  Integer kfac(1);
  for (int k = 1; k <= max_degree; ++k) {
    pow = (pow * f).truncated(max_degree);
    if (pow.is_zero()) break;
    kfac *= k;
    acc += pow * make_scalar(Integer(1), kfac);
  }
  return acc;
}

NCPoly log_trunc(const NCPoly& f, int max_degree) {
  FREEALG_REQUIRE(f.constant_term() == Scalar(1),
                  "log needs constant term 1");
  FREEALG_REQUIRE(max_degree >= 0, "log needs max_degree >= 0");
  const NCPoly u = f - NCPoly::constant(f.arity(), Scalar(1));
  NCPoly acc = NCPoly::constant(f.arity(), Scalar(0));
  NCPoly pow = NCPoly::constant(f.arity(), Scalar(1));
  for (int k = 1; k <= max_degree; ++k) {
    pow = (pow * u).truncated(max_degree);
    if (pow.is_zero()) break;
    Scalar c = make_scalar(k % 2 == 1 ? 1 : -1, k);
    acc += pow * c;
  }
  return acc;
}

NCPoly bch(int max_degree) {
  FREEALG_REQUIRE(max_degree >= 1, "bch needs max_degree >= 1");
  const NCPoly x = NCPoly::generator(2, 1);
  const NCPoly y = NCPoly::generator(2, 2);
  const NCPoly prod =
      (exp_trunc(x, max_degree) * exp_trunc(y, max_degree)).truncated(max_degree);
  return log_trunc(prod, max_degree);
}

NCPoly series_compose(const NCPoly& f, const std::vector<NCPoly>& args,
                      int max_degree) {
  FREEALG_REQUIRE(static_cast<int>(args.size()) == f.arity(),
                  "series_compose needs one argument per slot");
  FREEALG_REQUIRE(!args.empty(), "series_compose needs at least one slot");
  const int arity = args.front().arity();
  for (const auto& a : args) {
    FREEALG_REQUIRE(a.arity() == arity,
                    "series_compose arguments must share an arity");
    FREEALG_REQUIRE(a.aux_dim() == 0 && !a.has_param_letters(),
                    "series_compose arguments must be plain elements");
  }
  FREEALG_REQUIRE(f.aux_dim() == 0 && !f.has_param_letters() && !f.has_y(),
                  "series_compose needs a plain element");

  NCPoly acc = NCPoly::constant(arity, Scalar(0));
  for (const auto& [w, c] : f.terms()) {
    NCPoly prod = NCPoly::constant(arity, c.constant_value());
    for (const Letter& l : w) {
      FREEALG_CHECK(is_active(l), "series_compose: unexpected letter");
      prod = (prod * args[static_cast<std::size_t>(active_index(l) - 1)])
                 .truncated(max_degree);
      if (prod.is_zero()) break;
    }
    acc += prod;
  }
  return acc;
}

}  // namespace freealg
