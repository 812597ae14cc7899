#include "freealg/oracle.hpp"

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "freealg/detail/parallel.hpp"
#include "freealg/errors.hpp"
#include "freealg/operators.hpp"

namespace freealg {

namespace {

QMatrix mat_identity(int k) {
  QMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = Scalar(1);
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int l = 0; l < a.cols; ++l) {
      const Scalar& x = a.at(i, l);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        out.at(i, j) += x * b.at(l, j);
      }
    }
  }
  return out;
}

struct SidePair {
  NCPoly lhs;
  NCPoly rhs;
};

// The compared sides of each identity; fault injection doubles the
// projector term (P or ant), or the first left-hand composite when the
// identity has none.
SidePair identity_sides(const std::string& name, const NCPoly& f, bool fault) {
  const Scalar two(2);
  if (name == "s_delta_homotopy") {
    NCPoly a = s_retract(delta(f));
    if (fault) a = a * two;
    return {a + delta(s_retract(f)), f};
  }
  if (name == "delta_p_commute") {
    NCPoly p = p_project(f);
    if (fault) p = p * two;
    return {delta(p), p_project(delta(f))};
  }
  if (name == "g_homotopy_identity") {
    NCPoly p = p_project(f);
    if (fault) p = p * two;
    return {g_homotopy(delta(f)) + delta(g_homotopy(f)), f - p};
  }
  if (name == "pr_rant") {
    NCPoly p = p_project(r_embed(f));
    if (fault) p = p * two;
    return {p, r_embed(ant(f))};
  }
  if (name == "ga_homotopy_identity") {
    NCPoly a = ant(f);
    if (fault) a = a * two;
    return {g_a(delta_A(f)) + delta_A(g_a(f)), f - a};
  }
  FREEALG_REQUIRE(false, "unknown oracle identity: " + name);
  return {f, f};
}

// Arity of the compared sides, which fixes how many letter matrices a trial
// needs.
int eval_arity(const std::string& name, int n) {
  if (name == "delta_p_commute" || name == "pr_rant") return n + 1;
  return n;
}

}  // namespace

QMatrix matrix_eval(const NCPoly& f, const std::vector<QMatrix>& mats) {
  FREEALG_REQUIRE(f.aux_dim() == 0 && !f.has_param_letters() && !f.has_y(),
                  "matrix_eval needs a plain element");
  FREEALG_REQUIRE(static_cast<int>(mats.size()) >= f.arity(),
                  "matrix_eval needs one matrix per slot");
  FREEALG_REQUIRE(!mats.empty(), "matrix_eval needs at least one matrix");
  const int k = mats.front().rows;
  for (const auto& m : mats) {
    FREEALG_REQUIRE(m.rows == k && m.cols == k,
                    "matrix_eval needs square matrices of one size");
  }
  QMatrix acc(k, k);
  for (const auto& [w, c] : f.terms()) {
    QMatrix prod = mat_identity(k);
    for (const Letter& l : w) {
      prod = mat_mul(prod, mats[static_cast<std::size_t>(active_index(l) - 1)]);
    }
    const Scalar coef = c.constant_value();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        acc.at(i, j) += coef * prod.at(i, j);
      }
    }
  }
  return acc;
}

const std::vector<std::string>& oracle_identity_names() {
  static const std::vector<std::string> names = {
      "s_delta_homotopy", "delta_p_commute", "g_homotopy_identity", "pr_rant",
      "ga_homotopy_identity"};
  return names;
}

OracleTaskReport check_identity(const std::string& identity, int n, int d,
                                const OracleOptions& options) {
  bool known = false;
  for (const auto& name : oracle_identity_names()) known = known || name == identity;
  if (!known) {
    std::string names;
    for (const auto& name : oracle_identity_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    FREEALG_REQUIRE(false, "unknown oracle identity '" + identity +
                               "' (expected one of: " + names + ")");
  }
  FREEALG_REQUIRE(n >= 1 && d >= 1, "oracle needs n >= 1 and d >= 1");
  FREEALG_REQUIRE(options.trials >= 0, "oracle needs trials >= 0");
  FREEALG_REQUIRE(options.matrix_size >= 1, "oracle needs matrix_size >= 1");

  const int arity = eval_arity(identity, n);
  const int k = options.matrix_size;

  // All randomness is drawn up front, in trial order, from one generator.
  // Raw 64-bit outputs are reduced by modulo so the stream of draws is
  // reproducible across platforms.
  std::mt19937_64 rng(options.seed);
  struct Trial {
    Word word;
    std::vector<QMatrix> mats;
  };
  std::vector<Trial> trials(static_cast<std::size_t>(options.trials));
  for (auto& trial : trials) {
    trial.word.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      trial.word.push_back(
          active(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n))));
    }
    trial.mats.reserve(static_cast<std::size_t>(arity));
    for (int m = 0; m < arity; ++m) {
      QMatrix mat(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          const long num = -9 + static_cast<long>(rng() % 19);
          const long den = 1 + static_cast<long>(rng() % 4);
          mat.at(i, j) = make_scalar(num, den);
        }
      }
      trial.mats.push_back(std::move(mat));
    }
  }

  // The symbolic sides only depend on the drawn word, so they are computed
  // once per distinct word (in parallel when asked).
  std::map<Word, std::size_t, WordLess> word_slot;
  std::vector<const Word*> distinct;
  std::vector<std::size_t> trial_slot(trials.size());
  for (std::size_t t = 0; t < trials.size(); ++t) {
    auto [it, inserted] = word_slot.try_emplace(trials[t].word, distinct.size());
    if (inserted) distinct.push_back(&it->first);
    trial_slot[t] = it->second;
  }
  std::vector<SidePair> sides(distinct.size());
  detail::parallel_for(static_cast<int>(distinct.size()), options.threads,
                       [&](int i) {
                         const NCPoly f = NCPoly::monomial(
                             n, *distinct[static_cast<std::size_t>(i)]);
                         sides[static_cast<std::size_t>(i)] =
                             identity_sides(identity, f, options.fault_inject);
                       });

  OracleTaskReport report;
  report.identity = identity;
  report.n = n;
  report.d = d;
  report.trials = options.trials;
  report.matrix_size = k;
  report.seed = options.seed;
  report.fault_inject = options.fault_inject;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const SidePair& pair = sides[trial_slot[t]];
    const QMatrix lhs = matrix_eval(pair.lhs, trials[t].mats);
    const QMatrix rhs = matrix_eval(pair.rhs, trials[t].mats);
    if (lhs.entries != rhs.entries) {
      ++report.failures;
      if (report.first_failure.empty()) {
        report.first_failure =
            "trial " + std::to_string(t) + ": sides disagree on word " +
            word_name(trials[t].word);
      }
    }
  }
  return report;
}

std::string report_text(const std::vector<OracleTaskReport>& reports) {
  std::ostringstream out;
  int failed_tasks = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "ok  " : "FAIL") << " identity=" << r.identity
        << " n=" << r.n << " d=" << r.d << " trials=" << r.trials
        << " k=" << r.matrix_size << " seed=" << r.seed
        << " fault_inject=" << (r.fault_inject ? 1 : 0)
        << " failures=" << r.failures;
    if (!r.first_failure.empty()) out << " (" << r.first_failure << ")";
    out << "\n";
    if (!r.passed()) ++failed_tasks;
  }
  out << (failed_tasks == 0 ? "all identities agreed on every trial"
                            : "identity violations detected")
      << "\n";
  return out.str();
}

}  // namespace freealg
