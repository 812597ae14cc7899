#include "freealg/ncpoly.hpp"

#include <algorithm>

#include "freealg/errors.hpp"

namespace freealg {

NCPoly::NCPoly(int arity, int aux_dim) : arity_(arity), aux_dim_(aux_dim) {
  FREEALG_CHECK(arity >= 0, "arity must be nonnegative");
  FREEALG_CHECK(aux_dim >= 0 && aux_dim <= packed::kMaxAux,
                "auxiliary dimension out of range");
}

NCPoly NCPoly::constant(int arity, const Scalar& c) {
  NCPoly p(arity);
  p.add_term(Word{}, c);
  return p;
}

NCPoly NCPoly::generator(int arity, int index) {
  FREEALG_CHECK(index >= 1 && index <= arity, "generator index exceeds arity");
  NCPoly p(arity);
  p.add_term(Word{active(index)}, Scalar(1));
  return p;
}

NCPoly NCPoly::monomial(int arity, const Word& w) {
  return monomial(arity, w, Scalar(1));
}

NCPoly NCPoly::monomial(int arity, const Word& w, const Scalar& c) {
  NCPoly p(arity);
  p.add_term(w, c);
  return p;
}

int NCPoly::max_degree() const {
  if (terms_.empty()) return 0;
  return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPoly::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  std::size_t d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d) return false;
  if (degree_out) *degree_out = static_cast<int>(d);
  return true;
}

void NCPoly::check_word(const Word& w) const {
  for (Letter l : w) {
    if (is_active(l)) {
      FREEALG_CHECK(l <= arity_, "active letter exceeds arity");
    }
  }
}

void NCPoly::add_term(const Word& w, const CoefPoly& c) {
  if (c.is_zero()) return;
  check_word(w);
  FREEALG_CHECK(c.aux_dim() == aux_dim_, "coefficient auxiliary dimension mismatch");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  add_term(w, CoefPoly(c, aux_dim_));
}

CoefPoly NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CoefPoly(Scalar(0), aux_dim_) : it->second;
}

Scalar NCPoly::scalar_coefficient(const Word& w) const {
  return coefficient(w).constant_value();
}

NCPoly NCPoly::with_arity(int arity) const {
  FREEALG_CHECK(arity >= arity_, "arity may only grow");
  NCPoly p = *this;
  p.arity_ = arity;
  return p;
}

NCPoly NCPoly::with_aux_dim(int k) const {
  NCPoly p(arity_, k);
  for (const auto& [w, c] : terms_) p.terms_.emplace(w, c.with_aux_dim(k));
  return p;
}

NCPoly NCPoly::homogeneous_component(int d) const {
  NCPoly p(arity_, aux_dim_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) == d) p.terms_.emplace(w, c);
  }
  return p;
}

NCPoly NCPoly::truncated(int max_deg) const {
  NCPoly p(arity_, aux_dim_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) <= max_deg) p.terms_.emplace(w, c);
  }
  return p;
}

bool NCPoly::has_param_letters() const {
  for (const auto& [w, c] : terms_) {
    if (std::any_of(w.begin(), w.end(), [](Letter l) { return is_param(l); }))
      return true;
  }
  return false;
}

bool NCPoly::has_y() const {
  for (const auto& [w, c] : terms_) {
    if (std::any_of(w.begin(), w.end(), [](Letter l) { return is_y(l); }))
      return true;
  }
  return false;
}

int NCPoly::max_param_index() const {
  int best = 0;
  for (const auto& [w, c] : terms_) {
    for (Letter l : w) {
      if (is_param(l)) best = std::max(best, param_index(l));
    }
  }
  return best;
}

Scalar NCPoly::constant_term() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar(0) : it->second.constant_value();
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  FREEALG_CHECK(arity_ == o.arity_, "arity mismatch");
  FREEALG_CHECK(aux_dim_ == o.aux_dim_, "auxiliary dimension mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  FREEALG_CHECK(arity_ == o.arity_, "arity mismatch");
  FREEALG_CHECK(aux_dim_ == o.aux_dim_, "auxiliary dimension mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p(arity_, aux_dim_);
  for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
  return p;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool NCPoly::operator==(const NCPoly& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")*" + word_name(w);
  }
  return s;
}

NCPoly nc_mul(const NCPoly& f, const NCPoly& g) {
  FREEALG_CHECK(f.arity() == g.arity(), "arity mismatch");
  FREEALG_CHECK(f.aux_dim() == g.aux_dim(), "auxiliary dimension mismatch");
  NCPoly p(f.arity(), f.aux_dim());
  Word w;
  for (const auto& [wf, cf] : f.terms()) {
    for (const auto& [wg, cg] : g.terms()) {
      w = wf;
      w.insert(w.end(), wg.begin(), wg.end());
      p.add_term(w, cf * cg);
    }
  }
  return p;
}

LinearSubstitution::LinearSubstitution(int source_arity, int target_arity,
                                       int target_aux_dim)
    : source_arity_(source_arity),
      target_arity_(target_arity),
      target_aux_dim_(target_aux_dim),
      images_(static_cast<std::size_t>(source_arity)) {
  FREEALG_CHECK(source_arity >= 0 && target_arity >= 0, "negative arity");
}

void LinearSubstitution::set_image(int slot, LinearImage image) {
  FREEALG_CHECK(slot >= 1 && slot <= source_arity_, "substitution slot out of range");
  images_[static_cast<std::size_t>(slot - 1)] = std::move(image);
}

void LinearSubstitution::map_to_zero(int slot) { set_image(slot, {}); }

void LinearSubstitution::map_to_letter(int slot, Letter l) {
  set_image(slot, {{CoefPoly(Scalar(1), target_aux_dim_), l}});
}

void LinearSubstitution::add_image_term(int slot, const CoefPoly& c, Letter l) {
  FREEALG_CHECK(slot >= 1 && slot <= source_arity_, "substitution slot out of range");
  FREEALG_CHECK(c.aux_dim() == target_aux_dim_, "image coefficient dimension mismatch");
  images_[static_cast<std::size_t>(slot - 1)].emplace_back(c, l);
}

void LinearSubstitution::add_image_term(int slot, const Scalar& c, Letter l) {
  add_image_term(slot, CoefPoly(c, target_aux_dim_), l);
}

void LinearSubstitution::set_param_image(Letter p, LinearImage image) {
  FREEALG_CHECK(is_param(p), "param image target must be a param letter");
  param_images_[p] = std::move(image);
}

const LinearImage& LinearSubstitution::image(int slot) const {
  FREEALG_CHECK(slot >= 1 && slot <= source_arity_, "substitution slot out of range");
  return images_[static_cast<std::size_t>(slot - 1)];
}

const LinearImage* LinearSubstitution::param_image(Letter p) const {
  auto it = param_images_.find(p);
  return it == param_images_.end() ? nullptr : &it->second;
}

namespace {

NCPoly substitute_impl(const NCPoly& f, const LinearSubstitution& sub,
                       bool eps_cap) {
  FREEALG_CHECK(f.arity() == sub.source_arity(), "arity mismatch");
  const int k = sub.target_aux_dim();
  FREEALG_CHECK(f.aux_dim() <= k, "auxiliary dimension may only grow");
  NCPoly result(sub.target_arity(), k);

  std::map<Letter, LinearImage> identity_images;
  auto identity_image = [&](Letter l) -> const LinearImage& {
    auto it = identity_images.find(l);
    if (it == identity_images.end()) {
      it = identity_images
               .emplace(l, LinearImage{{CoefPoly(Scalar(1), k), l}})
               .first;
    }
    return it->second;
  };

  std::vector<std::pair<Word, CoefPoly>> partial, next;
  for (const auto& [w, c] : f.terms()) {
    partial.clear();
    partial.emplace_back(Word{}, c.aux_dim() == k ? c : c.with_aux_dim(k));
    for (Letter l : w) {
      const LinearImage* img;
      if (is_active(l)) {
        img = &sub.image(active_index(l));
      } else if (is_param(l)) {
        const LinearImage* override_img = sub.param_image(l);
        img = override_img ? override_img : &identity_image(l);
      } else {
        img = &identity_image(l);
      }
      next.clear();
      for (const auto& [pw, pc] : partial) {
        for (const auto& [ic, il] : *img) {
          CoefPoly prod = eps_cap ? CoefPoly::mul_eps_capped(pc, ic) : pc * ic;
          if (prod.is_zero()) continue;
          Word nw = pw;
          nw.push_back(il);
          next.emplace_back(std::move(nw), std::move(prod));
        }
      }
      partial.swap(next);
      if (partial.empty()) break;
    }
    for (auto& [pw, pc] : partial) result.add_term(pw, pc);
  }
  return result;
}

}  // namespace

NCPoly substitute(const NCPoly& f, const LinearSubstitution& sub) {
  return substitute_impl(f, sub, false);
}

namespace detail {
NCPoly substitute_eps_capped(const NCPoly& f, const LinearSubstitution& sub) {
  return substitute_impl(f, sub, true);
}
}  // namespace detail

NCPoly multilinear_part(const NCPoly& f) {
  const int n = f.arity();
  NCPoly p(n, f.aux_dim());
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [w, c] : f.terms()) {
    if (static_cast<int>(w.size()) != n) continue;
    std::fill(count.begin(), count.end(), 0);
    bool ok = true;
    for (Letter l : w) {
      if (!is_active(l)) {
        ok = false;
        break;
      }
      ++count[static_cast<std::size_t>(l)];
    }
    if (!ok) continue;
    for (int i = 1; i <= n && ok; ++i) ok = count[static_cast<std::size_t>(i)] == 1;
    if (ok) p.add_term(w, c);
  }
  return p;
}

NCPoly eps_coefficient(const NCPoly& f) {
  NCPoly p(f.arity(), f.aux_dim());
  for (const auto& [w, c] : f.terms()) p.add_term(w, c.eps_extract());
  return p;
}

NCPoly simplex_integrate(const NCPoly& f) {
  NCPoly p(f.arity(), 0);
  for (const auto& [w, c] : f.terms()) p.add_term(w, c.simplex_integral());
  return p;
}

}  // namespace freealg
