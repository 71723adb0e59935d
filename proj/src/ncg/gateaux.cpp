#include "ncg/gateaux.hpp"

#include "ncg/error.hpp"

namespace ncg {

namespace {

constexpr std::size_t kMaxFactorial = 20;

const Algebra* word_algebra(const std::vector<Factor>& word) {
  for (const auto& f : word)
    if (const auto* c = std::get_if<Coef>(&f)) return &c->value.algebra();
  return nullptr;
}

// Product of the factors in [first, last) with Var → x and Slot(i) → hs[i−1].
Element evaluate_word(std::span<const Factor> word, const Element& x, std::span<const Element> hs) {
  Element acc = Element::unit(x.algebra());
  bool started = false;
  for (const auto& f : word) {
    const Element* value = nullptr;
    if (const auto* c = std::get_if<Coef>(&f)) {
      value = &c->value;
    } else if (std::holds_alternative<Var>(f)) {
      value = &x;
    } else {
      value = &hs[std::get<Slot>(f).index - 1];
    }
    acc = started ? acc * *value : *value;
    started = true;
  }
  return acc;
}

// Factors are either coefficients or "the variable" of the target polynomial.
NcPolynomial word_to_polynomial(const Algebra& algebra, const std::vector<std::optional<Element>>& word) {
  std::vector<Element> coeffs;
  Element pending = Element::unit(algebra);
  for (const auto& f : word) {
    if (f) {
      pending = pending * *f;
    } else {
      coeffs.push_back(pending);
      pending = Element::unit(algebra);
    }
  }
  coeffs.push_back(pending);
  NcPolynomial p(algebra);
  p.add_term(Monomial(std::move(coeffs)));
  return p;
}

}  // namespace

std::optional<SlottedTerm> SlottedTerm::make(std::vector<Factor> word) {
  if (word.empty()) throw Error(ErrorCode::invalid_argument, "slotted term needs at least one factor");
  std::vector<Factor> out;
  out.reserve(word.size());
  for (auto& f : word) {
    if (auto* c = std::get_if<Coef>(&f)) {
      if (c->value.is_zero()) return std::nullopt;
      if (!out.empty()) {
        if (auto* prev = std::get_if<Coef>(&out.back())) {
          prev->value = prev->value * c->value;
          if (prev->value.is_zero()) return std::nullopt;
          continue;
        }
      }
    } else if (const auto* s = std::get_if<Slot>(&f); s && s->index == 0) {
      throw Error(ErrorCode::invalid_argument, "slot indices start at 1");
    }
    out.push_back(std::move(f));
  }
  if (const Algebra* alg = word_algebra(out); alg && out.size() > 1) {
    const Element one = Element::unit(*alg);
    std::erase_if(out, [&](const Factor& f) {
      const auto* c = std::get_if<Coef>(&f);
      return c && c->value == one;
    });
  }
  return SlottedTerm(std::move(out));
}

std::size_t SlottedTerm::var_count() const noexcept {
  std::size_t n = 0;
  for (const auto& f : word_) n += std::holds_alternative<Var>(f);
  return n;
}

void SlottedForm::add_term(SlottedTerm term) {
  for (const auto& f : term.word()) {
    if (const auto* c = std::get_if<Coef>(&f)) require_same_algebra(algebra_, c->value.algebra());
    if (const auto* s = std::get_if<Slot>(&f); s && s->index > order_)
      throw Error(ErrorCode::arity, "slot index exceeds form order");
  }
  terms_.push_back(std::move(term));
}

std::string SlottedForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) out += " + ";
    const auto& word = terms_[t].word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k) out += '*';
      if (const auto* c = std::get_if<Coef>(&word[k])) {
        out += c->value.to_string();
      } else if (std::holds_alternative<Var>(word[k])) {
        out += 'x';
      } else {
        out += 'h' + std::to_string(std::get<Slot>(word[k]).index);
      }
    }
  }
  return out;
}

SlottedForm lift(const NcPolynomial& p) {
  SlottedForm form(p.algebra(), 0);
  for (const auto& m : p.terms()) {
    std::vector<Factor> word;
    word.reserve(2 * m.coeffs().size());
    for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
      if (k) word.emplace_back(Var{});
      word.emplace_back(Coef{m.coeffs()[k]});
    }
    if (auto term = SlottedTerm::make(std::move(word))) form.add_term(std::move(*term));
  }
  return form;
}

SlottedForm differentiate(const SlottedForm& form) {
  const std::size_t next = form.order() + 1;
  SlottedForm out(form.algebra(), next);
  for (const auto& term : form.terms()) {
    const auto& word = term.word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (!std::holds_alternative<Var>(word[k])) continue;
      std::vector<Factor> copy = word;
      copy[k] = Slot{next};
      if (auto t = SlottedTerm::make(std::move(copy))) out.add_term(std::move(*t));
    }
  }
  return out;
}

SlottedForm derivative(const NcPolynomial& p, std::size_t order) {
  SlottedForm form = lift(p);
  for (std::size_t k = 0; k < order; ++k) form = differentiate(form);
  return form;
}

Element apply(const SlottedForm& form, const Element& x, std::span<const Element> hs) {
  require_same_algebra(form.algebra(), x.algebra());
  if (hs.size() != form.order())
    throw Error(ErrorCode::arity, "form of order " + std::to_string(form.order()) + " applied to " +
                                      std::to_string(hs.size()) + " increments");
  for (const auto& h : hs) require_same_algebra(form.algebra(), h.algebra());
  Element sum = Element::zero(form.algebra());
  for (const auto& term : form.terms()) sum += evaluate_word(term.word(), x, hs);
  return sum;
}

Element apply_diag(const SlottedForm& form, const Element& x, const Element& h) {
  require_same_algebra(form.algebra(), h.algebra());
  const std::vector<Element> hs(form.order(), h);
  return apply(form, x, hs);
}

NcPolynomial to_polynomial(const SlottedForm& form) {
  if (form.order() != 0) throw Error(ErrorCode::arity, "only order-0 forms convert to polynomials");
  NcPolynomial p(form.algebra());
  for (const auto& term : form.terms()) {
    std::vector<std::optional<Element>> word;
    for (const auto& f : term.word()) {
      if (const auto* c = std::get_if<Coef>(&f)) word.emplace_back(c->value);
      else word.emplace_back(std::nullopt);
    }
    p = p + word_to_polynomial(form.algebra(), word);
  }
  return p;
}

NcPolynomial diagonal_polynomial(const SlottedForm& form, const Element& x) {
  require_same_algebra(form.algebra(), x.algebra());
  NcPolynomial p(form.algebra());
  for (const auto& term : form.terms()) {
    std::vector<std::optional<Element>> word;
    for (const auto& f : term.word()) {
      if (const auto* c = std::get_if<Coef>(&f)) word.emplace_back(c->value);
      else if (std::holds_alternative<Var>(f)) word.emplace_back(x);
      else word.emplace_back(std::nullopt);
    }
    p = p + word_to_polynomial(form.algebra(), word);
  }
  return p;
}

std::vector<std::pair<SlottedTerm, std::size_t>> diagonal_words(const SlottedForm& form) {
  std::vector<std::pair<SlottedTerm, std::size_t>> groups;
  for (const auto& term : form.terms()) {
    std::vector<Factor> word = term.word();
    for (auto& f : word)
      if (std::holds_alternative<Slot>(f)) f = Slot{1};
    SlottedTerm collapsed = *SlottedTerm::make(std::move(word));
    bool found = false;
    for (auto& [w, count] : groups) {
      if (w == collapsed) {
        ++count;
        found = true;
        break;
      }
    }
    if (!found) groups.emplace_back(std::move(collapsed), 1);
  }
  return groups;
}

TensorLinMap first_derivative_as_linmap(const NcPolynomial& p, const Element& x) {
  require_same_algebra(p.algebra(), x.algebra());
  const SlottedForm d = derivative(p, 1);
  TensorLinMap map(p.algebra());
  for (const auto& term : d.terms()) {
    const auto& word = term.word();
    std::size_t slot = 0;
    while (!std::holds_alternative<Slot>(word[slot])) ++slot;
    const std::span<const Factor> all(word);
    const Element left = slot == 0 ? Element::unit(x.algebra()) : evaluate_word(all.first(slot), x, {});
    const Element right = slot + 1 == word.size() ? Element::unit(x.algebra())
                                                  : evaluate_word(all.subspan(slot + 1), x, {});
    map.add_term(left, right);
  }
  return map;
}

NcPolynomial substitute(const NcPolynomial& g, const NcPolynomial& f) {
  require_same_algebra(g.algebra(), f.algebra());
  NcPolynomial out(g.algebra());
  for (const auto& m : g.terms()) {
    NcPolynomial acc = NcPolynomial::constant(m.coeffs().front());
    for (std::size_t k = 1; k < m.coeffs().size(); ++k)
      acc = acc * f * NcPolynomial::constant(m.coeffs()[k]);
    out = out + acc;
  }
  return out;
}

double factorial(std::size_t n) {
  if (n > kMaxFactorial) throw Error(ErrorCode::invalid_argument, "factorial limited to n <= 20");
  std::uint64_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return static_cast<double>(r);
}

}  // namespace ncg
