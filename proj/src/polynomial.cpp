#include "lasserre/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "lasserre/univariate.hpp"

namespace lasserre {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("Polynomial: variable count out of range");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int j) {
  Polynomial p(nvars);
  p.terms_.emplace_back(Monomial::variable(nvars, j), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (m.nvars() != nvars) throw std::invalid_argument("Polynomial::monomial: nvars mismatch");
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const auto& [m, c] : terms)
    if (m.nvars() != nvars) throw std::invalid_argument("Polynomial::from_terms: nvars mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    Monomial m = terms_[i].first;
    Rational c = std::move(terms_[i].second);
    size_t j = i + 1;
    while (j < terms_.size() && terms_[j].first == m) c += terms_[j++].second;
    if (c != 0) terms_[out++] = {m, std::move(c)};
    i = j;
  }
  terms_.resize(out);
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(terms_.back().first.degree());
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

Rational Polynomial::constant_term() const { return coeff(Monomial(nvars_)); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial +: variable count mismatch");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      r.terms_.push_back(terms_[i++]);
    } else if (o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial *: variable count mismatch");
  Polynomial r(nvars_);
  if (terms_.empty() || o.terms_.empty()) return r;

  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;

  // k-way merge of the shifted copies of `big`; a shift by a fixed monomial
  // preserves graded-lex order, so each stream is sorted.
  struct Head {
    Monomial m;
    size_t stream;
    size_t pos;
  };
  auto cmp = [](const Head& a, const Head& b) { return b.m < a.m; };
  std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
  for (size_t s = 0; s < small.terms_.size(); ++s)
    heap.push({small.terms_[s].first.times(big.terms_[0].first), s, 0});

  r.terms_.reserve(big.terms_.size() + small.terms_.size());
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    Rational c = small.terms_[h.stream].second * big.terms_[h.pos].second;
    if (!r.terms_.empty() && r.terms_.back().first == h.m) {
      r.terms_.back().second += c;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else {
      r.terms_.emplace_back(h.m, std::move(c));
    }
    if (++h.pos < big.terms_.size()) {
      h.m = small.terms_[h.stream].first.times(big.terms_[h.pos].first);
      heap.push(h);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("Polynomial::derivative: variable index");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(var, e - 1);
    r.terms_.emplace_back(dm, c * e);
  }
  // differentiation preserves graded-lex order within the surviving terms
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

double Polynomial::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
  int maxdeg = degree().value_or(0);
  // per-variable power tables
  std::vector<std::vector<double>> pw(static_cast<size_t>(nvars_));
  for (int j = 0; j < nvars_; ++j) {
    auto& t = pw[static_cast<size_t>(j)];
    t.resize(static_cast<size_t>(maxdeg) + 1);
    t[0] = 1.0;
    for (int e = 1; e <= maxdeg; ++e) t[static_cast<size_t>(e)] = t[static_cast<size_t>(e - 1)] * x[static_cast<size_t>(j)];
  }
  // Neumaier compensated summation
  double sum = 0.0, comp = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int j = 0; j < nvars_; ++j) t *= pw[static_cast<size_t>(j)][static_cast<size_t>(m[j])];
    double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  return sum + comp;
}

Rational Polynomial::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
  int maxdeg = degree().value_or(0);
  std::vector<std::vector<Rational>> pw(static_cast<size_t>(nvars_));
  for (int j = 0; j < nvars_; ++j) {
    auto& t = pw[static_cast<size_t>(j)];
    t.resize(static_cast<size_t>(maxdeg) + 1);
    t[0] = 1;
    for (int e = 1; e <= maxdeg; ++e) t[static_cast<size_t>(e)] = t[static_cast<size_t>(e - 1)] * x[static_cast<size_t>(j)];
  }
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_; ++j)
      if (m[j] > 0) t *= pw[static_cast<size_t>(j)][static_cast<size_t>(m[j])];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("Polynomial::substitute: image count mismatch");
  int out_n = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != out_n) throw std::invalid_argument("Polynomial::substitute: image nvars mismatch");

  int maxdeg = 0;
  for (const auto& [m, c] : terms_)
    for (int j = 0; j < nvars_; ++j) maxdeg = std::max(maxdeg, m[j]);
  // power tables of the images
  std::vector<std::vector<Polynomial>> pw(static_cast<size_t>(nvars_));
  for (int j = 0; j < nvars_; ++j) {
    auto& t = pw[static_cast<size_t>(j)];
    t.push_back(Polynomial::constant(out_n, 1));
    for (int e = 1; e <= maxdeg; ++e) t.push_back(t.back() * images[static_cast<size_t>(j)]);
  }
  Polynomial r(out_n);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(out_n, c);
    for (int j = 0; j < nvars_; ++j)
      if (m[j] > 0) t = t * pw[static_cast<size_t>(j)][static_cast<size_t>(m[j])];
    r = r + t;
  }
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("Polynomial::str: name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest degree first for readability
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed_coeff = false;
    if (a != 1 || m.is_constant()) {
      os << to_string(a);
      printed_coeff = true;
    }
    bool any_var = false;
    for (int j = 0; j < nvars_; ++j) {
      if (m[j] == 0) continue;
      if (printed_coeff || any_var) os << "*";
      os << names[static_cast<size_t>(j)];
      if (m[j] > 1) os << "^" << m[j];
      any_var = true;
    }
  }
  return os.str();
}

std::string Polynomial::str() const {
  std::vector<std::string> names;
  for (int j = 0; j < nvars_; ++j) names.push_back("x" + std::to_string(j + 1));
  return str(names);
}

Polynomial compose_univariate(const Polynomial& g, const UnivariatePoly& h) {
  int n = g.nvars();
  if (h.is_zero()) return Polynomial(n);
  const auto& hc = h.coeffs();
  size_t d = hc.size() - 1;

  // Clear denominators: g = gz / ge with gz integer, and scale h's
  // coefficients to a shared denominator D so the whole Horner runs over Z.
  Integer ge(1);
  for (const auto& [m, c] : g.terms()) ge = lcm(ge, c.get_den());
  std::vector<std::pair<Monomial, Integer>> gz;
  gz.reserve(g.terms().size());
  for (const auto& [m, c] : g.terms()) {
    Integer v = c.get_num() * (ge / c.get_den());
    gz.emplace_back(m, std::move(v));
  }

  Integer D(1);
  for (const auto& c : hc) D = lcm(D, c.get_den());
  // h(g) = (1/(D*ge^d)) * sum_k (hc_k * D * ge^(d-k)) * gz^k, Horner style.
  std::vector<Integer> hz(hc.size());
  Integer gep(1);  // ge^(d-k), built from the top coefficient down
  for (size_t k = hc.size(); k-- > 0;) {
    hz[k] = hc[k].get_num() * (D / hc[k].get_den()) * gep;
    gep *= ge;
  }

  using ZTerm = std::pair<Monomial, Integer>;
  std::vector<ZTerm> acc;  // sorted graded-lex, no zeros
  acc.emplace_back(Monomial(n), hz[d]);
  if (acc.back().second == 0) acc.clear();

  std::vector<ZTerm> next;
  for (size_t k = d; k-- > 0;) {
    // next = acc * gz  (k-way merge over gz streams), then += hz[k]
    next.clear();
    struct Head {
      Monomial m;
      size_t stream, pos;
    };
    auto cmp = [](const Head& a, const Head& b) { return b.m < a.m; };
    std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
    for (size_t s = 0; s < gz.size() && !acc.empty(); ++s)
      heap.push({gz[s].first.times(acc[0].first), s, 0});
    while (!heap.empty()) {
      Head hd = heap.top();
      heap.pop();
      Integer c = gz[hd.stream].second * acc[hd.pos].second;
      if (!next.empty() && next.back().first == hd.m) {
        next.back().second += c;
        if (next.back().second == 0) next.pop_back();
      } else {
        next.emplace_back(hd.m, std::move(c));
      }
      if (++hd.pos < acc.size()) {
        hd.m = gz[hd.stream].first.times(acc[hd.pos].first);
        heap.push(hd);
      }
    }
    if (hz[k] != 0) {
      Monomial one(n);
      auto it = std::lower_bound(next.begin(), next.end(), one,
                                 [](const ZTerm& t, const Monomial& key) { return t.first < key; });
      if (it != next.end() && it->first == one) {
        it->second += hz[k];
        if (it->second == 0) next.erase(it);
      } else {
        next.insert(it, {one, hz[k]});
      }
    }
    acc.swap(next);
  }

  Integer denom = D * integer_pow(ge, static_cast<unsigned long>(d));
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    Rational q(std::move(c), denom);
    q.canonicalize();
    out.emplace_back(m, std::move(q));
  }
  Polynomial r(n);
  r.terms_ = std::move(out);
  return r;
}

std::vector<Monomial> monomial_basis(int nvars, Degree bound) {
  std::vector<Monomial> out;
  if (bound.is_neg_infinity() || bound.value() < 0) return out;
  int d = bound.value();
  std::vector<int> e(static_cast<size_t>(std::max(nvars, 1)), 0);
  // within a grade, exponents on earlier variables run from high to low
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      e[static_cast<size_t>(pos)] = remaining;
      out.push_back(Monomial(nvars, std::vector<int>(e.begin(), e.begin() + nvars)));
      e[static_cast<size_t>(pos)] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<size_t>(pos)] = k;
      self(self, pos + 1, remaining - k);
    }
    e[static_cast<size_t>(pos)] = 0;
  };
  for (int total = 0; total <= d; ++total) {
    if (nvars == 0) {
      if (total == 0) out.push_back(Monomial(0));
    } else {
      rec(rec, 0, total);
    }
  }
  return out;
}

long basis_size(int nvars, Degree bound) {
  if (bound.is_neg_infinity() || bound.value() < 0) return 0;
  // C(n + d, n)
  long n = nvars, d = bound.value();
  long r = 1;
  for (long i = 1; i <= n; ++i) r = r * (d + i) / i;
  return r;
}

}  // namespace lasserre
