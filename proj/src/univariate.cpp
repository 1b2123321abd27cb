#include "lasserre/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lasserre {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
  return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::variable() {
  return UnivariatePoly(std::vector<Rational>{Rational(0), Rational(1)});
}

Degree UnivariatePoly::degree() const {
  if (c_.empty()) return Degree::neg_infinity();
  return Degree(static_cast<int>(c_.size()) - 1);
}

Rational UnivariatePoly::leading_coeff() const {
  if (c_.empty()) throw std::logic_error("UnivariatePoly: leading coefficient of 0");
  return c_.back();
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const { return *this + (-o); }

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  if (c_.empty() || o.c_.empty()) return UnivariatePoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& c : r) c *= s;
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (c_.size() <= 1) return UnivariatePoly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
  return UnivariatePoly(std::move(r));
}

Rational UnivariatePoly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

double UnivariatePoly::eval(double t) const {
  double acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + to_double(c_[k]);
  return acc;
}

double UnivariatePoly::eval_bigfloat(double t, int prec_bits) const {
  mpf_class acc(0, static_cast<unsigned>(prec_bits));
  mpf_class tt(t, static_cast<unsigned>(prec_bits));
  mpf_class cf(0, static_cast<unsigned>(prec_bits));
  for (size_t k = c_.size(); k-- > 0;) {
    cf = c_[k];
    acc = acc * tt + cf;
  }
  return acc.get_d();
}

UnivariatePoly UnivariatePoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner: p(aT + b)
  UnivariatePoly arg(std::vector<Rational>{b, a});
  UnivariatePoly acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * arg + constant(c_[k]);
  return acc;
}

std::string UnivariatePoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
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
    if (a != 1 || k == 0) os << to_string(a);
    if (k >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_integer_poly(const UnivariatePoly& p) {
  Integer den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
  ztrim(z);
  return z;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g(0);
  for (const auto& c : p) g = gcd(g, c);
  if (g > 1)
    for (auto& c : p) c /= g;
}

ZPoly zderivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * static_cast<long>(k);
  return r;
}

// Pseudo-remainder over Z: returns r = lcb^steps * rem(a, b) together with
// the elimination step count, so callers can undo the multiplier's sign.
std::pair<ZPoly, long> pseudo_rem(ZPoly a, const ZPoly& b) {
  Integer lcb = b.back();
  long db = static_cast<long>(b.size()) - 1;
  long steps = 0;
  while (!a.empty() && static_cast<long>(a.size()) - 1 >= db) {
    long da = static_cast<long>(a.size()) - 1;
    Integer lca = a.back();
    // a <- lcb * a - lca * T^(da-db) * b  (leading terms cancel)
    ZPoly next(a.size() - 1, Integer(0));
    for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = lcb * a[i];
    for (size_t i = 0; i + 1 < b.size(); ++i)
      next[static_cast<size_t>(da - db) + i] -= lca * b[i];
    ztrim(next);
    a = std::move(next);
    ++steps;
  }
  return {std::move(a), steps};
}

int sign_of(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// sign of the integer polynomial at num/den with den > 0
int sign_at(const ZPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  // sum p_k num^k den^(d-k)
  Integer acc(0), npow(1);
  std::vector<Integer> dpow(p.size());
  dpow[p.size() - 1] = 1;
  for (size_t k = p.size() - 1; k-- > 0;) dpow[k] = dpow[k + 1] * den;
  for (size_t k = 0; k < p.size(); ++k) {
    acc += p[k] * npow * dpow[k];
    npow *= num;
  }
  return sign_of(acc);
}

int sign_at(const ZPoly& p, const Rational& t) {
  return sign_at(p, Integer(t.get_num()), Integer(t.get_den()));
}

}  // namespace

SturmChain::SturmChain(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  ZPoly p0 = to_integer_poly(p);
  make_primitive(p0);
  chain_.push_back(p0);
  ZPoly p1 = zderivative(p0);
  ztrim(p1);
  if (!p1.empty()) {
    make_primitive(p1);
    chain_.push_back(p1);
    while (true) {
      const ZPoly& a = chain_[chain_.size() - 2];
      const ZPoly& b = chain_.back();
      auto [r, steps] = pseudo_rem(a, b);
      if (r.empty()) break;
      // Sturm rule: next = -rem(a, b), up to a positive factor. r equals
      // lcb^steps * rem(a, b); undo a negative multiplier's sign.
      bool multiplier_negative = (b.back() < 0) && (steps % 2 == 1);
      for (auto& c : r) c = -c;
      if (multiplier_negative)
        for (auto& c : r) c = -c;
      make_primitive(r);
      chain_.push_back(std::move(r));
    }
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, t));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sign_of(p.back());
    if ((p.size() - 1) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sign_of(p.back()));
  return count_variations(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("SturmChain::count_roots: empty interval");
  if (a == b) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

int count_real_roots(const UnivariatePoly& p) { return SturmChain(p).count_roots(); }

int count_real_roots(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  return SturmChain(p).count_roots(a, b);
}

bool positive_on_interval(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  if (a > b) throw std::invalid_argument("positive_on_interval: empty interval");
  if (p.is_zero()) return false;
  if (p.eval(a) <= 0) return false;
  if (a == b) return true;
  if (p.eval(b) <= 0) return false;
  // no roots in (a, b]: endpoints positive => strictly positive throughout
  return SturmChain(p).count_roots(a, b) == 0;
}

Rational root_bound(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  Rational lc = abs(p.leading_coeff());
  Rational m(0);
  for (const auto& c : p.coeffs()) m = std::max(m, Rational(abs(c)));
  return Rational(1) + m / lc;
}

std::pair<UnivariatePoly, UnivariatePoly> poly_divmod(const UnivariatePoly& a,
                                                      const UnivariatePoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  std::vector<Rational> r = a.coeffs();
  long db = b.degree().value();
  if (static_cast<long>(r.size()) - 1 < db) return {UnivariatePoly(), a};
  std::vector<Rational> q(r.size() - static_cast<size_t>(db), Rational(0));
  Rational lcb = b.leading_coeff();
  for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
    Rational f = r[static_cast<size_t>(k)] / lcb;
    if (f == 0) continue;
    q[static_cast<size_t>(k - db)] = f;
    for (long j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = poly_divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.leading_coeff());
}

std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  UnivariatePoly f = p.scaled(1 / p.leading_coeff());
  std::vector<UnivariatePoly> out;
  if (f.degree().value() == 0) return out;
  UnivariatePoly df = f.derivative();
  UnivariatePoly a = poly_gcd(f, df);
  UnivariatePoly b = poly_divmod(f, a).first;
  UnivariatePoly c = poly_divmod(df, a).first;
  UnivariatePoly d = c - b.derivative();
  while (!(b.degree() == Degree(0))) {
    UnivariatePoly pk = poly_gcd(b, d);
    out.push_back(pk);
    b = poly_divmod(b, pk).first;
    c = poly_divmod(d, pk).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const UnivariatePoly& p,
                                                         const Rational& a, const Rational& b) {
  SturmChain chain(p);
  std::vector<std::pair<Rational, Rational>> out;
  // recursively bisect (lo, hi]
  auto rec = [&](auto&& self, const Rational& lo, const Rational& hi) -> void {
    int c = chain.count_roots(lo, hi);
    if (c == 0) return;
    if (c == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
  };
  rec(rec, a, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Rational, Rational> refine_root(const SturmChain& chain, Rational lo, Rational hi,
                                          const Rational& width) {
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (chain.count_roots(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

RangeBounds bound_range(const UnivariatePoly& p, const Rational& a, const Rational& b,
                        const Rational& slack) {
  if (a > b) throw std::invalid_argument("bound_range: empty interval");
  if (p.degree().value_or(0) == 0) {
    Rational v = p.eval(a);
    return {v, v};
  }
  UnivariatePoly dp = p.derivative();
  // coarse bound for |p'| on [a, b]
  Rational big = std::max(Rational(abs(a)), Rational(abs(b)));
  if (big < 1) big = 1;
  Rational lip(0);
  {
    Rational pw(1);
    for (const auto& c : dp.coeffs()) {
      lip += abs(c) * pw;
      pw *= big;
    }
  }
  if (lip == 0) lip = 1;

  // nudge outward so endpoint roots of p' do not confuse the half-open counts
  Rational w = (b - a) / 1024;
  if (w == 0) w = 1;
  std::vector<std::pair<Rational, Rational>> crit;
  if (!dp.is_zero()) crit = isolate_roots(dp, a - w, b);

  std::optional<SturmChain> dchain;
  if (!dp.is_zero()) dchain.emplace(dp);

  // breakpoints: interval endpoints clipped to [a, b]
  std::vector<Rational> breaks{a, b};
  std::vector<std::pair<Rational, Rational>> fuzzy;  // refined critical intervals
  Rational target = slack / lip;
  for (auto [lo, hi] : crit) {
    auto [rl, rh] = refine_root(*dchain, lo, hi, target);
    rl = std::max(rl, a);
    rh = std::min(rh, b);
    if (rl > rh) continue;
    breaks.push_back(rl);
    breaks.push_back(rh);
    fuzzy.emplace_back(rl, rh);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  RangeBounds rb{p.eval(a), p.eval(a)};
  auto absorb = [&](const Rational& lo, const Rational& hi) {
    rb.lower = std::min(rb.lower, lo);
    rb.upper = std::max(rb.upper, hi);
  };
  // p is monotone between consecutive breakpoints outside the fuzzy windows,
  // so endpoint values are exact range bounds there
  for (const auto& t : breaks) {
    Rational v = p.eval(t);
    absorb(v, v);
  }
  for (const auto& [lo, hi] : fuzzy) {
    Rational vl = p.eval(lo), vh = p.eval(hi);
    Rational pad = lip * (hi - lo);
    absorb(std::min(vl, vh) - pad, std::max(vl, vh) + pad);
  }
  return rb;
}

}  // namespace lasserre
