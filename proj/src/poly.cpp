#include <itop/poly.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace itop {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is always a binomial coefficient here
  }
  return r;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({Int(1)}); }

IntPolynomial IntPolynomial::x_power(std::size_t k) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_minus_x_pow(std::size_t k) {
  IntPolynomial r = one();
  const IntPolynomial f({Int(1), Int(-1)});
  for (std::size_t i = 0; i < k; ++i) r = r * f;
  return r;
}

Int IntPolynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : Int(0);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + (-o);
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return IntPolynomial();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const Int& s) const {
  std::vector<Int> r = c_;
  for (auto& x : r) x *= s;
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k == 0) {
      if (c_[k] < 0) os << "-";
    } else {
      os << (c_[k] < 0 ? "-" : "+");
    }
    os << boost::multiprecision::abs(c_[k]) << "x^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------
// PowerSeriesTrunc

PowerSeriesTrunc::PowerSeriesTrunc(std::size_t order)
    : c_(order + 1, Rat(0)) {}

PowerSeriesTrunc::PowerSeriesTrunc(std::size_t order, std::vector<Rat> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.size() > order + 1)
    throw std::invalid_argument("PowerSeriesTrunc: too many coefficients");
  c_.resize(order + 1, Rat(0));
}

PowerSeriesTrunc PowerSeriesTrunc::from_poly(const IntPolynomial& p,
                                             std::size_t order) {
  PowerSeriesTrunc s(order);
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k)
    s.c_[k] = Rat(p.coeffs()[k]);
  return s;
}

Rat PowerSeriesTrunc::coeff(std::size_t k) const {
  if (k >= c_.size())
    throw std::out_of_range("PowerSeriesTrunc: coefficient beyond order");
  return c_[k];
}

void PowerSeriesTrunc::check_same_order(const PowerSeriesTrunc& o) const {
  if (c_.size() != o.c_.size())
    throw std::invalid_argument(
        "PowerSeriesTrunc: arithmetic on series of different orders");
}

PowerSeriesTrunc PowerSeriesTrunc::operator+(const PowerSeriesTrunc& o) const {
  check_same_order(o);
  PowerSeriesTrunc r(order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

PowerSeriesTrunc PowerSeriesTrunc::operator-(const PowerSeriesTrunc& o) const {
  check_same_order(o);
  PowerSeriesTrunc r(order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

PowerSeriesTrunc PowerSeriesTrunc::operator*(const PowerSeriesTrunc& o) const {
  check_same_order(o);
  PowerSeriesTrunc r(order());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

bool PowerSeriesTrunc::is_integral() const {
  for (const auto& x : c_)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

IntPolynomial PowerSeriesTrunc::to_int_poly() const {
  if (!is_integral())
    throw std::domain_error("PowerSeriesTrunc: non-integral coefficients");
  std::vector<Int> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(boost::multiprecision::numerator(x));
  return IntPolynomial(std::move(r));
}

std::string PowerSeriesTrunc::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k == 0) {
      if (c_[k] < 0) os << "-";
    } else {
      os << (c_[k] < 0 ? "-" : "+");
    }
    os << boost::multiprecision::abs(c_[k]) << "x^" << k;
  }
  os << " (order " << order() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeriesTrunc& s) {
  return os << s.to_string();
}

PowerSeriesTrunc series_from_poly_over_power(const IntPolynomial& p,
                                             std::size_t n,
                                             std::size_t order) {
  std::vector<Rat> c(order + 1, Rat(0));
  for (std::size_t s = 0; s <= order; ++s) {
    Int acc = 0;
    for (std::size_t k = 0; k <= s && k < p.coeffs().size(); ++k) {
      if (n == 0) {
        if (k == s) acc += p.coeffs()[k];
      } else {
        acc += p.coeffs()[k] * binomial(static_cast<long>(s - k + n - 1),
                                        static_cast<long>(n - 1));
      }
    }
    c[s] = Rat(acc);
  }
  return PowerSeriesTrunc(order, std::move(c));
}

// ---------------------------------------------------------------------------
// LaurentPoly2

void LaurentPoly2::add_term(long vexp, long zexp, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(zexp, vexp);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::one() { return monomial(Int(1), 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(const Int& c, long vexp, long zexp) {
  LaurentPoly2 p;
  p.add_term(vexp, zexp, c);
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(const std::vector<Term>& terms) {
  LaurentPoly2 p;
  for (const auto& t : terms) p.add_term(t.v, t.z, t.c);
  return p;
}

std::vector<LaurentPoly2::Term> LaurentPoly2::terms() const {
  std::vector<Term> r;
  r.reserve(t_.size());
  for (const auto& [k, c] : t_) r.push_back(Term{k.second, k.first, c});
  return r;
}

Int LaurentPoly2::coeff(long vexp, long zexp) const {
  auto it = t_.find(std::make_pair(zexp, vexp));
  return it == t_.end() ? Int(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.second, k.first, c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  return *this + (-o);
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_)
      r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned long e) const {
  LaurentPoly2 r = one();
  for (unsigned long i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentPoly2 LaurentPoly2::coeff_of_z(long zexp) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : t_)
    if (k.first == zexp) r.add_term(k.second, 0, c);
  return r;
}

std::optional<long> LaurentPoly2::max_z_degree() const {
  if (t_.empty()) return std::nullopt;
  // keys are ordered with z descending, so the first entry has the max z
  return t_.begin()->first.first;
}

std::optional<long> LaurentPoly2::min_z_degree() const {
  if (t_.empty()) return std::nullopt;
  return t_.rbegin()->first.first;
}

std::string LaurentPoly2::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    long zexp = k.first, vexp = k.second;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    os << boost::multiprecision::abs(c);
    if (vexp == 1)
      os << "v";
    else if (vexp != 0)
      os << "v^" << vexp;
    if (zexp == 1)
      os << "z";
    else if (zexp != 0)
      os << "z^" << zexp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) {
  return os << p.to_string();
}

}  // namespace itop
