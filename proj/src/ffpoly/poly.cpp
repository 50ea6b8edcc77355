#include "ffm/poly.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "ffm/errors.hpp"

namespace ffm {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw UsageError("polynomial operands over different fields (q = " + std::to_string(a.q()) +
                     " vs q = " + std::to_string(b.q()) + ")");
  }
}

Poly::Coeffs copy_coeffs(const Poly& a) {
  auto c = a.coeffs();
  return Poly::Coeffs(c.begin(), c.end());
}

// In-place remainder of a (given as raw coefficients) by monic-or-not b.
// quot receives the quotient when non-null.
void reduce_in_place(Poly::Coeffs& a, const Poly& b, const FieldSpec& f, Poly::Coeffs* quot) {
  const int db = b.degree();
  const auto bc = b.coeffs();
  const std::uint32_t q = f.q();
  const std::uint32_t lead_inv = b.lead() == 1 ? 1 : f.inv(b.lead());
  int da = static_cast<int>(a.size()) - 1;
  while (da >= 0 && a[da] == 0) --da;
  if (quot) quot->assign(da >= db ? da - db + 1 : 0, 0);
  for (int i = da; i >= db; --i) {
    std::uint32_t c = a[i];
    if (c == 0) continue;
    c = f.mul(c, lead_inv);
    if (quot) (*quot)[i - db] = c;
    const std::uint64_t neg_c = q - c;
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + neg_c * bc[j]) % q);
    }
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(std::max(db, 0))));
}

}  // namespace

Poly::Poly(FieldSpec field, std::span<const std::int64_t> coeffs) : field_(field) {
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(field_.reduce(v));
  normalize();
}

Poly::Poly(FieldSpec field, std::initializer_list<std::int64_t> coeffs)
    : Poly(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

Poly::Poly(FieldSpec field, Coeffs coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.q();
  normalize();
}

Poly Poly::constant(FieldSpec f, std::uint32_t c) {
  return Poly(f, Coeffs{c});
}

Poly Poly::monomial(FieldSpec f, int n, std::uint32_t c) {
  Coeffs v(static_cast<std::size_t>(n) + 1, 0);
  v[n] = c;
  return Poly(f, std::move(v));
}

void Poly::normalize() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t Poly::operator()(std::uint32_t x) const noexcept {
  std::uint64_t acc = 0;
  const std::uint32_t q = field_.q();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % q;
  return static_cast<std::uint32_t>(acc);
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  Poly::Coeffs r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  Poly::Coeffs r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(r));
}

Poly operator-(const Poly& a) {
  Poly::Coeffs r = copy_coeffs(a);
  for (auto& v : r) v = a.field().neg(v);
  return Poly(a.field(), std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  const std::uint64_t q = a.q();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  // Lazy reduction: accumulate raw products, reduce once the running sum
  // could overflow. Products are < 2^32, so 2^31 of them never overflow.
  boost::container::small_vector<std::uint64_t, 48> acc(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(ac[i]) * bc[j];
    if ((i & 0x3f) == 0x3f) {
      for (auto& v : acc) v %= q;
    }
  }
  Poly::Coeffs r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint32_t>(acc[k] % q);
  return Poly(a.field(), std::move(r));
}

Poly scale(const Poly& a, std::uint32_t c) {
  Poly::Coeffs r = copy_coeffs(a);
  for (auto& v : r) v = a.field().mul(v, c);
  return Poly(a.field(), std::move(r));
}

DivRem divrem(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly::Coeffs r = copy_coeffs(a);
  Poly::Coeffs quo;
  reduce_in_place(r, b, a.field(), &quo);
  return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return a;
  Poly::Coeffs r = copy_coeffs(a);
  reduce_in_place(r, b, a.field(), nullptr);
  return Poly(a.field(), std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quot; }

Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly::zero(a.field());
  Poly::Coeffs r(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) r[i - 1] = a.field().mul(a.coeff(i), static_cast<std::uint32_t>(i % a.q()));
  return Poly(a.field(), std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  require_same_field(a, m);
  return (a * b) % m;
}

Poly powmod(const Poly& a, const BigInt& e, const Poly& m) {
  require_same_field(a, m);
  if (e.sign() < 0) throw UsageError("powmod: negative exponent");
  Poly result = Poly::one(a.field()) % m;
  if (e == 0) return result;
  Poly base = a % m;
  const auto bits = static_cast<long>(boost::multiprecision::msb(e));
  for (long i = bits; i >= 0; --i) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, base, m);
  }
  return result;
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  require_same_field(a, m);
  Poly result = Poly::one(a.field()) % m;
  Poly base = a % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coeffs()[i]);
  }
  return out;
}

Poly parse_poly(FieldSpec field, std::string_view text, bool require_monic) {
  Poly::Coeffs c;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("malformed polynomial coefficient '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    if (v >= field.q()) {
      throw UsageError("coefficient " + std::to_string(v) + " is not reduced mod q = " + std::to_string(field.q()));
    }
    c.push_back(static_cast<std::uint32_t>(v));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  Poly p(field, std::move(c));
  if (require_monic && !p.is_monic()) {
    throw UsageError("polynomial '" + std::string(text) + "' is not monic");
  }
  return p;
}

std::uint64_t monic_index(const Poly& f) {
  if (!f.is_monic()) throw UsageError("monic_index of a non-monic polynomial");
  std::uint64_t idx = 0;
  for (int i = f.degree() - 1; i >= 0; --i) idx = idx * f.q() + f.coeff(i);
  return idx;
}

Poly monic_from_index(FieldSpec field, int degree, std::uint64_t index) {
  Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c[i] = static_cast<std::uint32_t>(index % field.q());
    index /= field.q();
  }
  c[degree] = 1;
  return Poly(field, std::move(c));
}

std::uint64_t monic_count(FieldSpec field, int degree) {
  if (degree < 0) throw UsageError("negative degree");
  std::uint64_t n = 1;
  for (int i = 0; i < degree; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / field.q()) {
      throw UsageError("q^n does not fit in 64 bits");
    }
    n *= field.q();
  }
  return n;
}

MonicRange::MonicRange(FieldSpec field, int degree)
    : field_(field), degree_(degree), count_(monic_count(field, degree)) {}

MonicRange::iterator MonicRange::begin() const {
  return iterator(Poly::monomial(field_, degree_), 0);
}

MonicRange::iterator MonicRange::end() const {
  return iterator(Poly::zero(field_), count_);
}

MonicRange::iterator& MonicRange::iterator::operator++() {
  ++index_;
  // Odometer increment on coefficients below the leading 1.
  Poly::Coeffs c(cur_.coeffs().begin(), cur_.coeffs().end());
  const std::uint32_t q = cur_.q();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (++c[i] < q) break;
    c[i] = 0;
  }
  cur_ = Poly(cur_.field(), std::move(c));
  return *this;
}

}  // namespace ffm
