#include "appellkit/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace appellkit {

namespace {

thread_local int t_degree_cap = kDefaultDegreeCap;

int monomial_degree(const Monomial& m) { return static_cast<int>(m[0] + m[1] + m[2] + m[3]); }

void check_cap(int degree) {
  if (degree > degree_cap()) {
    throw DegreeCapExceeded("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                            std::to_string(degree_cap()));
  }
}

QPoly left_unit_times(int unit, const QPoly& p) {
  return QuaternionExact::unit(unit) * p;
}

}  // namespace

int degree_cap() { return t_degree_cap; }

ScopedDegreeCap::ScopedDegreeCap(int cap) : previous_(t_degree_cap) {
  if (cap < 0) {
    throw DomainError("degree cap must be nonnegative");
  }
  t_degree_cap = cap;
}

ScopedDegreeCap::~ScopedDegreeCap() { t_degree_cap = previous_; }

QPoly::QPoly(const QuaternionExact& constant) { add_term({0, 0, 0, 0}, constant); }

QPoly QPoly::monomial(const Monomial& m, const QuaternionExact& c) {
  check_cap(monomial_degree(m));
  QPoly p;
  p.add_term(m, c);
  return p;
}

QPoly QPoly::variable(int l) {
  if (l < 0 || l > 3) {
    throw IndexError("variable index must be 0..3");
  }
  Monomial m{0, 0, 0, 0};
  m[static_cast<std::size_t>(l)] = 1;
  return monomial(m, QuaternionExact(Rational(1)));
}

int QPoly::degree() const {
  int d = kZeroPolyDegree;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, monomial_degree(m));
  }
  return d;
}

QuaternionExact QPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuaternionExact() : it->second;
}

bool QPoly::depends_on(int var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& t) { return t.first[static_cast<std::size_t>(var)] > 0; });
}

void QPoly::add_term(const Monomial& m, const QuaternionExact& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

QPoly operator-(const QPoly& a) {
  QPoly r;
  for (const auto& [m, c] : a.terms_) {
    r.terms_.emplace(m, -c);
  }
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) {
    return r;
  }
  check_cap(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]}, ca * cb);
    }
  }
  return r;
}

QPoly operator*(const QuaternionExact& c, const QPoly& p) {
  QPoly r;
  for (const auto& [m, pc] : p.terms_) {
    r.add_term(m, c * pc);
  }
  return r;
}

QPoly operator*(const QPoly& p, const QuaternionExact& c) {
  QPoly r;
  for (const auto& [m, pc] : p.terms_) {
    r.add_term(m, pc * c);
  }
  return r;
}

QPoly operator*(const Rational& s, const QPoly& p) {
  QPoly r;
  if (s == 0) {
    return r;
  }
  for (const auto& [m, pc] : p.terms_) {
    r.terms_.emplace(m, pc * s);
  }
  return r;
}

QPoly QPoly::partial(int var) const {
  const auto v = static_cast<std::size_t>(var);
  QPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) {
      continue;
    }
    Monomial dm = m;
    dm[v] -= 1;
    r.add_term(dm, c * Rational(m[v]));
  }
  return r;
}

QPoly pow(const QPoly& p, unsigned n) {
  QPoly r(QuaternionExact(Rational(1)));
  for (unsigned i = 0; i < n; ++i) {
    r = r * p;
  }
  return r;
}

QPoly embed_q() {
  QPoly q;
  for (int l = 0; l < 4; ++l) {
    Monomial m{0, 0, 0, 0};
    m[static_cast<std::size_t>(l)] = 1;
    q.add_term(m, QuaternionExact::unit(l));
  }
  return q;
}

QPoly embed_qbar() {
  QPoly q;
  for (int l = 0; l < 4; ++l) {
    Monomial m{0, 0, 0, 0};
    m[static_cast<std::size_t>(l)] = 1;
    q.add_term(m, l == 0 ? QuaternionExact::unit(0) : -QuaternionExact::unit(l));
  }
  return q;
}

QPoly embed_vec() {
  QPoly q;
  for (int l = 1; l < 4; ++l) {
    Monomial m{0, 0, 0, 0};
    m[static_cast<std::size_t>(l)] = 1;
    q.add_term(m, QuaternionExact::unit(l));
  }
  return q;
}

QPoly vector_dirac(const QPoly& f) {
  QPoly r;
  for (int l = 1; l < 4; ++l) {
    r += left_unit_times(l, f.partial(l));
  }
  return r;
}

QPoly fueter_operator(const QPoly& f) { return f.partial(0) + vector_dirac(f); }

QPoly hyper_derivative(const QPoly& f) {
  return make_rational(1, 2) * (f.partial(0) - vector_dirac(f));
}

QPoly laplacian4(const QPoly& f) {
  QPoly r;
  for (int l = 0; l < 4; ++l) {
    r += f.partial(l).partial(l);
  }
  return r;
}

QPoly ck_extension(const QPoly& h) {
  if (h.depends_on(0)) {
    throw NonRestrictedInput("CK extension needs data on the hyperplane x0 = 0");
  }
  QPoly result;
  QPoly current = h;
  Rational factor(1);  // (-1)^j / j!
  for (unsigned j = 0; !current.is_zero(); ++j) {
    for (const auto& [m, c] : current.terms()) {
      result.add_term({m[0] + j, m[1], m[2], m[3]}, c * factor);
    }
    current = vector_dirac(current);
    factor = -factor / Rational(j + 1);
  }
  return result;
}

QPoly restrict_x0(const QPoly& f) {
  QPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m[0] == 0) {
      r.add_term(m, c);
    }
  }
  return r;
}

std::vector<QuaternionExact> slice_taylor_real(const QPoly& f) {
  std::vector<QuaternionExact> coeffs;
  for (const auto& [m, c] : f.terms()) {
    if (m[1] != 0 || m[2] != 0 || m[3] != 0) {
      continue;
    }
    if (coeffs.size() <= m[0]) {
      coeffs.resize(m[0] + 1);
    }
    coeffs[m[0]] += c;
  }
  return coeffs;
}

QuaternionExact eval(const QPoly& f, const QuaternionExact& q) {
  QuaternionExact acc;
  for (const auto& [m, c] : f.terms()) {
    Rational v(1);
    for (std::size_t l = 0; l < 4; ++l) {
      for (unsigned e = 0; e < m[l]; ++e) {
        v *= q[static_cast<int>(l)];
      }
    }
    acc += c * v;
  }
  return acc;
}

QuaternionFloat eval(const QPoly& f, const QuaternionFloat& q) { return FloatPoly(f)(q); }

FloatPoly::FloatPoly(const QPoly& p) {
  terms_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    terms_.emplace_back(m, to_float(c));
    degree_ = std::max(degree_, monomial_degree(m));
  }
}

QuaternionFloat FloatPoly::operator()(const QuaternionFloat& q) const {
  std::array<std::vector<double>, 4> powers;
  for (int l = 0; l < 4; ++l) {
    auto& pw = powers[static_cast<std::size_t>(l)];
    pw.resize(static_cast<std::size_t>(degree_) + 1);
    pw[0] = 1.0;
    for (std::size_t e = 1; e < pw.size(); ++e) {
      pw[e] = pw[e - 1] * q[l];
    }
  }
  QuaternionFloat acc;
  for (const auto& [m, c] : terms_) {
    const double v = powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]] * powers[3][m[3]];
    acc += c * v;
  }
  return acc;
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    arr.push_back({{"exponents", {m[0], m[1], m[2], m[3]}},
                   {"coeff", {c.x0.get_str(), c.x1.get_str(), c.x2.get_str(), c.x3.get_str()}}});
  }
  return arr;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw DomainError("QPoly JSON must be an array of terms");
  }
  QPoly p;
  for (const auto& term : j) {
    const auto& e = term.at("exponents");
    const auto& c = term.at("coeff");
    if (e.size() != 4 || c.size() != 4) {
      throw DomainError("QPoly JSON term needs 4 exponents and 4 coefficient strings");
    }
    Monomial m{e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<unsigned>(),
               e[3].get<unsigned>()};
    QuaternionExact q;
    for (int l = 0; l < 4; ++l) {
      Rational r;
      if (r.set_str(c[static_cast<std::size_t>(l)].get<std::string>(), 10) != 0) {
        throw DomainError("malformed rational in QPoly JSON");
      }
      r.canonicalize();
      q[l] = r;
    }
    p.add_term(m, q);
  }
  return p;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << to_string(c);
    for (std::size_t l = 0; l < 4; ++l) {
      if (m[l] > 0) {
        os << "*x" << l;
        if (m[l] > 1) {
          os << "^" << m[l];
        }
      }
    }
  }
  return os.str();
}

}  // namespace appellkit
