#include "nodal/bell.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "nodal/partitions.hpp"

namespace nodal {

// --- SparsePoly -------------------------------------------------------------

SparsePoly::Exponents SparsePoly::trimmed(Exponents e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

SparsePoly SparsePoly::constant(const Rational& c) {
  SparsePoly p;
  p.add_term({}, c);
  return p;
}

SparsePoly SparsePoly::variable(int i) {
  if (i < 0) throw std::invalid_argument("variable index must be non-negative");
  Exponents e(static_cast<std::size_t>(i) + 1, 0);
  e.back() = 1;
  SparsePoly p;
  p.add_term(std::move(e), Rational(1));
  return p;
}

void SparsePoly::add_term(Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent");
  }
  e = trimmed(std::move(e));
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational SparsePoly::coefficient(Exponents e) const {
  auto it = terms_.find(trimmed(std::move(e)));
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    deg = std::max(deg, s);
  }
  return deg;
}

Rational SparsePoly::evaluate(std::span<const Rational> values) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    if (e.size() > values.size()) throw std::invalid_argument("too few values for polynomial evaluation");
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) m *= values[i].pow(static_cast<unsigned>(e[i]));
    }
    acc += m;
  }
  return acc;
}

SparsePoly SparsePoly::substitute(std::span<const SparsePoly> values) const {
  // Powers are reused across monomials.
  std::vector<std::vector<SparsePoly>> powers(values.size());
  auto power = [&](std::size_t var, int e) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  SparsePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.size() > values.size()) throw std::invalid_argument("too few values for substitution");
    SparsePoly m = constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) m = m * power(i, e[i]);
    }
    out += m;
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  r += b;
  return r;
}

SparsePoly operator*(const Rational& s, const SparsePoly& p) {
  SparsePoly r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + Rational(-1) * b; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(Rational(1));
  SparsePoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic for readability.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da > db;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (e.empty() || mag != Rational(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << name(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// --- Bell polynomials -------------------------------------------------------

namespace {

void check_bell_order(int r) {
  if (r < 1 || r > kMaxBellOrder) {
    throw std::out_of_range("Bell order " + std::to_string(r) + " outside [1, " + std::to_string(kMaxBellOrder) + "]");
  }
}

}  // namespace

SparsePoly complete_bell(int r) {
  check_bell_order(r);
  static std::mutex mu;
  static std::map<int, SparsePoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  SparsePoly p;
  for_each_signature(r, [&](const Signature& sig) { p.add_term(sig.counts, Rational(signature_count(r, sig))); });
  std::lock_guard lock(mu);
  cache.emplace(r, p);
  return p;
}

SparsePoly partial_bell(int n, int l) {
  check_bell_order(n);
  if (l < 1 || l > n) {
    throw std::out_of_range("partial Bell block count " + std::to_string(l) + " outside [1, " + std::to_string(n) + "]");
  }
  // n! / (j_1! ... j_m!) * prod (1/i!)^{j_i}, summed over sum j_i = l,
  // sum i j_i = n, with m = n - l + 1.
  const int m = n - l + 1;
  SparsePoly p;
  std::vector<int> j(static_cast<std::size_t>(m), 0);
  const Rational n_fact(factorial(n));
  auto recurse = [&](auto&& self, int index, int blocks_left, int elems_left) -> void {
    if (index == 0) {
      if (blocks_left != 0 || elems_left != 0) return;
      Rational c = n_fact;
      for (int i = 1; i <= m; ++i) {
        const int ji = j[static_cast<std::size_t>(i - 1)];
        c /= Rational(factorial(ji));
        c /= Rational(factorial(i)).pow(static_cast<unsigned>(ji));
      }
      p.add_term(j, c);
      return;
    }
    const int size = index;
    for (int count = 0; count <= blocks_left && count * size <= elems_left; ++count) {
      j[static_cast<std::size_t>(size - 1)] = count;
      self(self, index - 1, blocks_left - count, elems_left - count * size);
    }
    j[static_cast<std::size_t>(size - 1)] = 0;
  };
  recurse(recurse, m, l, n);
  return p;
}

Rational eval_complete_bell_partition_sum(int r, std::span<const Rational> values) {
  if (r < 0) throw std::out_of_range("Bell order must be non-negative");
  if (r == 0) return Rational(1);
  if (static_cast<int>(values.size()) < r) throw std::invalid_argument("eval_complete_bell: fewer values than r");
  Rational acc;
  for_each_signature(r, [&](const Signature& sig) {
    Rational term(signature_count(r, sig));
    for (std::size_t i = 0; i < sig.counts.size(); ++i) {
      if (sig.counts[i]) term *= values[i].pow(static_cast<unsigned>(sig.counts[i]));
    }
    acc += term;
  });
  return acc;
}

Rational eval_complete_bell_exp(int r, std::span<const Rational> values) {
  if (r < 0) throw std::out_of_range("Bell order must be non-negative");
  if (static_cast<int>(values.size()) < r) throw std::invalid_argument("eval_complete_bell: fewer values than r");
  // g = exp(f), f = sum x_l t^l / l!; n g_n = sum_k k f_k g_{n-k}.
  std::vector<Rational> f(static_cast<std::size_t>(r) + 1), g(static_cast<std::size_t>(r) + 1);
  for (int l = 1; l <= r; ++l) f[static_cast<std::size_t>(l)] = values[static_cast<std::size_t>(l - 1)] / Rational(factorial(l));
  g[0] = Rational(1);
  for (int n = 1; n <= r; ++n) {
    Rational s;
    for (int k = 1; k <= n; ++k) s += Rational(k) * f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = s / Rational(n);
  }
  return g[static_cast<std::size_t>(r)] * Rational(factorial(r));
}

Rational eval_complete_bell(int r, std::span<const Rational> values) {
  Rational by_partitions = eval_complete_bell_partition_sum(r, values);
  Rational by_exp = eval_complete_bell_exp(r, values);
  if (by_partitions != by_exp) {
    throw consistency_error("Bell evaluation paths disagree at r = " + std::to_string(r) + ": " +
                            by_partitions.to_string() + " vs " + by_exp.to_string());
  }
  return by_partitions;
}

std::vector<Rational> bell_transform(std::span<const Rational> log_coeffs) {
  const int n = static_cast<int>(log_coeffs.size());
  std::vector<Rational> scaled(log_coeffs.size());
  for (int l = 1; l <= n; ++l) {
    scaled[static_cast<std::size_t>(l - 1)] = Rational(factorial(l)) * log_coeffs[static_cast<std::size_t>(l - 1)];
  }
  std::vector<Rational> b{Rational(1)};
  for (int r = 1; r <= n; ++r) {
    b.push_back(eval_complete_bell(r, std::span<const Rational>(scaled).first(static_cast<std::size_t>(r))) /
                Rational(factorial(r)));
  }
  return b;
}

}  // namespace nodal
