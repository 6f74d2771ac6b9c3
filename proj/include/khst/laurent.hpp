#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace khst {

// Laurent polynomial in one variable with int64 coefficients.
// Coefficients of Jones polynomials of links up to ~16 crossings fit easily.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(int64_t c) {
    if (c != 0) coeff_[0] = c;
  }
  static Laurent monomial(int64_t c, int deg) {
    Laurent p;
    if (c != 0) p.coeff_[deg] = c;
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }

  int64_t coeff(int deg) const {
    auto it = coeff_.find(deg);
    return it == coeff_.end() ? 0 : it->second;
  }

  const std::map<int, int64_t>& terms() const { return coeff_; }

  void add_term(int deg, int64_t c) {
    if (c == 0) return;
    auto it = coeff_.find(deg);
    if (it == coeff_.end()) {
      coeff_[deg] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [d, c] : o.coeff_) add_term(d, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [d, c] : o.coeff_) add_term(d, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [da, ca] : a.coeff_)
      for (auto& [db, cb] : b.coeff_) r.add_term(da + db, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Substitute var -> c * var^k (k may be negative).
  Laurent substitute_monomial(int64_t c, int k) const {
    Laurent r;
    for (auto& [d, a] : coeff_) {
      int64_t f = a;
      // c^d for possibly negative d only makes sense for c = +/-1.
      if (c == -1 && (d & 1)) f = -f;
      r.add_term(d * k, f);
    }
    return r;
  }

  int64_t evaluate_at_one() const {
    int64_t s = 0;
    for (auto& [d, c] : coeff_) s += c;
    return s;
  }
  int64_t evaluate_at_minus_one() const {
    int64_t s = 0;
    for (auto& [d, c] : coeff_) s += (d & 1) ? -c : c;
    return s;
  }

  std::string str(const std::string& var = "q") const {
    if (coeff_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : coeff_) {
      if (!s.empty() && c > 0) s += "+";
      if (c == -1)
        s += "-";
      else if (c != 1 || d == 0)
        s += std::to_string(c);
      if (d != 0) {
        if (c != 1 && c != -1) s += "*";
        s += var;
        if (d != 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

 private:
  std::map<int, int64_t> coeff_;  // degree -> coefficient, no zero entries
};

}  // namespace khst
