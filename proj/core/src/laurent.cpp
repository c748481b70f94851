#include "camut/laurent.hpp"

#include "camut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace camut {

namespace {

void check_same_ring(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars())
    throw precondition_error("Laurent operands live in different rings");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, Int value) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), std::move(value));
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw precondition_error("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents exps, Int coeff) {
  if (int(exps.size()) != nvars) throw precondition_error("exponent vector length mismatch");
  LaurentPoly p(nvars);
  p.add_term(std::move(exps), std::move(coeff));
  return p;
}

void LaurentPoly::add_term(Exponents e, Int c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(e), std::move(c));
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
  check_same_ring(*this, q);
  LaurentPoly r = *this;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
  check_same_ring(*this, q);
  LaurentPoly r = *this;
  for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
  check_same_ring(*this, q);
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(std::move(e), c1 * c2);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw precondition_error("negative power of a non-monomial");
    const auto& [exps, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw precondition_error("negative power of a non-invertible monomial");
    Exponents inv(nvars_);
    for (int i = 0; i < nvars_; ++i) inv[i] = int(-e) * -exps[i];
    return monomial(nvars_, std::move(inv), (e % 2 == 0 || c == 1) ? Int(1) : Int(-1));
  }
  LaurentPoly acc = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

/*
 * Exact Laurent division. Shift numerator and divisor by their componentwise
 * minimal exponents so both become ordinary polynomials with zero valuation
 * in every variable; divisibility in the Laurent ring then coincides with
 * polynomial divisibility, and the quotient is the polynomial quotient
 * shifted back. Polynomial division cancels lexicographically leading terms
 * and fails fast when either the leading monomial or its coefficient does
 * not divide.
 */
LaurentPoly LaurentPoly::div_exact(const LaurentPoly& q) const {
  check_same_ring(*this, q);
  if (q.is_zero()) throw precondition_error("division by zero");
  if (is_zero()) return LaurentPoly(nvars_);

  auto min_exps = [this](const LaurentPoly& p) {
    Exponents m = p.terms_.begin()->first;
    for (const auto& [e, c] : p.terms_)
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  };
  Exponents mp = min_exps(*this), mq = min_exps(q);

  LaurentPoly num(nvars_), den(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents s(nvars_);
    for (int i = 0; i < nvars_; ++i) s[i] = e[i] - mp[i];
    num.terms_.emplace(std::move(s), c);
  }
  for (const auto& [e, c] : q.terms_) {
    Exponents s(nvars_);
    for (int i = 0; i < nvars_; ++i) s[i] = e[i] - mq[i];
    den.terms_.emplace(std::move(s), c);
  }

  const auto& lead_den = *den.terms_.rbegin();
  LaurentPoly quot(nvars_);
  while (!num.is_zero()) {
    const auto& lead_num = *num.terms_.rbegin();
    Exponents t(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      t[i] = lead_num.first[i] - lead_den.first[i];
      if (t[i] < 0) throw laurent_violation("not divisible");
    }
    Int c = lead_num.second / lead_den.second;
    if (c * lead_den.second != lead_num.second) throw laurent_violation("not divisible");
    LaurentPoly term = monomial(nvars_, std::move(t), std::move(c));
    quot = quot + term;
    num = num - term * den;
  }

  Exponents shift(nvars_);
  for (int i = 0; i < nvars_; ++i) shift[i] = mp[i] - mq[i];
  return quot * monomial(nvars_, std::move(shift), 1);
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

uint64_t LaurentPoly::hash64() const {
  // FNV-1a over the canonical term stream.
  uint64_t h = 1469598103934665603ull;
  auto mix_byte = [&h](unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  auto mix_int = [&](int64_t v) {
    for (int b = 0; b < 8; ++b) mix_byte((uint64_t(v) >> (8 * b)) & 0xff);
  };
  mix_int(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int x : e) mix_int(x);
    for (char ch : c.str()) mix_byte(uint8_t(ch));
    mix_byte('|');
  }
  return h;
}

std::string LaurentPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print highest terms first; the map iterates ascending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool monic = abs_c == 1;
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!monic || !any_var) out << abs_c;
    bool need_star = !monic || !any_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << prefix << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(uint8_t(s[start]))))
      throw parse_error("expected integer at position " + std::to_string(start));
    return Int(s.substr(start, pos - start));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars) {
  Lexer lx{text};
  LaurentPoly result(nvars);
  bool expect_term = true;
  int term_sign = 1;
  while (!lx.eof()) {
    if (!expect_term) {
      if (lx.consume('+'))
        term_sign = 1;
      else if (lx.consume('-'))
        term_sign = -1;
      else
        throw parse_error("expected '+' or '-' at position " + std::to_string(lx.pos));
      expect_term = true;
      continue;
    }
    // One term: optional sign, then factors joined by '*'.
    while (lx.peek() == '+' || lx.peek() == '-') {
      if (lx.consume('-')) term_sign = -term_sign;
      else lx.consume('+');
    }
    Int coeff = 1;
    Exponents exps(nvars, 0);
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(uint8_t(c))) {
        coeff *= lx.integer();
        saw_factor = true;
      } else if (std::isalpha(uint8_t(c))) {
        size_t start = lx.pos;
        while (lx.pos < text.size() && std::isalpha(uint8_t(text[lx.pos]))) ++lx.pos;
        size_t digits = lx.pos;
        while (lx.pos < text.size() && std::isdigit(uint8_t(text[lx.pos]))) ++lx.pos;
        if (digits == lx.pos)
          throw parse_error("variable at position " + std::to_string(start) + " lacks an index");
        int idx = std::stoi(text.substr(digits, lx.pos - digits));
        if (idx < 1 || idx > nvars)
          throw parse_error("variable index " + std::to_string(idx) + " out of range 1.." +
                            std::to_string(nvars));
        long e = 1;
        if (lx.consume('^')) e = lx.integer().convert_to<long>();
        exps[idx - 1] += int(e);
        saw_factor = true;
      } else {
        throw parse_error("unexpected character at position " + std::to_string(lx.pos));
      }
      if (!lx.consume('*')) break;
    }
    if (!saw_factor) throw parse_error("empty term");
    result.add_term(std::move(exps), term_sign * coeff);
    term_sign = 1;
    expect_term = false;
  }
  if (expect_term) throw parse_error("empty or dangling expression");
  return result;
}

}  // namespace camut
