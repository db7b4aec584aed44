#include "lacm/polyphase.hpp"

#include <sstream>
#include <stdexcept>

namespace lacm {

PolyPhase::PolyPhase(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("PolyPhase: dim must be >= 0");
}

PolyPhase PolyPhase::constant(int dim, const Rational& c) {
  PolyPhase out(dim);
  if (c != 0) out.terms_.emplace(std::vector<int>(2 * (dim + 1), 0), c);
  return out;
}

PolyPhase PolyPhase::q(int dim, int i) {
  PolyPhase out(dim);
  if (i < 0 || i > dim) throw std::invalid_argument("PolyPhase::q: index out of range");
  std::vector<int> key(2 * (dim + 1), 0);
  key[i] = 1;
  out.terms_.emplace(std::move(key), 1);
  return out;
}

PolyPhase PolyPhase::p(int dim, int i) {
  PolyPhase out(dim);
  if (i < 0 || i > dim) throw std::invalid_argument("PolyPhase::p: index out of range");
  std::vector<int> key(2 * (dim + 1), 0);
  key[dim + 1 + i] = 1;
  out.terms_.emplace(std::move(key), 1);
  return out;
}

void PolyPhase::check_dim(const PolyPhase& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("PolyPhase: dimension mismatch");
}

void PolyPhase::add_term(std::vector<int> key, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PolyPhase& PolyPhase::operator+=(const PolyPhase& o) {
  check_dim(o);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

PolyPhase& PolyPhase::operator-=(const PolyPhase& o) {
  check_dim(o);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

PolyPhase PolyPhase::operator+(const PolyPhase& o) const {
  PolyPhase out = *this;
  out += o;
  return out;
}

PolyPhase PolyPhase::operator-(const PolyPhase& o) const {
  PolyPhase out = *this;
  out -= o;
  return out;
}

PolyPhase PolyPhase::operator-() const {
  PolyPhase out(dim_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

PolyPhase PolyPhase::operator*(const PolyPhase& o) const {
  check_dim(o);
  PolyPhase out(dim_);
  const std::size_t width = 2 * (dim_ + 1);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      std::vector<int> key(width);
      for (std::size_t i = 0; i < width; ++i) key[i] = ka[i] + kb[i];
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

PolyPhase PolyPhase::operator*(const Rational& c) const {
  PolyPhase out(dim_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

bool PolyPhase::operator==(const PolyPhase& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

PolyPhase PolyPhase::dq(int i) const {
  if (i < 0 || i > dim_) throw std::invalid_argument("PolyPhase::dq: index out of range");
  PolyPhase out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key[i] == 0) continue;
    std::vector<int> k = key;
    --k[i];
    out.add_term(std::move(k), c * Rational(key[i]));
  }
  return out;
}

PolyPhase PolyPhase::dp(int i) const {
  if (i < 0 || i > dim_) throw std::invalid_argument("PolyPhase::dp: index out of range");
  PolyPhase out(dim_);
  const int slot = dim_ + 1 + i;
  for (const auto& [key, c] : terms_) {
    if (key[slot] == 0) continue;
    std::vector<int> k = key;
    --k[slot];
    out.add_term(std::move(k), c * Rational(key[slot]));
  }
  return out;
}

int PolyPhase::p_degree() const {
  int best = -1;
  for (const auto& [key, c] : terms_) {
    int total = 0;
    for (int i = 0; i <= dim_; ++i) total += key[dim_ + 1 + i];
    if (total > best) best = total;
  }
  return best;
}

bool PolyPhase::is_p_homogeneous(int n) const {
  for (const auto& [key, c] : terms_) {
    int total = 0;
    for (int i = 0; i <= dim_; ++i) total += key[dim_ + 1 + i];
    if (total != n) return false;
  }
  return true;
}

bool PolyPhase::depends_on_p() const { return p_degree() > 0; }

std::map<std::vector<int>, PolyPhase> PolyPhase::p_parts() const {
  std::map<std::vector<int>, PolyPhase> out;
  for (const auto& [key, c] : terms_) {
    std::vector<int> alpha(key.begin() + dim_ + 1, key.end());
    std::vector<int> qkey = key;
    for (int i = 0; i <= dim_; ++i) qkey[dim_ + 1 + i] = 0;
    auto it = out.find(alpha);
    if (it == out.end()) it = out.emplace(std::move(alpha), PolyPhase(dim_)).first;
    it->second.add_term(std::move(qkey), c);
  }
  return out;
}

Rational PolyPhase::eval(const std::vector<Rational>& p_values,
                         const std::vector<Rational>& q_values) const {
  if (static_cast<int>(p_values.size()) != dim_ + 1 ||
      static_cast<int>(q_values.size()) != dim_ + 1)
    throw std::invalid_argument("PolyPhase::eval: point has wrong dimension");
  Rational total = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (int i = 0; i <= dim_ && term != 0; ++i)
      for (int e = 0; e < key[i]; ++e) term *= q_values[i];
    for (int i = 0; i <= dim_ && term != 0; ++i)
      for (int e = 0; e < key[dim_ + 1 + i]; ++e) term *= p_values[i];
    total += term;
  }
  return total;
}

std::string PolyPhase::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string cs = to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) cs.erase(0, 1);
    std::string vars;
    for (int i = 0; i <= dim_; ++i) {
      if (key[i] == 0) continue;
      vars += (vars.empty() ? "" : "*");
      vars += "q" + std::to_string(i);
      if (key[i] > 1) vars += "^" + std::to_string(key[i]);
    }
    for (int i = 0; i <= dim_; ++i) {
      int e = key[dim_ + 1 + i];
      if (e == 0) continue;
      vars += (vars.empty() ? "" : "*");
      vars += "p" + std::to_string(i);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << vars;
    } else {
      os << cs << '*' << vars;
    }
  }
  return os.str();
}

std::vector<PolyPhase::Term> PolyPhase::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    Term t;
    t.q_exp.assign(key.begin(), key.begin() + dim_ + 1);
    t.p_exp.assign(key.begin() + dim_ + 1, key.end());
    t.coeff = c;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace lacm
