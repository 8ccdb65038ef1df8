#include "pbench/qfusion/heisenberg.hpp"

#include <stdexcept>

namespace pbench::qfusion {

HeisenbergElement HeisenbergElement::monomial(int i, int j, int m, const LaurentPoly& c) {
  HeisenbergElement e;
  e.add({i, j, m}, c);
  return e;
}

LaurentPoly HeisenbergElement::coeff(int i, int j, int m) const {
  auto it = terms_.find({i, j, m});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeisenbergElement::add(const Monomial& mono, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[mono];
  slot += c;
  if (slot.is_zero()) terms_.erase(mono);
}

int HeisenbergElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int e = m[0] + m[1] + 2 * m[2];
    if (d >= 0 && e != d) return -1;
    d = e;
  }
  return d;
}

HeisenbergElement& HeisenbergElement::operator+=(const HeisenbergElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HeisenbergElement HeisenbergElement::operator+(const HeisenbergElement& o) const {
  HeisenbergElement r = *this;
  r += o;
  return r;
}

HeisenbergElement HeisenbergElement::operator-(const HeisenbergElement& o) const {
  HeisenbergElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

HeisenbergElement HeisenbergElement::operator*(const LaurentPoly& c) const {
  HeisenbergElement r;
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

HeisenbergElement HeisenbergElement::operator*(const HeisenbergElement& o) const {
  WordElement w;
  const WordElement a = to_words(*this), b = to_words(o);
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) w[u + v] += cu * cv;
  return normalize(w);
}

std::string HeisenbergElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  auto power = [](const char* letter, int e) -> std::string {
    if (e == 0) return "";
    return std::string(" ") + letter + (e > 1 ? "^" + std::to_string(e) : "");
  };
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string("q") + ")";
    std::string mono = power("y", m[0]) + power("x", m[1]) + power("z", m[2]);
    s += mono.empty() ? " 1" : mono;
  }
  return s;
}

nlohmann::json HeisenbergElement::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : terms_) j.push_back({m[0], m[1], m[2], c.to_json()});
  return j;
}

HeisenbergElement normalize(const WordElement& input) {
  // key: the word in x and y only, plus the number of z letters
  std::map<std::pair<std::string, int>, LaurentPoly> pending;
  for (const auto& [w, c] : input) {
    std::string xy;
    int zs = 0;
    for (char ch : w) {
      if (ch == 'z') ++zs;
      else if (ch == 'x' || ch == 'y') xy += ch;
      else throw std::invalid_argument(std::string("unknown letter '") + ch + "'");
    }
    pending[{xy, zs}] += c;
  }
  HeisenbergElement out;
  const LaurentPoly q = LaurentPoly::monomial(1);
  while (!pending.empty()) {
    // longest words first so that equal descendants merge before expanding
    auto it = pending.begin();
    for (auto jt = pending.begin(); jt != pending.end(); ++jt)
      if (jt->first.first.size() > it->first.first.size()) it = jt;
    const auto [key, c] = *it;
    pending.erase(it);
    if (c.is_zero()) continue;
    const auto& [w, zs] = key;
    const size_t pos = w.find("xy");
    if (pos == std::string::npos) {
      const int i = static_cast<int>(w.find('x') == std::string::npos ? w.size() : w.find('x'));
      out.add({i, static_cast<int>(w.size()) - i, zs}, c);
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'y';
    swapped[pos + 1] = 'x';
    pending[{swapped, zs}] += c * q;
    pending[{w.substr(0, pos) + w.substr(pos + 2), zs + 1}] += c;
  }
  return out;
}

HeisenbergElement normalize_word(const std::string& w) { return normalize(WordElement{{w, LaurentPoly(1)}}); }

WordElement to_words(const HeisenbergElement& e) {
  WordElement w;
  for (const auto& [m, c] : e.terms())
    w[std::string(m[0], 'y') + std::string(m[1], 'x') + std::string(m[2], 'z')] += c;
  return w;
}

HeisenbergElement closed_commutation(int p, int j) {
  HeisenbergElement r;
  for (int i = 0; i <= std::min(p, j); ++i) {
    LaurentPoly c = LaurentPoly::monomial((j - i) * (p - i)) * qbinom(p, i);
    for (int s = 1; s <= i; ++s) c *= qint(j - s + 1);
    r.add({j - i, p - i, i}, c);
  }
  return r;
}

namespace {

int weight(char ch) { return ch == 'y' ? 1 : ch == 'x' ? -1 : 0; }
int weight(const std::string& w) {
  int s = 0;
  for (char ch : w) s += weight(ch);
  return s;
}

}  // namespace

WordElement uq_action_word(UqGenerator g, const std::string& w) {
  WordElement out;
  switch (g) {
    case UqGenerator::K:
      out[w] = LaurentPoly::monomial(weight(w));
      break;
    case UqGenerator::Kinv:
      out[w] = LaurentPoly::monomial(-weight(w));
      break;
    case UqGenerator::E:
      // e(a b) = e(a) K(b) + a e(b); only e(x) = y is nonzero
      for (size_t k = 0; k < w.size(); ++k)
        if (w[k] == 'x') {
          std::string v = w;
          v[k] = 'y';
          out[v] += LaurentPoly::monomial(weight(w.substr(k + 1)));
        }
      break;
    case UqGenerator::F:
      // f(a b) = f(a) b + K^{-1}(a) f(b); only f(y) = x is nonzero
      for (size_t k = 0; k < w.size(); ++k)
        if (w[k] == 'y') {
          std::string v = w;
          v[k] = 'x';
          out[v] += LaurentPoly::monomial(-weight(w.substr(0, k)));
        }
      break;
  }
  return out;
}

HeisenbergElement uq_action(UqGenerator g, const HeisenbergElement& a) {
  WordElement acc;
  for (const auto& [w, c] : to_words(a))
    for (const auto& [v, d] : uq_action_word(g, w)) acc[v] += c * d;
  return normalize(acc);
}

std::vector<Monomial> degree_basis(int n) {
  std::vector<Monomial> b;
  for (int m = 0; 2 * m <= n; ++m)
    for (int i = 0; i <= n - 2 * m; ++i) b.push_back({i, n - 2 * m - i, m});
  return b;
}

}  // namespace pbench::qfusion
