#include "gpp/perm.hpp"

#include <algorithm>
#include <sstream>

#include "gpp/error.hpp"

namespace gpp {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("not a permutation of 0.." + std::to_string(img_.size() - 1));
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidInput("cycle notation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t endp = pos;
      while (endp < text.size() && std::isdigit(static_cast<unsigned char>(text[endp]))) ++endp;
      if (endp == pos) throw InvalidInput("cycle notation: expected point in \"" + text + "\"");
      int pt = std::stoi(text.substr(pos, endp - pos));
      if (pt < 0 || pt >= degree)
        throw InvalidInput("cycle notation: point " + std::to_string(pt) + " out of range for degree " +
                           std::to_string(degree));
      cyc.push_back(pt);
      pos = endp;
      skip_ws();
    }
    if (pos == text.size()) throw InvalidInput("cycle notation: missing ')' in \"" + text + "\"");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (img[static_cast<std::size_t>(a)] != a)
        throw InvalidInput("cycle notation: point " + std::to_string(a) + " repeated in \"" + text + "\"");
      img[static_cast<std::size_t>(a)] = b;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InvalidInput("permutation degree mismatch");
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[i] = img_[static_cast<std::size_t>(rhs.img_[i])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<char> done(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (done[i] || img_[i] == static_cast<int>(i)) continue;
    out << '(';
    int x = static_cast<int>(i);
    bool first = true;
    while (!done[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = img_[static_cast<std::size_t>(x)];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : img_) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace gpp
