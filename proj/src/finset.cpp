#include "f1m/finset.hpp"

#include <bit>
#include <stdexcept>

namespace f1m {

PointedMap PointedMap::identity(int n) {
  PointedMap f{n, n, std::vector<int>(static_cast<std::size_t>(n) + 1)};
  for (int k = 0; k <= n; ++k) f.table[static_cast<std::size_t>(k)] = k;
  return f;
}

PointedMap PointedMap::fold(int n) {
  PointedMap f{n, 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 1)};
  f.table[0] = 0;
  return f;
}

PointedMap PointedMap::constant_zero(int n, int m) {
  return PointedMap{n, m, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
}

bool PointedMap::operator<(const PointedMap& o) const {
  if (src != o.src) return src < o.src;
  if (dst != o.dst) return dst < o.dst;
  return table < o.table;
}

std::string PointedMap::encode() const {
  std::string s = std::to_string(src) + ">" + std::to_string(dst) + ":";
  for (int v : table) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

bool is_valid(const PointedMap& f) {
  if (f.src < 0 || f.dst < 0) return false;
  if (f.table.size() != static_cast<std::size_t>(f.src) + 1) return false;
  if (f.table[0] != 0) return false;
  for (int v : f.table)
    if (v < 0 || v > f.dst) return false;
  return true;
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose: domain/codomain mismatch");
  PointedMap h{f.src, g.dst, std::vector<int>(f.table.size())};
  for (std::size_t k = 0; k < f.table.size(); ++k)
    h.table[k] = g.table[static_cast<std::size_t>(f.table[k])];
  return h;
}

std::vector<PointedMap> enumerate_pointed_maps(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("enumerate_pointed_maps: negative size");
  std::vector<PointedMap> out;
  PointedMap f = PointedMap::constant_zero(n, m);
  for (;;) {
    out.push_back(f);
    int k = n;
    while (k >= 1 && f.table[static_cast<std::size_t>(k)] == m) {
      f.table[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 1) break;
    ++f.table[static_cast<std::size_t>(k)];
  }
  return out;
}

Mask preimage_mask(const PointedMap& phi, Mask a) {
  Mask out = 0;
  for (int k = 1; k <= phi.src; ++k) {
    int v = phi.table[static_cast<std::size_t>(k)];
    if (v != 0 && (a >> (v - 1)) & 1u) out |= Mask{1} << (k - 1);
  }
  return out;
}

Subset preimage_subset(const PointedMap& phi, const Subset& a) {
  if (a.pointed) throw std::invalid_argument("preimage_subset: expected unpointed subset");
  if (a.ambient != phi.dst) throw std::invalid_argument("preimage_subset: ambient mismatch");
  return Subset{phi.src, false, preimage_mask(phi, a.mask)};
}

Mask preimage_pointed_mask(const PointedMap& phi, Mask a) {
  Mask out = 0;
  for (int k = 0; k <= phi.src; ++k)
    if ((a >> phi.table[static_cast<std::size_t>(k)]) & 1u) out |= Mask{1} << k;
  return out;
}

PointedMap characteristic_map(int n, Mask a) {
  PointedMap f = PointedMap::constant_zero(n, 1);
  for (int k = 1; k <= n; ++k)
    if ((a >> (k - 1)) & 1u) f.table[static_cast<std::size_t>(k)] = 1;
  return f;
}

SetFamily::SetFamily(int ambient_bits) : ambient_(ambient_bits) {
  if (ambient_bits < 0 || ambient_bits > kMaxAmbient)
    throw std::invalid_argument("SetFamily: ambient out of range");
  const std::uint64_t bits = std::uint64_t{1} << ambient_bits;
  words_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
}

bool SetFamily::test(Mask m) const {
  return (words_[m >> 6] >> (m & 63)) & 1u;
}

void SetFamily::set(Mask m, bool value) {
  if (m >= domain_size()) throw std::out_of_range("SetFamily::set: mask out of range");
  if (value)
    words_[m >> 6] |= std::uint64_t{1} << (m & 63);
  else
    words_[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
}

std::size_t SetFamily::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Mask> SetFamily::members() const {
  std::vector<Mask> out;
  for (Mask m = 0; m < domain_size(); ++m)
    if (test(m)) out.push_back(m);
  return out;
}

std::string SetFamily::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::uint64_t bits = domain_size();
  const std::uint64_t nibbles = (bits + 3) / 4;
  std::string s;
  s.reserve(nibbles);
  for (std::uint64_t j = 0; j < nibbles; ++j) {
    unsigned v = static_cast<unsigned>((words_[j >> 4] >> ((j & 15) * 4)) & 0xf);
    s += digits[v];
  }
  return s;
}

SetFamily SetFamily::from_hex(int ambient_bits, const std::string& hex) {
  SetFamily f(ambient_bits);
  const std::uint64_t nibbles = (f.domain_size() + 3) / 4;
  if (hex.size() != nibbles) throw std::invalid_argument("SetFamily::from_hex: bad length");
  for (std::uint64_t j = 0; j < nibbles; ++j) {
    char c = hex[j];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a') + 10;
    else
      throw std::invalid_argument("SetFamily::from_hex: bad digit");
    f.words_[j >> 4] |= static_cast<std::uint64_t>(v) << ((j & 15) * 4);
  }
  return f;
}

std::strong_ordering SetFamily::operator<=>(const SetFamily& o) const {
  if (ambient_ != o.ambient_) return ambient_ <=> o.ambient_;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
  return std::strong_ordering::equal;
}

}  // namespace f1m
