#include "f1m/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace f1m {

PointedMap face_map(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face_map: index out of range");
  PointedMap phi{n, n - 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int k = 1; k <= n; ++k) {
    int v = k <= i ? k : k - 1;
    phi.table[static_cast<std::size_t>(k)] = (v >= 1 && v <= n - 1) ? v : 0;
  }
  return phi;
}

PointedMap degeneracy_map(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("degeneracy_map: index out of range");
  PointedMap phi{n, n + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int k = 1; k <= n; ++k) phi.table[static_cast<std::size_t>(k)] = k <= i ? k : k + 1;
  return phi;
}

bool SimplicialWindow::is_degenerate(int n, int e) const {
  if (n == 0) return false;
  for (const auto& s : degens[static_cast<std::size_t>(n) - 1])
    for (int img : s)
      if (img == e) return true;
  return false;
}

SimplicialWindow deloop(const GammaSetWindow& x) {
  SimplicialWindow w;
  w.levels = x.levels();
  for (int n = 0; n <= x.levels(); ++n) {
    w.keys.push_back(x.keys(n));
    std::vector<std::vector<int>> fn;
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        const PointedMap d = face_map(n, i);
        std::vector<int> row;
        for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e) row.push_back(x.apply(d, e));
        fn.push_back(std::move(row));
      }
    w.faces.push_back(std::move(fn));
    std::vector<std::vector<int>> sn;
    if (n < x.levels())
      for (int i = 0; i <= n; ++i) {
        const PointedMap s = degeneracy_map(n, i);
        std::vector<int> row;
        for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e) row.push_back(x.apply(s, e));
        sn.push_back(std::move(row));
      }
    w.degens.push_back(std::move(sn));
  }
  return w;
}

CheckResult check_simplicial_identities(const SimplicialWindow& w) {
  CheckResult r;
  auto d = [&](int n, int i, int e) { return w.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(e)]; };
  auto s = [&](int n, int i, int e) { return w.degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(e)]; };
  auto bad = [&](const char* which, int n, int i, int j, int e) {
    r.fail(which, {{"level", n}, {"i", i}, {"j", j}, {"elem", e}});
  };

  for (int n = 0; n <= w.levels; ++n) {
    const int size = static_cast<int>(w.level_size(n));
    // d_i d_j = d_{j-1} d_i, i < j, on level n >= 2
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          for (int e = 0; e < size; ++e)
            if (d(n - 1, i, d(n, j, e)) != d(n - 1, j - 1, d(n, i, e)))
              bad("face-face identity", n, i, j, e);
    // s_i s_j = s_{j+1} s_i, i <= j, landing within the window
    if (n + 2 <= w.levels)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          for (int e = 0; e < size; ++e)
            if (s(n + 1, i, s(n, j, e)) != s(n + 1, j + 1, s(n, i, e)))
              bad("degeneracy-degeneracy identity", n, i, j, e);
    // d_i s_j on level n < levels
    if (n + 1 <= w.levels)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i)
          for (int e = 0; e < size; ++e) {
            const int lhs = d(n + 1, i, s(n, j, e));
            int rhs;
            if (i == j || i == j + 1) rhs = e;
            else if (i < j) rhs = (n >= 1) ? s(n - 1, j - 1, d(n, i, e)) : e;
            else rhs = (n >= 1) ? s(n - 1, j, d(n, i - 1, e)) : e;
            if (lhs != rhs) bad("face-degeneracy identity", n, i, j, e);
          }
  }
  r.details["claim"] = "simplicial-identities";
  r.details["levels"] = w.levels;
  return r;
}

std::vector<Mask> graded_lex_masks(int n) {
  if (n < 0 || n > kMaxAmbient) throw std::invalid_argument("graded_lex_masks: n out of range");
  std::vector<Mask> masks(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) masks[m] = m;
  auto elems = [n](Mask m) {
    std::vector<int> e;
    for (int k = 1; k <= n; ++k)
      if ((m >> (k - 1)) & 1u) e.push_back(k);
    return e;
  };
  std::sort(masks.begin(), masks.end(), [&](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return elems(a) < elems(b);
  });
  return masks;
}

std::string tuple_of_table(const MorphismTable& f, int n) {
  if (f.size() != (std::size_t{1} << n)) throw std::invalid_argument("tuple_of_table: size mismatch");
  std::string bits;
  for (Mask m : graded_lex_masks(n)) {
    int v = f[m];
    if (v != 0 && v != 1) throw std::invalid_argument("tuple_of_table: values must be 0/1");
    bits += static_cast<char>('0' + v);
  }
  return bits;
}

MorphismTable table_of_tuple(const std::string& bits, int n) {
  if (bits.size() != (std::size_t{1} << n)) throw std::invalid_argument("table_of_tuple: size mismatch");
  MorphismTable f(bits.size());
  std::vector<Mask> order = graded_lex_masks(n);
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != '0' && bits[j] != '1') throw std::invalid_argument("table_of_tuple: not binary");
    f[order[j]] = bits[j] - '0';
  }
  return f;
}

std::vector<std::string> simplex_tuples(int n, const EnumOptions& opts) {
  if (n > 5) throw std::invalid_argument("simplex_tuples: n out of range");
  std::vector<std::string> out;
  for (const MorphismTable& f : enumerate_morphisms(powerset_plasma(n), krasner(), opts))
    out.push_back(tuple_of_table(f, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> classify_2simplices(const SimplicialWindow& w) {
  if (w.levels < 2) throw std::invalid_argument("classify_2simplices: level 2 missing");
  std::vector<char> labels;
  for (const std::string& key : w.keys[2]) {
    MorphismTable f = decode_table(key);
    if (f.size() != 4) throw std::invalid_argument("classify_2simplices: not a level-2 morphism key");
    const int t = f[0b01] * 4 + f[0b10] * 2 + f[0b11];
    switch (t) {
      case 0b000: labels.push_back('A'); break;
      case 0b011: labels.push_back('B'); break;
      case 0b101: labels.push_back('C'); break;
      case 0b110: labels.push_back('D'); break;
      case 0b111: labels.push_back('E'); break;
      default: throw std::invalid_argument("classify_2simplices: unrecognized boundary triple");
    }
  }
  return labels;
}

bool check_associator(const std::string& tuple) {
  if (tuple.size() != 8) throw std::invalid_argument("check_associator: need a level-3 tuple");
  int x[8];
  for (int j = 0; j < 8; ++j) {
    if (tuple[static_cast<std::size_t>(j)] != '0' && tuple[static_cast<std::size_t>(j)] != '1')
      throw std::invalid_argument("check_associator: not binary");
    x[j] = tuple[static_cast<std::size_t>(j)] - '0';
  }
  // tuple order: {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}
  const Plasma k = krasner();
  CarrierSet lhs = k.at(x[4], x[3]) & k.at(x[5], x[2]) & k.at(x[1], x[6]);
  return (lhs >> x[7]) & 1u;
}

Partition face_action_on_partitions(int n, int i, const Partition& p) {
  if (i <= 0 || i >= n) throw std::invalid_argument("face_action_on_partitions: inner faces only");
  Partition via_map = part_map(face_map(n, i), p);

  // direct procedure: merge the blocks of i and i+1, delete i+1, decrement
  std::vector<int> labels = partition_to_labels(p);
  const int merged = labels[static_cast<std::size_t>(i)];
  const int gone = labels[static_cast<std::size_t>(i + 1)];
  std::vector<int> out;
  for (int e = 0; e <= n; ++e) {
    if (e == i + 1) continue;
    out.push_back(labels[static_cast<std::size_t>(e)] == gone ? merged : labels[static_cast<std::size_t>(e)]);
  }
  // relabel by first appearance
  std::vector<int> remap(static_cast<std::size_t>(n) + 2, 0);
  int next = 0;
  for (int& l : out) {
    if (remap[static_cast<std::size_t>(l)] == 0) remap[static_cast<std::size_t>(l)] = ++next;
    l = remap[static_cast<std::size_t>(l)];
  }
  Partition direct = partition_from_labels(out);
  if (!(direct == via_map))
    throw std::logic_error("face_action_on_partitions: procedures disagree");
  return via_map;
}

nlohmann::json export_json(const SimplicialWindow& w) {
  nlohmann::json j;
  j["schema"] = "simplicial-window-v1";
  j["levels"] = w.levels;
  j["keys"] = w.keys;
  j["faces"] = w.faces;
  j["degeneracies"] = w.degens;
  return j;
}

SimplicialWindow import_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "simplicial-window-v1")
    throw std::invalid_argument("import_json: wrong schema");
  SimplicialWindow w;
  w.levels = j.at("levels").get<int>();
  w.keys = j.at("keys").get<std::vector<std::vector<std::string>>>();
  w.faces = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
  w.degens = j.at("degeneracies").get<std::vector<std::vector<std::vector<int>>>>();
  return w;
}

std::string export_dot(const SimplicialWindow& w) {
  std::string out = "digraph delooping {\n";
  for (int v = 0; v < static_cast<int>(w.level_size(0)); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + w.keys[0][static_cast<std::size_t>(v)] + "\"];\n";
  if (w.levels >= 1)
    for (int e = 0; e < static_cast<int>(w.level_size(1)); ++e) {
      if (w.is_degenerate(1, e)) continue;
      const int src = w.faces[1][1][static_cast<std::size_t>(e)];
      const int dst = w.faces[1][0][static_cast<std::size_t>(e)];
      out += "  v" + std::to_string(src) + " -> v" + std::to_string(dst) + " [label=\"" +
             w.keys[1][static_cast<std::size_t>(e)] + "\"];\n";
    }
  if (w.levels >= 2)
    for (int t = 0; t < static_cast<int>(w.level_size(2)); ++t) {
      out += "  // triangle " + w.keys[2][static_cast<std::size_t>(t)] + ": d0=" +
             std::to_string(w.faces[2][0][static_cast<std::size_t>(t)]) + " d1=" +
             std::to_string(w.faces[2][1][static_cast<std::size_t>(t)]) + " d2=" +
             std::to_string(w.faces[2][2][static_cast<std::size_t>(t)]) + "\n";
    }
  out += "}\n";
  return out;
}

}  // namespace f1m
