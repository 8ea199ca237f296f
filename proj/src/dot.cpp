#include "qlab/dot.hpp"

#include <sstream>

namespace qlab {

namespace {

struct HasseData {
  std::vector<int> class_of;          // object -> class id
  std::vector<int> representative;    // class -> canonical object
  std::vector<std::pair<int, int>> covers;  // (lower class, upper class)
};

HasseData hasse(const QCategory& a) {
  PreorderInfo ord = underlying_preorder(a);
  HasseData out;
  out.class_of.assign(a.size(), -1);
  for (int x = 0; x < a.size(); ++x) {
    if (out.class_of[x] >= 0) continue;
    int cls = static_cast<int>(out.representative.size());
    out.class_of[x] = cls;
    out.representative.push_back(x);
    for (int y = x + 1; y < a.size(); ++y)
      if (ord.leq[x][y] && ord.leq[y][x]) out.class_of[y] = cls;
  }
  const int k = static_cast<int>(out.representative.size());
  auto leq = [&](int c1, int c2) {
    return ord.leq[out.representative[c1]][out.representative[c2]];
  };
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = 0; c2 < k; ++c2) {
      if (c1 == c2 || !leq(c1, c2)) continue;
      bool cover = true;
      for (int mid = 0; mid < k && cover; ++mid)
        if (mid != c1 && mid != c2 && leq(c1, mid) && leq(mid, c2)) cover = false;
      if (cover) out.covers.emplace_back(c1, c2);
    }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const QCategory& a, const std::string& name,
                   const std::vector<std::string>& labels) {
  HasseData h = hasse(a);
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t c = 0; c < h.representative.size(); ++c) {
    int rep = h.representative[c];
    std::string label = labels[rep];
    for (int x = 0; x < a.size(); ++x)
      if (h.class_of[x] == static_cast<int>(c) && x != rep) label += " = " + labels[x];
    out << "  " << quote(a.objects[rep]) << " [label=" << quote(label) << "];\n";
  }
  for (const auto& [lo, hi] : h.covers)
    out << "  " << quote(a.objects[h.representative[lo]]) << " -> "
        << quote(a.objects[h.representative[hi]]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string dot_of_category(const QCategory& a, const std::string& name) {
  std::vector<std::string> labels = a.objects;
  if (a.q->size() > 1)
    for (int x = 0; x < a.size(); ++x) labels[x] += ":" + a.q->objects[a.types[x]];
  return render(a, name, labels);
}

std::string dot_of_lattice(const FixedPointLattice& lattice) {
  const QCategory& base = lattice.base;
  std::vector<std::string> labels(lattice.extents.size());
  for (std::size_t k = 0; k < lattice.extents.size(); ++k) {
    const Presheaf& e = lattice.extents[k];
    std::string extent;
    for (int x = 0; x < base.size(); ++x) {
      const HomLattice& h = base.q->hom(base.types[x], e.type_obj);
      if (e.values[x] == h.bottom) continue;
      if (!extent.empty()) extent += " ";
      extent += base.objects[x];
      if (h.size() > 2 || e.values[x] != h.top) extent += ":" + h.carrier[e.values[x]];
    }
    std::string label = lattice.cat.objects[k] + " {" + extent + "}";
    if (!lattice.intents.empty()) {
      const CoPresheaf& in = lattice.intents[k];
      const QCategory& target = lattice.phi.target;
      std::string intent;
      for (int y = 0; y < target.size(); ++y) {
        const HomLattice& h = target.q->hom(in.type_obj, target.types[y]);
        if (in.values[y] == h.bottom) continue;
        if (!intent.empty()) intent += " ";
        intent += target.objects[y];
        if (h.size() > 2 || in.values[y] != h.top) intent += ":" + h.carrier[in.values[y]];
      }
      label += " | {" + intent + "}";
    }
    labels[k] = label;
  }
  HasseData h = hasse(lattice.cat);
  std::ostringstream out;
  out << "digraph " << quote(lattice.kind) << " {\n  rankdir=BT;\n";
  for (std::size_t c = 0; c < h.representative.size(); ++c)
    out << "  " << quote(lattice.cat.objects[h.representative[c]])
        << " [label=" << quote(labels[h.representative[c]]) << "];\n";
  for (const auto& [lo, hi] : h.covers)
    out << "  " << quote(lattice.cat.objects[h.representative[lo]]) << " -> "
        << quote(lattice.cat.objects[h.representative[hi]]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qlab
