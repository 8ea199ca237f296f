#include "qlab/io.hpp"

#include <fstream>

namespace qlab {

using nlohmann::json;

namespace {

std::string require_string(const json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw SchemaError(where + ": missing string field '" + key + "'");
  return doc[key].get<std::string>();
}

void check_id(const std::string& id, const std::string& where) {
  if (id.empty() || id.find(',') != std::string::npos || id.find("->") != std::string::npos)
    throw SchemaError(where + ": identifier '" + id + "' must be nonempty and free of ',' and '->'");
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& where) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw SchemaError(where + ": key '" + key + "' is not 'x,y'");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

Elem find_elem(const HomLattice& h, const std::string& id, const std::string& where) {
  int e = h.find(id);
  if (e < 0) throw SchemaError(where + ": element '" + id + "' is not in the carrier");
  return e;
}

}  // namespace

Quantaloid parse_quantaloid(const json& doc) {
  if (doc.is_string()) {
    QuantaloidPtr builtin = builtin_quantaloid(doc.get<std::string>());
    return *builtin;
  }
  if (!doc.is_object()) throw SchemaError("quantaloid: expected an object or builtin name");
  Quantaloid q;
  if (!doc.contains("objects") || !doc["objects"].is_array())
    throw SchemaError("quantaloid: missing 'objects' array");
  for (const auto& o : doc["objects"]) {
    std::string id = o.get<std::string>();
    check_id(id, "quantaloid.objects");
    q.objects.push_back(id);
  }
  const int n = q.size();
  q.homs.resize(n * n);
  if (!doc.contains("homs") || !doc["homs"].is_object())
    throw SchemaError("quantaloid: missing 'homs'");
  std::vector<bool> seen(n * n, false);
  for (const auto& [key, hom_doc] : doc["homs"].items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos) throw SchemaError("quantaloid.homs: key '" + key + "' is not 'A->B'");
    int a = q.obj(key.substr(0, arrow));
    int b = q.obj(key.substr(arrow + 2));
    if (a < 0 || b < 0) throw SchemaError("quantaloid.homs: unknown objects in '" + key + "'");
    HomLattice h;
    if (!hom_doc.contains("carrier") || !hom_doc["carrier"].is_array())
      throw SchemaError("quantaloid.homs[" + key + "]: missing 'carrier'");
    for (const auto& e : hom_doc["carrier"]) {
      std::string id = e.get<std::string>();
      check_id(id, "quantaloid.homs[" + key + "].carrier");
      h.carrier.push_back(id);
    }
    const int m = h.size();
    if (m == 0) throw SchemaError("quantaloid.homs[" + key + "]: empty carrier");
    h.order.assign(m, std::vector<bool>(m, false));
    if (!hom_doc.contains("leq") || !hom_doc["leq"].is_array())
      throw SchemaError("quantaloid.homs[" + key + "]: missing 'leq'");
    for (const auto& pair : hom_doc["leq"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw SchemaError("quantaloid.homs[" + key + "].leq: entries must be pairs");
      Elem lo = find_elem(h, pair[0].get<std::string>(), "leq");
      Elem hi = find_elem(h, pair[1].get<std::string>(), "leq");
      h.order[lo][hi] = true;
    }
    // reflexive-transitive closure; the validators still check the axioms
    for (int i = 0; i < m; ++i) h.order[i][i] = true;
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (h.order[i][k] && h.order[k][j]) h.order[i][j] = true;
    auto parse_table = [&](const char* name, std::vector<std::vector<Elem>>& out) {
      if (!hom_doc.contains(name)) return false;
      out.assign(m, std::vector<Elem>(m, 0));
      for (const auto& [cell, value] : hom_doc[name].items()) {
        auto [xs, ys] = split_pair(cell, std::string("quantaloid.homs.") + name);
        out[find_elem(h, xs, name)][find_elem(h, ys, name)] =
            find_elem(h, value.get<std::string>(), name);
      }
      return true;
    };
    bool has_joins = parse_table("joins", h.joins);
    bool has_meets = parse_table("meets", h.meets);
    if (!has_joins || !has_meets) {
      HomLattice derived;
      try {
        derived = lattice_from_order(h.carrier, h.order);
      } catch (const std::exception& e) {
        throw SchemaError("quantaloid.homs[" + key + "]: " + e.what());
      }
      if (!has_joins) h.joins = derived.joins;
      if (!has_meets) h.meets = derived.meets;
    }
    if (hom_doc.contains("top"))
      h.top = find_elem(h, hom_doc["top"].get<std::string>(), "top");
    else {
      h.top = 0;
      for (Elem e = 1; e < m; ++e) h.top = h.joins[h.top][e];
    }
    if (hom_doc.contains("bottom"))
      h.bottom = find_elem(h, hom_doc["bottom"].get<std::string>(), "bottom");
    else {
      h.bottom = 0;
      for (Elem e = 1; e < m; ++e) h.bottom = h.meets[h.bottom][e];
    }
    q.homs[a * n + b] = std::move(h);
    seen[a * n + b] = true;
  }
  for (int i = 0; i < n * n; ++i)
    if (!seen[i])
      throw SchemaError("quantaloid: missing hom for " + q.objects[i / n] + "->" + q.objects[i % n]);

  if (!doc.contains("compose") || !doc["compose"].is_object())
    throw SchemaError("quantaloid: missing 'compose'");
  q.comp.resize(n * n * n);
  std::vector<bool> comp_seen(n * n * n, false);
  for (const auto& [key, table] : doc["compose"].items()) {
    auto first = key.find("->");
    auto second = key.find("->", first == std::string::npos ? 0 : first + 2);
    if (first == std::string::npos || second == std::string::npos)
      throw SchemaError("quantaloid.compose: key '" + key + "' is not 'A->B->C'");
    int a = q.obj(key.substr(0, first));
    int b = q.obj(key.substr(first + 2, second - first - 2));
    int c = q.obj(key.substr(second + 2));
    if (a < 0 || b < 0 || c < 0) throw SchemaError("quantaloid.compose: unknown objects in '" + key + "'");
    const HomLattice& ab = q.hom(a, b);
    const HomLattice& bc = q.hom(b, c);
    const HomLattice& ac = q.hom(a, c);
    auto& t = q.comp[(a * n + b) * n + c];
    t.assign(bc.size(), std::vector<Elem>(ab.size(), 0));
    std::size_t cells = 0;
    for (const auto& [cell, value] : table.items()) {
      auto [gs, fs] = split_pair(cell, "quantaloid.compose");
      t[find_elem(bc, gs, "compose")][find_elem(ab, fs, "compose")] =
          find_elem(ac, value.get<std::string>(), "compose");
      ++cells;
    }
    if (cells != static_cast<std::size_t>(bc.size()) * ab.size())
      throw SchemaError("quantaloid.compose[" + key + "]: table is not total");
    comp_seen[(a * n + b) * n + c] = true;
  }
  for (int i = 0; i < n * n * n; ++i)
    if (!comp_seen[i]) throw SchemaError("quantaloid: missing compose table");

  if (!doc.contains("units") || !doc["units"].is_object())
    throw SchemaError("quantaloid: missing 'units'");
  q.units.assign(n, 0);
  for (const auto& [obj, value] : doc["units"].items()) {
    int a = q.obj(obj);
    if (a < 0) throw SchemaError("quantaloid.units: unknown object '" + obj + "'");
    q.units[a] = find_elem(q.hom(a, a), value.get<std::string>(), "units");
  }
  if (doc["units"].size() != static_cast<std::size_t>(n))
    throw SchemaError("quantaloid.units: one unit per object required");

  if (doc.contains("dualizing")) {
    DualizingFamily fam;
    fam.d.assign(n, 0);
    for (const auto& [obj, value] : doc["dualizing"].items()) {
      int a = q.obj(obj);
      if (a < 0) throw SchemaError("quantaloid.dualizing: unknown object '" + obj + "'");
      fam.d[a] = find_elem(q.hom(a, a), value.get<std::string>(), "dualizing");
    }
    if (doc["dualizing"].size() != static_cast<std::size_t>(n))
      throw SchemaError("quantaloid.dualizing: one element per object required");
    q.dualizing = std::move(fam);
  }
  return q;
}

QCategory parse_category(const json& doc, QuantaloidPtr q) {
  if (!doc.is_object() || !doc.contains("objects") || !doc["objects"].is_array())
    throw SchemaError("category: missing 'objects'");
  QCategory a;
  a.q = q;
  for (const auto& o : doc["objects"]) {
    std::string id = require_string(o, "id", "category.objects");
    check_id(id, "category.objects");
    int t = q->obj(require_string(o, "type", "category.objects"));
    if (t < 0) throw SchemaError("category.objects: unknown type for '" + id + "'");
    if (a.find(id) >= 0) throw SchemaError("category.objects: duplicate id '" + id + "'");
    a.objects.push_back(id);
    a.types.push_back(t);
  }
  const int n = a.size();
  a.hom.assign(n, std::vector<Elem>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      a.hom[x][y] = (x == y) ? q->unit(a.types[x]) : q->hom(a.types[x], a.types[y]).bottom;
  if (doc.contains("hom")) {
    for (const auto& [key, value] : doc["hom"].items()) {
      auto [xs, ys] = split_pair(key, "category.hom");
      int x = a.find(xs), y = a.find(ys);
      if (x < 0 || y < 0) throw SchemaError("category.hom: unknown objects in '" + key + "'");
      a.hom[x][y] =
          find_elem(q->hom(a.types[x], a.types[y]), value.get<std::string>(), "category.hom");
    }
  }
  return a;
}

QFunctor parse_functor(const json& doc, const Workspace& ws) {
  std::string src = require_string(doc, "source", "functor");
  std::string dst = require_string(doc, "target", "functor");
  auto si = ws.categories.find(src);
  auto ti = ws.categories.find(dst);
  if (si == ws.categories.end() || ti == ws.categories.end())
    throw SchemaError("functor: unknown category '" + (si == ws.categories.end() ? src : dst) + "'");
  QFunctor f{si->second, ti->second, std::vector<int>(si->second.size(), -1)};
  if (!doc.contains("map") || !doc["map"].is_object()) throw SchemaError("functor: missing 'map'");
  for (const auto& [x, y] : doc["map"].items()) {
    int xi = f.source.find(x);
    int yi = f.target.find(y.get<std::string>());
    if (xi < 0 || yi < 0) throw SchemaError("functor.map: unknown object in '" + x + "'");
    f.map[xi] = yi;
  }
  for (int x = 0; x < f.source.size(); ++x)
    if (f.map[x] < 0) throw SchemaError("functor.map: no image for '" + f.source.objects[x] + "'");
  return f;
}

QDistributor parse_distributor(const json& doc, const Workspace& ws) {
  std::string src = require_string(doc, "source", "distributor");
  std::string dst = require_string(doc, "target", "distributor");
  auto si = ws.categories.find(src);
  auto ti = ws.categories.find(dst);
  if (si == ws.categories.end() || ti == ws.categories.end())
    throw SchemaError("distributor: unknown category '" + (si == ws.categories.end() ? src : dst) +
                      "'");
  QDistributor d = bottom_dist(si->second, ti->second);
  if (doc.contains("matrix")) {
    for (const auto& [key, value] : doc["matrix"].items()) {
      auto [xs, ys] = split_pair(key, "distributor.matrix");
      int x = d.source.find(xs), y = d.target.find(ys);
      if (x < 0 || y < 0) throw SchemaError("distributor.matrix: unknown objects in '" + key + "'");
      d.m[x][y] = find_elem(ws.q->hom(d.source.types[x], d.target.types[y]),
                            value.get<std::string>(), "distributor.matrix");
    }
  }
  return d;
}

Presheaf parse_presheaf(const json& doc, const QCategory& a) {
  int t = a.q->obj(require_string(doc, "type", "presheaf"));
  if (t < 0) throw SchemaError("presheaf: unknown type object");
  Presheaf p{t, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x) p.values[x] = a.q->hom(a.types[x], t).bottom;
  if (doc.contains("values")) {
    for (const auto& [x, value] : doc["values"].items()) {
      int xi = a.find(x);
      if (xi < 0) throw SchemaError("presheaf.values: unknown object '" + x + "'");
      p.values[xi] = find_elem(a.q->hom(a.types[xi], t), value.get<std::string>(), "presheaf.values");
    }
  }
  return p;
}

Workspace parse_workspace(const json& doc) {
  if (!doc.is_object()) throw SchemaError("workspace: expected an object");
  if (!doc.contains("quantaloid")) throw SchemaError("workspace: missing 'quantaloid'");
  Workspace ws;
  ws.q = std::make_shared<Quantaloid>(parse_quantaloid(doc["quantaloid"]));
  if (doc.contains("config")) {
    if (doc["config"].contains("cap")) ws.cap = doc["config"]["cap"].get<long long>();
  }
  if (doc.contains("categories"))
    for (const auto& [name, cat] : doc["categories"].items())
      ws.categories.emplace(name, parse_category(cat, ws.q));
  if (doc.contains("functors"))
    for (const auto& [name, f] : doc["functors"].items()) {
      ws.functors.emplace(name, parse_functor(f, ws));
      ws.functor_bounds[name] = {f["source"].get<std::string>(), f["target"].get<std::string>()};
    }
  if (doc.contains("distributors"))
    for (const auto& [name, d] : doc["distributors"].items()) {
      ws.distributors.emplace(name, parse_distributor(d, ws));
      ws.dist_bounds[name] = {d["source"].get<std::string>(), d["target"].get<std::string>()};
    }
  if (doc.contains("closure_spaces"))
    for (const auto& [name, s] : doc["closure_spaces"].items()) {
      ClosureSpaceDoc sd;
      sd.category = require_string(s, "category", "closure_space");
      if (!ws.categories.count(sd.category))
        throw SchemaError("closure_space: unknown category '" + sd.category + "'");
      if (!s.contains("closure") || !s["closure"].is_object())
        throw SchemaError("closure_space: missing 'closure' map");
      std::map<int, int> entries;
      for (const auto& [i, j] : s["closure"].items())
        entries[std::stoi(i)] = j.get<int>();
      for (const auto& [i, j] : entries) {
        if (i != static_cast<int>(sd.op.size()))
          throw SchemaError("closure_space: closure map indices must be 0..n-1");
        sd.op.push_back(j);
      }
      ws.spaces.emplace(name, std::move(sd));
    }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SchemaError("parse error in '" + path + "': " + e.what());
  }
  return parse_workspace(doc);
}

json quantaloid_json(const Quantaloid& q) {
  json doc;
  doc["objects"] = q.objects;
  const int n = q.size();
  json homs = json::object();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      json hd;
      hd["carrier"] = h.carrier;
      json leq = json::array();
      for (Elem i = 0; i < h.size(); ++i)
        for (Elem j = 0; j < h.size(); ++j)
          if (h.order[i][j]) leq.push_back({h.carrier[i], h.carrier[j]});
      hd["leq"] = leq;
      json joins = json::object(), meets = json::object();
      for (Elem i = 0; i < h.size(); ++i)
        for (Elem j = 0; j < h.size(); ++j) {
          joins[h.carrier[i] + "," + h.carrier[j]] = h.carrier[h.joins[i][j]];
          meets[h.carrier[i] + "," + h.carrier[j]] = h.carrier[h.meets[i][j]];
        }
      hd["joins"] = joins;
      hd["meets"] = meets;
      hd["top"] = h.carrier[h.top];
      hd["bottom"] = h.carrier[h.bottom];
      homs[q.objects[a] + "->" + q.objects[b]] = hd;
    }
  doc["homs"] = homs;
  json compose = json::object();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& t = q.comp[(a * n + b) * n + c];
        const HomLattice& ab = q.hom(a, b);
        const HomLattice& bc = q.hom(b, c);
        const HomLattice& ac = q.hom(a, c);
        json table = json::object();
        for (Elem g = 0; g < bc.size(); ++g)
          for (Elem f = 0; f < ab.size(); ++f)
            table[bc.carrier[g] + "," + ab.carrier[f]] = ac.carrier[t[g][f]];
        compose[q.objects[a] + "->" + q.objects[b] + "->" + q.objects[c]] = table;
      }
  doc["compose"] = compose;
  json units = json::object();
  for (int a = 0; a < n; ++a) units[q.objects[a]] = q.hom(a, a).carrier[q.units[a]];
  doc["units"] = units;
  if (q.dualizing) {
    json dual = json::object();
    for (int a = 0; a < n; ++a) dual[q.objects[a]] = q.hom(a, a).carrier[q.dualizing->d[a]];
    doc["dualizing"] = dual;
  }
  return doc;
}

json category_json(const QCategory& a) {
  json doc;
  json objs = json::array();
  for (int x = 0; x < a.size(); ++x)
    objs.push_back({{"id", a.objects[x]}, {"type", a.q->objects[a.types[x]]}});
  doc["objects"] = objs;
  json hom = json::object();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      hom[a.objects[x] + "," + a.objects[y]] =
          a.q->hom(a.types[x], a.types[y]).carrier[a.at(x, y)];
  doc["hom"] = hom;
  return doc;
}

json functor_json(const QFunctor& f, const std::string& source_name,
                  const std::string& target_name) {
  json doc;
  doc["source"] = source_name;
  doc["target"] = target_name;
  json map = json::object();
  for (int x = 0; x < f.source.size(); ++x)
    map[f.source.objects[x]] = f.target.objects[f.map[x]];
  doc["map"] = map;
  return doc;
}

json distributor_json(const QDistributor& d, const std::string& source_name,
                      const std::string& target_name) {
  json doc;
  doc["source"] = source_name;
  doc["target"] = target_name;
  json matrix = json::object();
  for (int x = 0; x < d.source.size(); ++x)
    for (int y = 0; y < d.target.size(); ++y)
      matrix[d.source.objects[x] + "," + d.target.objects[y]] =
          d.source.q->hom(d.source.types[x], d.target.types[y]).carrier[d.at(x, y)];
  doc["matrix"] = matrix;
  return doc;
}

json presheaf_json(const QCategory& a, const Presheaf& p) {
  json doc;
  doc["type"] = a.q->objects[p.type_obj];
  json values = json::object();
  for (int x = 0; x < a.size(); ++x)
    values[a.objects[x]] = a.q->hom(a.types[x], p.type_obj).carrier[p.values[x]];
  doc["values"] = values;
  return doc;
}

json space_json(const ClosureSpaceDoc& doc) {
  json out;
  out["category"] = doc.category;
  json closure = json::object();
  for (std::size_t i = 0; i < doc.op.size(); ++i) closure[std::to_string(i)] = doc.op[i];
  out["closure"] = closure;
  return out;
}

json workspace_json(const Workspace& ws) {
  json doc;
  doc["quantaloid"] = quantaloid_json(*ws.q);
  json cats = json::object();
  for (const auto& [name, cat] : ws.categories) cats[name] = category_json(cat);
  doc["categories"] = cats;
  json fns = json::object();
  for (const auto& [name, f] : ws.functors) {
    auto bounds = ws.functor_bounds.at(name);
    fns[name] = functor_json(f, bounds.first, bounds.second);
  }
  doc["functors"] = fns;
  json dists = json::object();
  for (const auto& [name, d] : ws.distributors) {
    auto bounds = ws.dist_bounds.at(name);
    dists[name] = distributor_json(d, bounds.first, bounds.second);
  }
  doc["distributors"] = dists;
  json spaces = json::object();
  for (const auto& [name, s] : ws.spaces) spaces[name] = space_json(s);
  doc["closure_spaces"] = spaces;
  doc["config"] = {{"cap", ws.cap}};
  return doc;
}

json lattice_json(const FixedPointLattice& lattice) {
  json doc;
  doc["kind"] = lattice.kind;
  json concepts = json::array();
  for (std::size_t k = 0; k < lattice.extents.size(); ++k) {
    json c;
    c["id"] = lattice.cat.objects[k];
    c["type"] = lattice.base.q->objects[lattice.extents[k].type_obj];
    json extent = json::object();
    const QCategory& base = lattice.base;
    for (int x = 0; x < base.size(); ++x)
      extent[base.objects[x]] =
          base.q->hom(base.types[x], lattice.extents[k].type_obj).carrier[lattice.extents[k].values[x]];
    c["extent"] = extent;
    if (!lattice.intents.empty()) {
      json intent = json::object();
      const QCategory& target = lattice.phi.target;
      for (int y = 0; y < target.size(); ++y)
        intent[target.objects[y]] = target.q->hom(lattice.intents[k].type_obj, target.types[y])
                                        .carrier[lattice.intents[k].values[y]];
      c["intent"] = intent;
    }
    concepts.push_back(c);
  }
  doc["concepts"] = concepts;
  json hom = json::object();
  for (int i = 0; i < lattice.cat.size(); ++i)
    for (int j = 0; j < lattice.cat.size(); ++j)
      hom[lattice.cat.objects[i] + "," + lattice.cat.objects[j]] =
          lattice.cat.q->hom(lattice.cat.types[i], lattice.cat.types[j])
              .carrier[lattice.cat.at(i, j)];
  doc["hom"] = hom;
  return doc;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

Report validate_workspace(const Workspace& ws) {
  Report r;
  Report rq = validate_quantaloid(*ws.q);
  for (const auto& v : rq.items()) r.add("quantaloid." + v.law, v.witness, v.structural);
  if (ws.q->dualizing) {
    Report rd = validate_dualizing_family(*ws.q, *ws.q->dualizing);
    for (const auto& v : rd.items()) r.add("quantaloid." + v.law, v.witness, v.structural);
  }
  for (const auto& [name, cat] : ws.categories) {
    Report rc = validate_category(cat);
    for (const auto& v : rc.items()) r.add("category." + name + "." + v.law, v.witness, v.structural);
  }
  for (const auto& [name, f] : ws.functors) {
    FunctorReport fr = validate_functor(f);
    if (!fr.is_functor) {
      if (fr.report.ok())
        r.add("functor." + name, "not a functor");
      else
        for (const auto& v : fr.report.items())
          r.add("functor." + name + "." + v.law, v.witness, v.structural);
    }
  }
  for (const auto& [name, d] : ws.distributors) {
    Report rd = validate_distributor(d);
    for (const auto& v : rd.items())
      r.add("distributor." + name + "." + v.law, v.witness, v.structural);
  }
  for (const auto& [name, sd] : ws.spaces) {
    try {
      resolve_space(ws, sd);
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      r.add("closure_space." + name, e.what());
    }
  }
  return r;
}

QClosureSpace resolve_space(const Workspace& ws, const ClosureSpaceDoc& doc) {
  auto it = ws.categories.find(doc.category);
  if (it == ws.categories.end())
    throw SchemaError("closure_space: unknown category '" + doc.category + "'");
  return make_closure_space(it->second, doc.op, ws.cap);
}

}  // namespace qlab
