#include "hopfdual/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfdual {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field_of(const Json& obj, const std::string& at, const std::string& key) {
  if (!obj.is_object()) throw ParseError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(child(at, key), "missing");
  return *it;
}

Index read_dim(const Json& obj, const std::string& at) {
  const Json& d = field_of(obj, at, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError(child(at, "dim"), "expected a nonnegative integer");
  return d.get<Index>();
}

template <class K>
K read_scalar(const FieldSpec& f, const Json& v, const std::string& at) {
  if (!v.is_string()) throw ParseError(at, "scalars are strings");
  try {
    return parse_scalar<K>(f, v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(at, "bad scalar \"" + v.get<std::string>() + "\": " + e.what());
  }
}

const Json& read_array(const Json& v, const std::string& at, Index size) {
  if (!v.is_array()) throw ParseError(at, "expected an array");
  if (static_cast<Index>(v.size()) != size)
    throw ParseError(at, "expected " + std::to_string(size) + " entries, found " + std::to_string(v.size()));
  return v;
}

template <class K>
Vector<K> read_vector(const FieldSpec& f, const Json& v, const std::string& at, Index size) {
  read_array(v, at, size);
  Vector<K> out(size);
  for (Index i = 0; i < size; ++i) out(i) = read_scalar<K>(f, v[i], child(at, i));
  return out;
}

template <class K>
Matrix<K> read_matrix(const FieldSpec& f, const Json& v, const std::string& at, Index rows, Index cols) {
  read_array(v, at, rows);
  Matrix<K> out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const std::string ri = child(at, i);
    read_array(v[i], ri, cols);
    for (Index j = 0; j < cols; ++j) out(i, j) = read_scalar<K>(f, v[i][j], child(ri, j));
  }
  return out;
}

template <class K>
Tensor3<K> read_tensor(const FieldSpec& f, const Json& v, const std::string& at, Index dim) {
  read_array(v, at, dim);
  Tensor3<K> out(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) {
    const Matrix<K> m = read_matrix<K>(f, v[i], child(at, i), dim, dim);
    out[i].assign(static_cast<std::size_t>(dim), std::vector<K>(static_cast<std::size_t>(dim)));
    for (Index j = 0; j < dim; ++j)
      for (Index k = 0; k < dim; ++k) out[i][j][k] = m(j, k);
  }
  return out;
}

template <class K>
Json export_tensor(const Tensor3<K>& t) {
  Json out = Json::array();
  for (const auto& slab : t) {
    Json s = Json::array();
    for (const auto& row : slab) {
      Json r = Json::array();
      for (const K& x : row) r.push_back(to_string(x));
      s.push_back(std::move(r));
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <class K>
Algebra<K> read_algebra(const FieldSpec& f, const Json& obj, const std::string& at) {
  const Index dim = read_dim(obj, at);
  Tensor3<K> mul = read_tensor<K>(f, field_of(obj, at, "mul"), child(at, "mul"), dim);
  Vector<K> unit = read_vector<K>(f, field_of(obj, at, "unit"), child(at, "unit"), dim);
  return Algebra<K>::from_table(f, mul, std::move(unit));
}

template <class K>
HopfAlgebra<K> read_hopf(const FieldSpec& f, const Json& obj, const std::string& at) {
  HopfAlgebra<K> h;
  h.algebra = read_algebra<K>(f, obj, at);
  const Index dim = h.algebra.dim();
  Tensor3<K> comul = read_tensor<K>(f, field_of(obj, at, "comul"), child(at, "comul"), dim);
  Vector<K> counit = read_vector<K>(f, field_of(obj, at, "counit"), child(at, "counit"), dim);
  h.coalgebra = Coalgebra<K>::from_table(f, comul, std::move(counit));
  h.antipode = read_matrix<K>(f, field_of(obj, at, "antipode"), child(at, "antipode"), dim, dim);
  return h;
}

Json export_checks(const AxiomReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::to_string(line) + ":" + std::to_string(column), "syntax error");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_json(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.location(), "syntax error");
  }
}

FieldSpec instance_field(const Json& doc) {
  const Json& v = field_of(doc, "", "version");
  if (!v.is_number_integer() || v.get<int>() != kInstanceFormatVersion)
    throw ParseError("/version", "unsupported format version (expected " + std::to_string(kInstanceFormatVersion) + ")");
  const Json& f = field_of(doc, "", "field");
  if (!f.is_string()) throw ParseError("/field", "expected \"q\" or \"gf:p\"");
  try {
    return FieldSpec::parse(f.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError("/field", e.what());
  }
}

template <class K>
Json export_matrix(const Matrix<K>& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class K>
Json export_vector(const Vector<K>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

template <class K>
Json export_algebra(const Algebra<K>& a) {
  Json out;
  out["dim"] = a.dim();
  out["mul"] = export_tensor(a.table());
  out["unit"] = export_vector(a.unit());
  return out;
}

template <class K>
Json export_hopf(const HopfAlgebra<K>& h) {
  Json out = export_algebra(h.algebra);
  out["comul"] = export_tensor(h.coalgebra.table());
  out["counit"] = export_vector(h.coalgebra.counit);
  out["antipode"] = export_matrix(h.antipode);
  return out;
}

template <class K>
Json export_instance(const Instance<K>& inst) {
  Json out;
  out["format"] = "hopfdual-instance";
  out["version"] = kInstanceFormatVersion;
  out["name"] = inst.name;
  out["description"] = inst.description;
  out["field"] = inst.field.to_string();
  out["hopf"] = export_hopf(inst.hopf);
  if (inst.comodule) {
    Json c = export_algebra(inst.comodule->algebra);
    c["coaction"] = export_matrix(inst.comodule->coaction);
    out["comodule_algebra"] = std::move(c);
  }
  Json mods = Json::array();
  for (const auto& m : inst.modules) {
    Json e;
    e["name"] = m.name;
    e["dim"] = m.module.dim;
    e["right_action"] = export_matrix(m.module.right_action);
    e["coaction"] = export_matrix(m.module.coaction);
    mods.push_back(std::move(e));
  }
  out["modules"] = std::move(mods);
  return out;
}

template <class K>
Instance<K> import_instance(const Json& doc) {
  Instance<K> inst;
  inst.field = instance_field(doc);
  if (!field_matches<K>(inst.field)) throw ParseError("/field", "field does not match the scalar type");
  const FieldSpec& f = inst.field;
  const Json& name = field_of(doc, "", "name");
  if (!name.is_string()) throw ParseError("/name", "expected a string");
  inst.name = name.get<std::string>();
  if (auto it = doc.find("description"); it != doc.end() && it->is_string()) inst.description = it->get<std::string>();
  inst.hopf = read_hopf<K>(f, field_of(doc, "", "hopf"), "/hopf");
  const Index dh = inst.hopf.dim();
  Index da = 0;
  if (auto it = doc.find("comodule_algebra"); it != doc.end()) {
    ComoduleAlgebra<K> c;
    c.algebra = read_algebra<K>(f, *it, "/comodule_algebra");
    c.hopf = inst.hopf;
    da = c.algebra.dim();
    c.coaction = read_matrix<K>(f, field_of(*it, "/comodule_algebra", "coaction"), "/comodule_algebra/coaction",
                                da * dh, da);
    inst.comodule = std::move(c);
  }
  if (auto it = doc.find("modules"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("/modules", "expected an array");
    if (!it->empty() && !inst.comodule) throw ParseError("/modules", "modules need a comodule algebra");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = child("/modules", i);
      const Json& e = (*it)[i];
      const Json& mn = field_of(e, at, "name");
      if (!mn.is_string()) throw ParseError(child(at, "name"), "expected a string");
      RelativeHopfModule<K> m;
      m.dim = read_dim(e, at);
      m.right_action = read_matrix<K>(f, field_of(e, at, "right_action"), child(at, "right_action"), m.dim, m.dim * da);
      m.coaction = read_matrix<K>(f, field_of(e, at, "coaction"), child(at, "coaction"), m.dim * dh, m.dim);
      inst.modules.push_back({mn.get<std::string>(), std::move(m)});
    }
  }
  return inst;
}

namespace {

bool is_flat(const Json& v) {
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

void write(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + Json(key).dump() + ": ";
      write(out, value, indent + 2);
      out += ++k < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (v.is_array() && !v.empty() && !is_flat(v)) {
    out += "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      out += pad;
      write(out, v[k], indent + 2);
      out += k + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (v.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].dump();
    out += "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string dump(const Json& doc) {
  std::string out;
  write(out, doc, 0);
  return out + "\n";
}

Json report_json(const AxiomReport& r) {
  Json out;
  out["passed"] = r.passed();
  out["checks"] = export_checks(r);
  return out;
}

template <class K>
Json report_json(const SuiteResult<K>& r, const FieldSpec& field) {
  Json out;
  out["suite"] = r.suite;
  out["instance"] = r.instance;
  out["module"] = r.module_name;
  out["field"] = field.to_string();
  out["status"] = to_string(r.status);
  out["message"] = r.message;
  Json dims = Json::array();
  for (const auto& [name, d] : r.dims) dims.push_back(Json{{"name", name}, {"dim", d}});
  out["dims"] = std::move(dims);
  out["checks"] = export_checks(r.checks);
  Json rings = Json::array();
  for (const auto& c : r.rings) {
    Json e;
    e["name"] = c.name;
    e["claim"] = to_string(c.claim);
    e["dim_source"] = c.source.dim();
    e["dim_target"] = c.target.dim();
    e["rank"] = c.rank;
    e["bijective"] = c.bijective;
    e["unital"] = c.unital;
    e["multiplicative"] = c.multiplicative;
    e["anti_multiplicative"] = c.anti_multiplicative;
    e["generator_mode"] = c.generator_mode;
    e["passed"] = c.passed();
    if (c.witness) {
      e["witness"] = Json{{"i", c.witness->i},
                          {"j", c.witness->j},
                          {"image_of_product", export_vector(c.witness->image_of_product)},
                          {"product_of_images", export_vector(c.witness->product_of_images)}};
    } else {
      e["witness"] = nullptr;
    }
    e["map"] = export_matrix(c.map);
    rings.push_back(std::move(e));
  }
  out["ring_certificates"] = std::move(rings);
  Json lin = Json::array();
  for (const auto& c : r.linear) {
    Json e;
    e["name"] = c.name;
    e["source"] = c.source_description;
    e["target"] = c.target_description;
    e["dim_source"] = c.dim_source;
    e["dim_target"] = c.dim_target;
    e["rank"] = c.rank;
    e["bijective"] = c.bijective;
    e["passed"] = c.passed();
    e["map"] = export_matrix(c.map);
    lin.push_back(std::move(e));
  }
  out["linear_certificates"] = std::move(lin);
  if (r.galois) {
    const GaloisEvidence& g = *r.galois;
    out["galois"] = Json{{"galois", g.galois},         {"dim_coinvariants", g.dim_coinvariants},
                         {"dim_source", g.dim_source}, {"dim_target", g.dim_target},
                         {"rank", g.rank},             {"detail", g.detail}};
  } else {
    out["galois"] = nullptr;
  }
  return out;
}

template <class K>
std::string report_text(const SuiteResult<K>& r, const FieldSpec& field) {
  std::ostringstream os;
  os << r.suite << " on " << r.instance;
  if (!r.module_name.empty()) os << " (module " << r.module_name << ")";
  os << " over " << field.to_string() << ": " << to_string(r.status);
  if (!r.message.empty()) os << " - " << r.message;
  os << "\n";
  for (const auto& [name, d] : r.dims) os << "  dim " << name << " = " << d << "\n";
  for (const auto& c : r.checks.checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& c : r.rings) {
    os << "  ring " << (c.passed() ? "ok  " : "FAIL") << " " << c.name << ": rank " << c.rank << " of "
       << c.source.dim() << " -> " << c.target.dim() << ", claim " << to_string(c.claim)
       << ", bijective " << c.bijective << ", unital " << c.unital << ", multiplicative " << c.multiplicative
       << ", anti " << c.anti_multiplicative << (c.generator_mode ? ", generator pairs" : ", all basis pairs") << "\n";
    if (c.witness) {
      os << "    witness (" << c.witness->i << ", " << c.witness->j << "): f(e_i e_j) = " << export_vector(c.witness->image_of_product).dump()
         << ", product of images = " << export_vector(c.witness->product_of_images).dump() << "\n";
    }
  }
  for (const auto& c : r.linear)
    os << "  linear " << (c.passed() ? "ok  " : "FAIL") << " " << c.name << ": rank " << c.rank << ", "
       << c.dim_source << " -> " << c.dim_target << "\n";
  if (r.galois)
    os << "  galois " << r.galois->galois << ": dim B = " << r.galois->dim_coinvariants << ", rank can = "
       << r.galois->rank << " (" << r.galois->dim_source << " -> " << r.galois->dim_target << ")"
       << (r.galois->detail.empty() ? "" : ", " + r.galois->detail) << "\n";
  return os.str();
}

#define HOPFDUAL_INSTANTIATE_IO(K)                                           \
  template Json export_matrix(const Matrix<K>&);                             \
  template Json export_vector(const Vector<K>&);                             \
  template Json export_algebra(const Algebra<K>&);                           \
  template Json export_hopf(const HopfAlgebra<K>&);                          \
  template Json export_instance(const Instance<K>&);                         \
  template Instance<K> import_instance(const Json&);                         \
  template Json report_json(const SuiteResult<K>&, const FieldSpec&);       \
  template std::string report_text(const SuiteResult<K>&, const FieldSpec&);

HOPFDUAL_INSTANTIATE_IO(Rational)
HOPFDUAL_INSTANTIATE_IO(ModP)

}  // namespace hopfdual
