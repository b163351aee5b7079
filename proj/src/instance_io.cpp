#include "hodgelef/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace hodgelef {

namespace {

GaussRational parse_scalar(const Json& j) {
  if (j.is_string()) return parse_gauss(j.get<std::string>());
  if (j.is_number_integer()) return GaussRational(j.get<long>());
  throw StructuralError("scalar must be a string or an integer, got " + j.dump());
}

int parse_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw StructuralError(what + " must be an integer");
  return j.get<int>();
}

int parse_int_key(const std::string& key, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw StructuralError("malformed " + what + " key '" + key + "'");
}

const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw StructuralError(std::string("missing field \"") + key + "\"");
  return *it;
}

// An empty list stands for a matrix with no rows; its column count comes
// from the caller.
GMatrix parse_matrix(const Json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw StructuralError("matrix must be a list of rows");
  if (j.empty()) return GMatrix(0, cols_if_empty);
  std::vector<std::vector<GaussRational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw StructuralError("matrix row must be a list");
    std::vector<GaussRational> r;
    for (const auto& x : row) r.push_back(parse_scalar(x));
    rows.push_back(std::move(r));
  }
  return GMatrix::from_rows(rows);
}

HodgeTable parse_table(const Json& j, const std::string& what) {
  if (!j.is_object()) throw StructuralError(what + " must be an object keyed by \"p,q\"");
  HodgeTable t;
  for (const auto& [key, val] : j.items()) t[parse_bigrade_key(key)] = parse_int(val, what + " entry");
  return t;
}

MorphicFiltration parse_filtration(const Json& j, const HodgeFrame& frame) {
  if (!j.is_object()) throw StructuralError("filtration must be an object keyed by t");
  MorphicFiltration f(frame);
  for (const auto& [tkey, by_k] : j.items()) {
    int t = parse_int_key(tkey, "filtration level");
    if (!by_k.is_object()) throw StructuralError("filtration level must be an object keyed by k");
    for (const auto& [kkey, vecs] : by_k.items()) {
      int k = parse_int_key(kkey, "filtration degree");
      if (k < 0 || k > frame.top_degree()) throw StructuralError("filtration degree " + kkey + " out of range");
      if (!vecs.is_array()) throw StructuralError("filtration entry must be a list of vectors");
      std::vector<GVector> cols;
      for (const auto& v : vecs) {
        GVector x = parse_vector(v);
        if (x.size() != frame.betti(k))
          throw StructuralError("filtration vector at (t=" + tkey + ", k=" + kkey + ") has length " +
                                std::to_string(x.size()) + ", expected " + std::to_string(frame.betti(k)));
        cols.push_back(std::move(x));
      }
      f.set(t, k, GMatrix::from_columns(frame.betti(k), cols));
    }
  }
  for (int k = 0; k <= frame.top_degree(); ++k)
    for (int t = (k + 1) / 2; t < frame.m(); ++t)
      if (!f.has(t, k))
        throw StructuralError("filtration level (t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                              ") must be given explicitly");
  return f;
}

Instance parse_free(const Json& j) {
  if (!j.is_object()) throw StructuralError("\"free\" must be an object");
  PrimitiveDiamond d;
  d.m = parse_int(member(j, "m"), "m");
  d.b = parse_table(member(j, "primitive"), "primitive");
  Instance inst;
  inst.algebra = free_algebra(d);
  return inst;
}

Instance parse_explicit(const Json& j) {
  int m = parse_int(member(j, "m"), "m");
  HodgeFrame frame = HodgeFrame::build(parse_table(member(j, "hodge"), "hodge"), m);
  BlockMap l_blocks, conj_blocks;
  DegreeMap gram;
  for (const auto& [key, val] : member(j, "L_blocks").items()) {
    Bigrade b = parse_bigrade_key(key);
    l_blocks[b] = parse_matrix(val, static_cast<std::size_t>(frame.hodge(b)));
  }
  for (const auto& [key, val] : member(j, "gram_blocks").items()) {
    int k = parse_int_key(key, "Gram degree");
    gram[k] = parse_matrix(val, k >= 0 && k <= frame.top_degree() ? frame.betti(k) : 0);
  }
  for (const auto& [key, val] : member(j, "conj_blocks").items()) {
    Bigrade b = parse_bigrade_key(key);
    conj_blocks[b] = parse_matrix(val, static_cast<std::size_t>(frame.hodge(b)));
  }
  Instance inst;
  inst.algebra = LefschetzAlgebra::from_blocks(std::move(frame), l_blocks, gram, conj_blocks);
  return inst;
}

}  // namespace

Bigrade parse_bigrade_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw StructuralError("bigrade key '" + key + "' must look like \"p,q\"");
  return {parse_int_key(key.substr(0, comma), "bigrade"), parse_int_key(key.substr(comma + 1), "bigrade")};
}

std::string bigrade_key(Bigrade b) { return std::to_string(b.p) + "," + std::to_string(b.q); }

GVector parse_vector(const Json& j) {
  if (!j.is_array()) throw StructuralError("vector must be a list of scalars");
  GVector v;
  for (const auto& x : j) v.push_back(parse_scalar(x));
  return v;
}

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw StructuralError("instance must be a JSON object");
  if (doc.contains("free") && doc.contains("L_blocks"))
    throw StructuralError("instance cannot be both free and explicit");
  Instance inst = doc.contains("free") ? parse_free(doc.at("free")) : parse_explicit(doc);
  const HodgeFrame& frame = inst.algebra.frame();
  inst.filtration = doc.contains("filtration") ? parse_filtration(doc.at("filtration"), frame)
                                                : MorphicFiltration::maximal(frame);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw StructuralError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return parse_instance(doc);
}

Json scalar_json(const GaussRational& z) { return to_string(z); }

Json vector_json(const GVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Json matrix_json(const GMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json emit_instance(const Instance& inst) {
  const LefschetzAlgebra& a = inst.algebra;
  const HodgeFrame& f = a.frame();
  Json doc;
  doc["m"] = f.m();
  Json hodge = Json::object();
  for (const auto& [b, dim] : f.table()) hodge[bigrade_key(b)] = dim;
  doc["hodge"] = hodge;
  Json l = Json::object(), c = Json::object(), g = Json::object();
  for (int k = 0; k <= f.top_degree(); ++k) {
    g[std::to_string(k)] = matrix_json(a.gram(k));
    for (const auto& b : f.blocks(k)) {
      if (f.hodge(b) == 0) continue;
      if (f.hodge(b.p + 1, b.q + 1) > 0) l[bigrade_key(b)] = matrix_json(a.L_block(b));
      c[bigrade_key(b)] = matrix_json(a.conj_block(b));
    }
  }
  doc["L_blocks"] = l;
  doc["gram_blocks"] = g;
  doc["conj_blocks"] = c;
  Json filt = Json::object();
  for (const auto& [tk, span] : inst.filtration.stored()) {
    Json vecs = Json::array();
    for (const auto& col : span.columns()) vecs.push_back(vector_json(col));
    filt[std::to_string(tk.first)][std::to_string(tk.second)] = vecs;
  }
  doc["filtration"] = filt;
  return doc;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << emit_instance(inst).dump(2) << "\n";
}

}  // namespace hodgelef
