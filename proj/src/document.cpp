#include "ilat/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ilat {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::map<std::string, std::string> read_label_map(const json& j, const char* field) {
  if (!j.is_object()) parse_fail(std::string(field) + " must be an object of labels");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      parse_fail(std::string(field) + " values must be labels");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

std::vector<std::uint8_t> map_to_permutation(
    const std::map<std::string, std::string>& m, const FiniteLattice& L,
    const char* field) {
  std::map<std::string, int> index;
  for (int i = 0; i < L.n; ++i) index[L.labels[i]] = i;
  std::vector<std::uint8_t> out(L.n, 0);
  std::vector<bool> set(L.n, false);
  for (const auto& [from, to] : m) {
    auto a = index.find(from), b = index.find(to);
    if (a == index.end()) parse_fail(std::string(field) + " references unknown label " + from);
    if (b == index.end()) parse_fail(std::string(field) + " references unknown label " + to);
    out[a->second] = static_cast<std::uint8_t>(b->second);
    set[a->second] = true;
  }
  for (int i = 0; i < L.n; ++i)
    if (!set[i]) parse_fail(std::string(field) + " misses label " + L.labels[i]);
  return out;
}

}  // namespace

InvolutionLattice Structure::as_involution() const {
  if (!invol) throw Error(ErrorCode::ParseError, "structure carries no involution");
  return attach_involution(lat, *invol);
}

BZLattice Structure::as_bz() const {
  if (!brouwer) throw Error(ErrorCode::ParseError, "structure carries no Brouwer complement");
  return attach_brouwer(as_involution(), *brouwer);
}

LatticeDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!j.is_object()) parse_fail("document must be a JSON object");
  LatticeDocument doc;
  if (!j.contains("format_version") || !j["format_version"].is_number_integer())
    parse_fail("format_version must be an integer");
  doc.format_version = j["format_version"].get<int>();
  if (doc.format_version != 1)
    parse_fail("unsupported format_version " + std::to_string(doc.format_version));

  if (!j.contains("elements") || !j["elements"].is_array())
    parse_fail("elements must be an array of labels");
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) parse_fail("elements must be strings");
    doc.elements.push_back(e.get<std::string>());
  }
  if (!j.contains("covers") || !j["covers"].is_array())
    parse_fail("covers must be an array of label pairs");
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      parse_fail("each cover must be a pair of labels");
    doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  if (j.contains("involution")) doc.involution = read_label_map(j["involution"], "involution");
  if (j.contains("brouwer")) {
    if (j["brouwer"].is_string()) {
      if (j["brouwer"].get<std::string>() != "trivial")
        parse_fail("brouwer must be a label map or the tag \"trivial\"");
      doc.brouwer_trivial = true;
    } else {
      doc.brouwer = read_label_map(j["brouwer"], "brouwer");
    }
  }
  return doc;
}

Structure build_structure(const LatticeDocument& doc) {
  const int n = static_cast<int>(doc.elements.size());
  if (n == 0) throw Error(ErrorCode::EmptyInput, "document has no elements");
  if (n > kMaxElements) throw Error(ErrorCode::CapExceeded, "too many elements");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (index.count(doc.elements[i])) parse_fail("duplicate label " + doc.elements[i]);
    index[doc.elements[i]] = i;
  }

  std::vector<Mask> reach(n, 0);
  for (int i = 0; i < n; ++i) reach[i] = bit(i);
  for (const auto& [a, b] : doc.covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) parse_fail("cover references unknown label " + a);
    if (ib == index.end()) parse_fail("cover references unknown label " + b);
    reach[ia->second] |= bit(ib->second);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y : bits(reach[x])) {
        Mask merged = reach[x] | reach[y];
        if (merged != reach[x]) {
          reach[x] = merged;
          changed = true;
        }
      }
  }
  for (int x = 0; x < n; ++x)
    for (int y : bits(reach[x]))
      if (x != y && ((reach[y] >> x) & 1))
        parse_fail("covers contain a cycle through " + doc.elements[x]);

  Structure s{validate(reach, doc.elements), std::nullopt, std::nullopt};
  if (doc.involution) {
    s.invol = map_to_permutation(*doc.involution, s.lat, "involution");
    s.as_involution();  // validate the axioms eagerly
  }
  if (doc.brouwer || doc.brouwer_trivial) {
    if (!s.invol) parse_fail("brouwer requires an involution");
    if (doc.brouwer_trivial) {
      BZLattice b = trivial_brouwer(s.as_involution());
      s.brouwer = b.brouwer;
    } else {
      s.brouwer = map_to_permutation(*doc.brouwer, s.lat, "brouwer");
      s.as_bz();  // validate the axioms
    }
  }
  return s;
}

Structure parse_structure(const std::string& text) {
  return build_structure(parse_document(text));
}

LatticeDocument to_document(const FiniteLattice& L) {
  LatticeDocument doc;
  doc.elements = L.labels;
  for (auto [a, b] : L.covers) doc.covers.emplace_back(L.labels[a], L.labels[b]);
  return doc;
}

LatticeDocument to_document(const InvolutionLattice& L) {
  LatticeDocument doc = to_document(L.base);
  std::map<std::string, std::string> inv;
  for (int x = 0; x < L.n(); ++x) inv[L.base.labels[x]] = L.base.labels[L.inv(x)];
  doc.involution = std::move(inv);
  return doc;
}

LatticeDocument to_document(const BZLattice& L) {
  LatticeDocument doc = to_document(L.base);
  if (L.has_trivial_brouwer()) {
    doc.brouwer_trivial = true;
  } else {
    std::map<std::string, std::string> b;
    for (int x = 0; x < L.n(); ++x)
      b[L.base.base.labels[x]] = L.base.base.labels[L.bz(x)];
    doc.brouwer = std::move(b);
  }
  return doc;
}

LatticeDocument to_document(const Structure& s) {
  if (s.brouwer) return to_document(s.as_bz());
  if (s.invol) return to_document(s.as_involution());
  return to_document(s.lat);
}

std::string emit_json(const LatticeDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["elements"] = doc.elements;
  json covers = json::array();
  for (const auto& [a, b] : doc.covers) covers.push_back(json::array({a, b}));
  j["covers"] = std::move(covers);
  if (doc.involution) {
    json inv = json::object();
    for (const auto& [a, b] : *doc.involution) inv[a] = b;
    j["involution"] = std::move(inv);
  }
  if (doc.brouwer_trivial) {
    j["brouwer"] = "trivial";
  } else if (doc.brouwer) {
    json b = json::object();
    for (const auto& [a, v] : *doc.brouwer) b[a] = v;
    j["brouwer"] = std::move(b);
  }
  return j.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string emit_dot(const Structure& s, bool show_involution) {
  const FiniteLattice& L = s.lat;
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int x = 0; x < L.n; ++x) out << "  " << dot_quote(L.labels[x]) << ";\n";
  for (auto [a, b] : L.covers)
    out << "  " << dot_quote(L.labels[a]) << " -> " << dot_quote(L.labels[b]) << ";\n";
  if (show_involution && s.invol) {
    const auto& inv = *s.invol;
    for (int x = 0; x < L.n; ++x)
      if (x < inv[x])
        out << "  " << dot_quote(L.labels[x]) << " -> " << dot_quote(L.labels[inv[x]])
            << " [style=dashed, dir=none, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_partition(const Partition& p, const std::vector<std::string>& labels) {
  std::string out = "[";
  bool first_class = true;
  for (const auto& cls : p.classes()) {
    if (!first_class) out += ",";
    first_class = false;
    out += "[";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ",";
      out += labels[cls[i]];
    }
    out += "]";
  }
  return out + "]";
}

std::string census_record_json(const CensusRecord& record) {
  json j;
  j["n"] = record.n;
  j["lattice_class_count"] = record.lattice_class_count;
  j["i_lattice_class_count"] = record.i_lattice_class_count;
  json hist = json::object();
  for (const auto& [count, classes] : record.histogram)
    hist[std::to_string(count)] = classes;
  j["histogram"] = std::move(hist);
  j["max_i_congruences"] = record.max_i_congruences;
  j["extremal_witnesses"] = record.extremal_witnesses;
  j["runner_up"] = record.runner_up;
  j["runner_up_witnesses"] = record.runner_up_witnesses;
  return j.dump(2) + "\n";
}

std::string census_record_csv(const CensusRecord& record) {
  std::string out = "con_i_count,classes\n";
  for (const auto& [count, classes] : record.histogram)
    out += std::to_string(count) + "," + std::to_string(classes) + "\n";
  return out;
}

}  // namespace ilat
