#include "hamwalk/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hamwalk/builtin.hpp"

namespace hamwalk::io {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::FormatError, what); }

void reject_unknown(const json& j, const std::set<std::string>& allowed, std::string_view what) {
  if (!j.is_object()) format_error(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.contains(key)) format_error("unknown field '" + key + "' in " + std::string(what));
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) format_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    format_error(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Group parse_group(const json& j, std::size_t default_cap) {
  if (j.is_object() && j.contains("table")) {
    reject_unknown(j, {"name", "labels", "table"}, "group file");
    auto table = field<std::vector<std::vector<Elem>>>(j, "table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
    std::string name = j.contains("name") ? field<std::string>(j, "name") : "";
    return Group::from_table(table, std::move(labels), std::move(name));
  }
  if (j.is_object() && j.contains("perm_gens")) {
    reject_unknown(j, {"name", "degree", "perm_gens", "cap"}, "group file");
    auto degree = field<std::size_t>(j, "degree");
    auto gens = field<std::vector<std::vector<std::uint32_t>>>(j, "perm_gens");
    for (const auto& p : gens)
      if (p.size() != degree) format_error("permutation length differs from degree");
    std::size_t cap = j.contains("cap") ? field<std::size_t>(j, "cap") : default_cap;
    std::string name = j.contains("name") ? field<std::string>(j, "name") : "";
    return group_from_permutations(gens, cap, std::move(name));
  }
  format_error("group file needs either 'table' or 'perm_gens'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

Group load_group(std::string_view source, std::size_t cap) {
  if (source.starts_with("builtin:")) {
    Group g = builtin::by_name(source, cap);
    g.set_name(std::string(source));
    return g;
  }
  json j;
  try {
    j = json::parse(read_file(std::string(source)));
  } catch (const json::parse_error& e) {
    format_error(std::string(source) + ": " + e.what());
  }
  Group g = parse_group(j, cap);
  if (g.order() > cap)
    throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
  if (g.name().empty()) g.set_name(std::string(source));
  return g;
}

std::vector<std::string> split_gens(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' || depth > 0) {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

GenSet parse_gens(const Group& g, std::string_view list) {
  std::vector<GenSet::Entry> entries;
  for (const auto& tok : split_gens(list)) {
    if (auto x = g.find(tok)) {
      entries.push_back({tok, *x});
      continue;
    }
    Elem idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
    if (ec == std::errc() && ptr == tok.data() + tok.size() && !tok.empty() && idx < g.order()) {
      entries.push_back({g.label(idx), idx});
      continue;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator '" + tok + "'");
  }
  if (entries.empty()) throw Error(ErrorKind::EmptyGenSet, "no generators given");
  return GenSet(std::move(entries));
}

json walk_to_json(const WalkFile& w) {
  return json{{"group", w.group},   {"gens", w.gens},         {"start", w.start},
              {"steps", w.steps},   {"vertices", w.vertices}, {"kind", std::string(to_string(w.kind))},
              {"verified", w.verified}};
}

WalkFile walk_from_json(const json& j) {
  reject_unknown(j, {"group", "gens", "start", "steps", "vertices", "kind", "verified"}, "walk file");
  WalkFile w;
  w.group = field<std::string>(j, "group");
  w.gens = field<std::vector<std::string>>(j, "gens");
  w.start = field<std::size_t>(j, "start");
  w.steps = field<std::vector<std::string>>(j, "steps");
  w.vertices = field<std::vector<std::size_t>>(j, "vertices");
  w.kind = parse_walk_kind(field<std::string>(j, "kind"));
  w.verified = field<bool>(j, "verified");
  return w;
}

WalkFile make_walk_file(std::string group_source, const GenSet& s, const Walk& w, WalkKind kind,
                        bool verified) {
  WalkFile f;
  f.group = std::move(group_source);
  f.gens = s.labels();
  f.start = w.start;
  f.steps = step_labels(s, w);
  f.vertices = w.vertices;
  f.kind = kind;
  f.verified = verified;
  return f;
}

json series_to_json(const Group& g, const SubnormalSeries& s) {
  json chain = json::array();
  for (const auto& h : s.chain) {
    json members = json::array();
    for (Elem x : h.members()) members.push_back(g.label(x));
    chain.push_back(members);
  }
  json conj = json::array();
  for (Elem x : s.conjugators) conj.push_back(g.label(x));
  return json{{"chain", chain},
              {"conjugators", conj},
              {"quotient_orders", s.quotient_orders()},
              {"length", s.length()}};
}

}  // namespace hamwalk::io
