#include "ulam/io.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ulam {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::uint64_t parse_u64(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::parse_error, std::string(what) + ": bad integer '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    fail(Errc::parse_error, std::string(what) + ": integer out of range '" + tok + "'");
  }
}

PermString parse_member_line(const std::string& line, std::size_t len, std::size_t lineno) {
  std::vector<std::string> toks = tokens_of(line);
  if (toks.size() != len)
    fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " + std::to_string(len) +
                                " symbols, found " + std::to_string(toks.size()));
  PermString p;
  p.reserve(len);
  for (const std::string& t : toks) {
    std::uint64_t v = parse_u64(t, "member symbol");
    if (v == 0 || v > 0xffffffffull)
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": symbol " + t + " out of range");
    p.push_back(static_cast<Sym>(v));
  }
  if (!is_contiguous_perm(p))
    fail(Errc::parse_error,
         "line " + std::to_string(lineno) + ": not a permutation of 1.." + std::to_string(len));
  return p;
}

bool family_has_duplicates(const std::vector<PermString>& perms) {
  std::set<PermString> seen;
  for (const PermString& p : perms)
    if (!seen.insert(p).second) return true;
  return false;
}

constexpr std::uint64_t kMaxCells = 1ull << 27;  // total symbols per parsed file

void append_member_rows(std::string& out, const std::vector<PermString>& perms) {
  for (const PermString& p : perms) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
}

json vector_set_to_json(const VectorSet& s) {
  json j;
  j["dim"] = s.dim;
  j["vecs"] = s.vecs;
  return j;
}

VectorSet vector_set_from_json(const json& j) {
  VectorSet s;
  s.dim = j.at("dim").get<std::size_t>();
  s.vecs = j.at("vecs").get<std::vector<std::string>>();
  require_vector_set(s, "certificate vector set");
  return s;
}

}  // namespace

InstanceFileData parse_instance_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "empty instance file");
  InstanceFileData out;
  std::size_t header_rows = 2;
  std::size_t n_first = 0, n_second = 0, len = 0;
  std::uint64_t tau = 0;

  if (lines[0] == "ULAM v1 mono") {
    out.bichromatic = false;
    if (lines.size() < 2) fail(Errc::parse_error, "missing size line");
    std::vector<std::string> toks = tokens_of(lines[1]);
    if (toks.size() != 3) fail(Errc::parse_error, "size line must be 'n L tau'");
    n_first = parse_u64(toks[0], "member count");
    len = parse_u64(toks[1], "member length");
    tau = parse_u64(toks[2], "threshold");
  } else if (lines[0] == "ULAM v1 bi") {
    out.bichromatic = true;
    if (lines.size() < 2) fail(Errc::parse_error, "missing size line");
    std::vector<std::string> toks = tokens_of(lines[1]);
    if (toks.size() != 4) fail(Errc::parse_error, "size line must be 'nx ny L tau'");
    n_first = parse_u64(toks[0], "first color count");
    n_second = parse_u64(toks[1], "second color count");
    len = parse_u64(toks[2], "member length");
    tau = parse_u64(toks[3], "threshold");
  } else {
    fail(Errc::parse_error, "bad header '" + lines[0] + "'");
  }

  const std::size_t rows = n_first + n_second;
  if (rows == 0) fail(Errc::parse_error, "instance declares zero members");
  if (len == 0) fail(Errc::parse_error, "instance declares zero length");
  if (static_cast<std::uint64_t>(rows) * len > kMaxCells)
    fail(Errc::too_large, "instance of " + std::to_string(rows) + " x " + std::to_string(len));
  if (lines.size() != header_rows + rows)
    fail(Errc::parse_error, "expected " + std::to_string(rows) + " member lines, found " +
                                std::to_string(lines.size() - header_rows));

  std::vector<PermString> first, second;
  for (std::size_t i = 0; i < rows; ++i) {
    PermString p = parse_member_line(lines[header_rows + i], len, header_rows + i + 1);
    if (i < n_first)
      first.push_back(std::move(p));
    else
      second.push_back(std::move(p));
  }

  if (out.bichromatic) {
    out.bi.xs = std::move(first);
    out.bi.ys = std::move(second);
    out.bi.length = len;
    out.bi.tau = tau;
  } else {
    out.mono.multiset = family_has_duplicates(first);
    out.mono.perms = std::move(first);
    out.mono.length = len;
    out.mono.tau = tau;
  }
  return out;
}

std::string serialize_instance(const UlamInstance& in) {
  std::string out = "ULAM v1 mono\n";
  out += std::to_string(in.perms.size()) + " " + std::to_string(in.length) + " " +
         std::to_string(in.tau) + "\n";
  append_member_rows(out, in.perms);
  return out;
}

std::string serialize_instance(const BichromaticInstance& in) {
  std::string out = "ULAM v1 bi\n";
  out += std::to_string(in.xs.size()) + " " + std::to_string(in.ys.size()) + " " +
         std::to_string(in.length) + " " + std::to_string(in.tau) + "\n";
  append_member_rows(out, in.xs);
  append_member_rows(out, in.ys);
  return out;
}

OvFile parse_ov_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "empty vector file");
  std::vector<std::string> head = tokens_of(lines[0]);
  if (head.size() != 3 || head[0] != "OV" || head[1] != "v1")
    fail(Errc::parse_error, "bad header '" + lines[0] + "'");
  if (head[2] != "eeee" && head[2] != "eaee")
    fail(Errc::parse_error, "unknown quantifier pattern '" + head[2] + "'");

  OvFile out;
  out.pattern = head[2];
  VectorSet* sets[4] = {&out.sets.a, &out.sets.b, &out.sets.c, &out.sets.e};
  std::size_t at = 1;
  std::size_t dim = 0;
  for (int s = 0; s < 4; ++s) {
    if (at >= lines.size()) fail(Errc::parse_error, "missing set header line");
    std::vector<std::string> toks = tokens_of(lines[at]);
    if (toks.size() != 2) fail(Errc::parse_error, "set header must be 'k d'");
    std::size_t k = parse_u64(toks[0], "set size");
    std::size_t d = parse_u64(toks[1], "dimension");
    if (s == 0)
      dim = d;
    else if (d != dim)
      fail(Errc::parse_error, "sets disagree on dimension");
    ++at;
    sets[s]->dim = d;
    for (std::size_t i = 0; i < k; ++i, ++at) {
      if (at >= lines.size()) fail(Errc::parse_error, "missing vector line");
      const std::string& v = lines[at];
      if (v.size() != d)
        fail(Errc::parse_error, "line " + std::to_string(at + 1) + ": expected " +
                                    std::to_string(d) + " characters");
      for (char c : v)
        if (c != '0' && c != '1')
          fail(Errc::parse_error, "line " + std::to_string(at + 1) + ": character '" + c + "'");
      sets[s]->vecs.push_back(v);
    }
  }
  if (at != lines.size()) fail(Errc::parse_error, "trailing content after the last set");
  return out;
}

std::string serialize_ov(const OvFile& f) {
  std::string out = "OV v1 " + f.pattern + "\n";
  const VectorSet* sets[4] = {&f.sets.a, &f.sets.b, &f.sets.c, &f.sets.e};
  for (const VectorSet* s : sets) {
    out += std::to_string(s->vecs.size()) + " " + std::to_string(s->dim) + "\n";
    for (const std::string& v : s->vecs) out += v + "\n";
  }
  return out;
}

Graph parse_graph_text(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || lines[0] != "GRAPH v1")
    fail(Errc::parse_error, "bad header" + (lines.empty() ? std::string() : " '" + lines[0] + "'"));
  if (lines.size() < 2) fail(Errc::parse_error, "missing size line");
  std::vector<std::string> toks = tokens_of(lines[1]);
  if (toks.size() != 2) fail(Errc::parse_error, "size line must be 'n m'");
  std::uint64_t n = parse_u64(toks[0], "vertex count");
  std::uint64_t m = parse_u64(toks[1], "edge count");
  if (n == 0 || n > 1000000) fail(Errc::parse_error, "vertex count out of range");
  if (lines.size() != 2 + m)
    fail(Errc::parse_error, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(lines.size() - 2));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::string> et = tokens_of(lines[2 + i]);
    if (et.size() != 2) fail(Errc::parse_error, "edge line must be 'i j'");
    edges.emplace_back(static_cast<std::uint32_t>(parse_u64(et[0], "edge endpoint")),
                       static_cast<std::uint32_t>(parse_u64(et[1], "edge endpoint")));
  }
  return make_graph(static_cast<std::uint32_t>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "GRAPH v1\n";
  out += std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [i, j] : g.edges) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

std::string serialize_certificate(const Certificate& cert) {
  json j;
  j["kind"] = cert.kind;
  if (cert.kind == "maxcut-median") {
    json edges = json::array();
    for (auto [a, b] : cert.graph.edges) edges.push_back({a, b});
    j["graph"] = {{"n", cert.graph.n}, {"edges", edges}};
    j["t"] = cert.t;
    j["cut_target"] = cert.cut_target;
    j["tau"] = cert.tau;
  } else if (cert.kind == "multiset-set") {
    j["source_perms"] = cert.source_perms;
    j["m"] = cert.m;
    j["tau"] = cert.tau;
  } else if (cert.kind == "qov-center" || cert.kind == "ov4-bimedian" ||
             cert.kind == "bi-monomedian") {
    j["sets"] = {{"a", vector_set_to_json(cert.a)},
                 {"b", vector_set_to_json(cert.b)},
                 {"c", vector_set_to_json(cert.c)},
                 {"e", vector_set_to_json(cert.e)}};
    j["n"] = cert.n;
    j["m"] = cert.m;
    j["d"] = cert.d;
    j["L"] = cert.len_l;
    j["tau"] = cert.tau;
    if (cert.kind == "qov-center") j["tau_prime"] = cert.tau_prime;
    if (cert.kind == "bi-monomedian") {
      j["L2"] = cert.len_l2;
      j["K"] = cert.big_k;
      j["M"] = cert.big_m;
      j["D"] = cert.big_d;
      j["k_sums"] = cert.k_sums;
      j["tau_mono"] = cert.tau_mono;
    }
  } else {
    fail(Errc::internal_error, "serializing unknown certificate kind '" + cert.kind + "'");
  }
  return j.dump(2) + "\n";
}

Certificate parse_certificate_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    fail(Errc::parse_error, std::string("certificate JSON: ") + ex.what());
  }
  Certificate cert;
  try {
    cert.kind = j.at("kind").get<std::string>();
    if (cert.kind == "maxcut-median") {
      const json& jg = j.at("graph");
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (const json& je : jg.at("edges"))
        edges.emplace_back(je.at(0).get<std::uint32_t>(), je.at(1).get<std::uint32_t>());
      cert.graph = make_graph(jg.at("n").get<std::uint32_t>(), std::move(edges));
      cert.t = j.at("t").get<std::uint64_t>();
      cert.cut_target = j.at("cut_target").get<std::uint64_t>();
      cert.tau = j.at("tau").get<std::uint64_t>();
    } else if (cert.kind == "multiset-set") {
      cert.source_perms = j.at("source_perms").get<std::vector<PermString>>();
      cert.m = j.at("m").get<std::uint64_t>();
      cert.tau = j.at("tau").get<std::uint64_t>();
    } else if (cert.kind == "qov-center" || cert.kind == "ov4-bimedian" ||
               cert.kind == "bi-monomedian") {
      const json& js = j.at("sets");
      cert.a = vector_set_from_json(js.at("a"));
      cert.b = vector_set_from_json(js.at("b"));
      cert.c = vector_set_from_json(js.at("c"));
      cert.e = vector_set_from_json(js.at("e"));
      cert.n = j.at("n").get<std::uint64_t>();
      cert.m = j.at("m").get<std::uint64_t>();
      cert.d = j.at("d").get<std::uint64_t>();
      cert.len_l = j.at("L").get<std::uint64_t>();
      cert.tau = j.at("tau").get<std::uint64_t>();
      if (cert.kind == "qov-center") cert.tau_prime = j.at("tau_prime").get<std::uint64_t>();
      if (cert.kind == "bi-monomedian") {
        cert.len_l2 = j.at("L2").get<std::uint64_t>();
        cert.big_k = j.at("K").get<std::uint64_t>();
        cert.big_m = j.at("M").get<std::uint64_t>();
        cert.big_d = j.at("D").get<std::uint64_t>();
        cert.k_sums = j.at("k_sums").get<std::vector<std::uint64_t>>();
        cert.tau_mono = j.at("tau_mono").get<std::uint64_t>();
      }
    } else {
      fail(Errc::parse_error, "unknown certificate kind '" + cert.kind + "'");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    fail(Errc::parse_error, std::string("certificate fields: ") + ex.what());
  }
  return cert;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(Errc::parse_error, "short write to '" + path + "'");
}

UlamInstance generate_random_instance(std::size_t n, std::size_t len, std::uint64_t seed) {
  if (n == 0 || len == 0) fail(Errc::empty_instance, "benchmark instance needs n >= 1, L >= 1");
  if (static_cast<std::uint64_t>(n) * len > kMaxCells)
    fail(Errc::too_large, "benchmark instance of " + std::to_string(n) + " x " + std::to_string(len));
  std::mt19937_64 rng(seed);
  UlamInstance out;
  out.length = len;
  out.tau = 0;
  for (std::size_t i = 0; i < n; ++i) {
    PermString p = iota_perm(len);
    // explicit downward swap pass keeps the byte stream stable across platforms
    for (std::size_t t = len - 1; t > 0; --t) {
      std::size_t pick = static_cast<std::size_t>(rng() % (t + 1));
      std::swap(p[t], p[pick]);
    }
    out.perms.push_back(std::move(p));
  }
  out.multiset = family_has_duplicates(out.perms);
  return out;
}

}  // namespace ulam
