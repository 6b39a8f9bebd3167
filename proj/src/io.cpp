#include "wtap/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wtap/rational.hpp"

namespace wtap {

namespace {

Rational weight_value(const nlohmann::json& w) {
  if (w.is_number_integer()) return Rational(w.get<std::int64_t>());
  if (w.is_number_float()) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w.get<double>());
    if (ec != std::errc()) throw ParseError("cannot format weight");
    return Rational::parse(std::string_view(buf, static_cast<std::size_t>(end - buf)));
  }
  if (w.is_string()) return Rational::parse(w.get<std::string>());
  throw ParseError("link weight must be a number or a \"p/q\" string");
}

struct RawLink {
  Vertex u;
  Vertex v;
  Rational w;
};

InstanceData finish(int n, Vertex root, std::vector<std::pair<Vertex, Vertex>> edges, const std::vector<RawLink>& raw,
                    std::int64_t scale) {
  std::int64_t lcm = 1;
  for (const auto& l : raw) {
    lcm = std::lcm(lcm, l.w.den());
    if (lcm > (std::int64_t{1} << 40)) throw ParseError("weight denominators too large to scale exactly");
  }
  InstanceData data;
  data.n = n;
  data.root = root;
  data.edges = std::move(edges);
  data.scale = scale * lcm;
  for (const auto& l : raw) {
    const Rational scaled = l.w * Rational(lcm);
    data.links.push_back({l.u, l.v, scaled.num()});
  }
  return data;
}

}  // namespace

InstanceData instance_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const Vertex root = doc.value("root", 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<RawLink> raw;
    for (const auto& l : doc.at("links")) raw.push_back({l.at("u").get<Vertex>(), l.at("v").get<Vertex>(), weight_value(l.at("w"))});
    const std::int64_t scale = doc.value("scale", std::int64_t{1});
    if (scale < 1) throw ParseError("scale must be positive");
    return finish(n, root, std::move(edges), raw, scale);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad weight: ") + e.what());
  }
}

InstanceData instance_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  Vertex root = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<RawLink> raw;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    auto fail = [&](const std::string& what) {
      return ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (key == "n") {
      if (!(fields >> n)) throw fail("expected vertex count");
    } else if (key == "root") {
      if (!(fields >> root)) throw fail("expected root vertex");
    } else if (key == "edge") {
      Vertex a, b;
      if (!(fields >> a >> b)) throw fail("expected two endpoints");
      edges.emplace_back(a, b);
    } else if (key == "link") {
      Vertex a, b;
      std::string w;
      if (!(fields >> a >> b >> w)) throw fail("expected endpoints and weight");
      try {
        raw.push_back({a, b, Rational::parse(w)});
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing text '" + extra + "'");
  }
  if (n < 0) throw ParseError("missing 'n' line");
  return finish(n, root, std::move(edges), raw, 1);
}

InstanceData parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(doc);
  }
  return instance_from_text(text);
}

InstanceData read_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

nlohmann::ordered_json instance_to_json(const InstanceData& data) {
  nlohmann::ordered_json doc;
  doc["n"] = data.n;
  doc["root"] = data.root;
  doc["scale"] = data.scale;
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : data.edges) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  auto links = nlohmann::ordered_json::array();
  for (const auto& l : data.links) links.push_back({{"u", l.u}, {"v", l.v}, {"w", l.w}});
  doc["links"] = std::move(links);
  return doc;
}

std::string dump_json(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

}  // namespace wtap
