#include "regsel/board.hpp"

#include <fstream>
#include <sstream>

#include "regsel/error.hpp"

namespace regsel {

std::vector<int> lamp_sites(const PlanarDiagram &map, const std::vector<bool> &excluded) {
  std::vector<int> out;
  for (std::size_t v = 0; v < map.vertex_count(); ++v) {
    int vi = static_cast<int>(v);
    if (v < excluded.size() && excluded[v])
      continue;
    bool lamp = false;
    if (map.surface() == SurfaceKind::sphere)
      lamp = map.degree(vi) == 4;
    else if (map.is_boundary_vertex(vi))
      lamp = map.interior_degree(vi) >= 2;
    else
      lamp = map.degree(vi) >= 3;
    if (lamp)
      out.push_back(vi);
  }
  return out;
}

Gf2Matrix incidence_matrix(const PlanarDiagram &map, const std::vector<int> &sites) {
  Gf2Matrix a(sites.size(), map.region_count());
  for (std::size_t s = 0; s < sites.size(); ++s)
    for (const auto &r : map.regions())
      if (r.corner_count(sites[s]) % 2)
        a.set(s, r.id);
  return a;
}

const PlanarDiagram *LampBoard::map() const {
  if (link)
    return &link->map();
  if (crease)
    return &crease->map;
  if (disk)
    return &disk->map;
  return nullptr;
}

int LampBoard::site_of_vertex(int v) const {
  for (std::size_t s = 0; s < sites.size(); ++s)
    if (sites[s] == v)
      return static_cast<int>(s);
  return -1;
}

namespace {

void finish(LampBoard &b, const std::vector<bool> &excluded = {}) {
  const auto *m = b.map();
  b.sites = lamp_sites(*m, excluded);
  b.matrix = incidence_matrix(*m, b.sites);
  for (std::size_t s = 0; s < b.sites.size(); ++s)
    b.site_names.push_back("v" + std::to_string(s + 1));
  for (std::size_t r = 0; r < m->region_count(); ++r)
    b.region_names.push_back("R" + std::to_string(r + 1));
  b.lamps = BitVec(b.sites.size()).complement();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("io_error", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

LampBoard make_board(LinkDiagram d) {
  LampBoard b;
  b.kind = BoardKind::link;
  b.link = std::make_shared<const LinkDiagram>(std::move(d));
  finish(b);
  return b;
}

LampBoard make_board(CreasePattern p) {
  LampBoard b;
  b.kind = BoardKind::crease;
  auto corners = p.sheet_corner;
  b.crease = std::make_shared<const CreasePattern>(std::move(p));
  finish(b, corners);
  return b;
}

LampBoard make_board(DiskDiagram d) {
  LampBoard b;
  b.kind = BoardKind::disk;
  b.disk = std::make_shared<const DiskDiagram>(std::move(d));
  finish(b);
  return b;
}

LampBoard make_matrix_board(Gf2Matrix a, std::vector<std::string> site_names,
                            std::vector<std::string> region_names) {
  LampBoard b;
  b.kind = BoardKind::matrix;
  if (site_names.empty())
    for (std::size_t s = 0; s < a.rows(); ++s)
      site_names.push_back("v" + std::to_string(s + 1));
  if (region_names.empty())
    for (std::size_t r = 0; r < a.cols(); ++r)
      region_names.push_back("R" + std::to_string(r + 1));
  if (site_names.size() != a.rows() || region_names.size() != a.cols())
    throw Error("parse_error", "matrix board names do not match the matrix shape");
  b.site_names = std::move(site_names);
  b.region_names = std::move(region_names);
  b.lamps = BitVec(a.rows()).complement();
  b.matrix = std::move(a);
  return b;
}

LampBoard parse_board_payload(const nlohmann::json &payload) {
  if (payload.is_string())
    return make_board(parse_pd(payload.get<std::string>()));
  if (!payload.is_object())
    throw Error("parse_error", "diagram must be PD text or a JSON object");
  if (payload.contains("vertices_coords"))
    return make_board(parse_fold(payload));
  if (payload.contains("crossings") && payload.contains("boundary"))
    return make_board(make_disk_diagram(parse_disk_pd(payload)));
  if (payload.contains("rows")) {
    std::vector<std::string> rows, sites, regions;
    try {
      rows = payload.at("rows").get<std::vector<std::string>>();
      if (payload.contains("site_names"))
        sites = payload.at("site_names").get<std::vector<std::string>>();
      if (payload.contains("region_names"))
        regions = payload.at("region_names").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception &e) {
      throw Error("parse_error", std::string("matrix payload: ") + e.what());
    }
    return make_matrix_board(Gf2Matrix::from_rows(rows), std::move(sites), std::move(regions));
  }
  if (payload.contains("pd"))
    return make_board(parse_pd(payload.at("pd").get<std::string>()));
  throw Error("parse_error", "unrecognised diagram payload");
}

LampBoard parse_board(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("diagram"))
    throw Error("parse_error", "board file needs a \"diagram\" key");
  LampBoard b = parse_board_payload(j.at("diagram"));
  if (!j.contains("lamps"))
    return b;
  const auto &lamps = j.at("lamps");
  if (!lamps.is_object())
    throw Error("parse_error", "\"lamps\" must be an object of site -> 0|1");
  for (const auto &[key, value] : lamps.items()) {
    int site = -1;
    for (std::size_t s = 0; s < b.site_names.size(); ++s)
      if (b.site_names[s] == key)
        site = static_cast<int>(s);
    if (site < 0) {
      std::size_t used = 0;
      try {
        site = std::stoi(key, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != key.size())
        site = -1;
    }
    if (site < 0 || static_cast<std::size_t>(site) >= b.site_count())
      throw Error("unknown_site", "lamp key '" + key + "' is not a lamp site");
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
      throw Error("parse_error", "lamp '" + key + "' must be 0 or 1");
    b.lamps.set(site, value.get<int>() == 1);
  }
  return b;
}

LampBoard parse_board_text(const std::string &text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
      throw Error("parse_error", std::string("invalid JSON: ") + e.what());
    }
    return j.contains("diagram") ? parse_board(j) : parse_board_payload(j);
  }
  return make_board(parse_pd(text));
}

LampBoard load_board_file(const std::string &path) { return parse_board_text(read_file(path)); }

nlohmann::json board_to_json(const LampBoard &b) {
  static const char *kinds[] = {"link", "crease", "disk", "matrix"};
  nlohmann::json j;
  j["kind"] = kinds[static_cast<int>(b.kind)];
  j["matrix"] = b.matrix.to_strings();
  std::vector<int> lamps;
  for (std::size_t s = 0; s < b.site_count(); ++s)
    lamps.push_back(b.lamps.get(s) ? 1 : 0);
  j["lamps"] = lamps;
  auto &sites = j["sites"] = nlohmann::json::array();
  for (std::size_t s = 0; s < b.site_count(); ++s) {
    nlohmann::json e{{"id", s}, {"name", b.site_names[s]}};
    if (!b.sites.empty())
      e["vertex"] = b.sites[s];
    if (b.crease)
      e["xy"] = {b.crease->vertices[b.sites[s]].x, b.crease->vertices[b.sites[s]].y};
    sites.push_back(e);
  }
  auto &regions = j["regions"] = nlohmann::json::array();
  const auto *m = b.map();
  for (std::size_t r = 0; r < b.region_count(); ++r) {
    nlohmann::json e{{"id", r}, {"name", b.region_names[r]}};
    std::vector<int> touched;
    for (std::size_t s = 0; s < b.site_count(); ++s)
      if (b.matrix.get(s, r))
        touched.push_back(static_cast<int>(s));
    e["sites"] = touched;
    if (b.crease && m) {
      auto &poly = e["polygon"] = nlohmann::json::array();
      for (int d : m->regions()[r].boundary_darts) {
        const auto &p = b.crease->vertices[m->vertex_of(d)];
        poly.push_back({p.x, p.y});
      }
    }
    regions.push_back(e);
  }
  if (b.link)
    j["pd"] = b.link->to_pd();
  return j;
}

} // namespace regsel
