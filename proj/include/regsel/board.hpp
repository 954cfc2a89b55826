#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regsel/crease.hpp"
#include "regsel/gf2.hpp"
#include "regsel/link.hpp"

namespace regsel {

enum class BoardKind { link, crease, disk, matrix };

/// Vertices that carry lamps. On the sphere: the degree-4 vertices. On a
/// disk: interior vertices of degree at least 3 and boundary vertices with
/// at least 2 interior edges, minus `excluded` (sheet corners).
std::vector<int> lamp_sites(const PlanarDiagram &map, const std::vector<bool> &excluded = {});

/// Rows are sites, columns are regions, entries are corner counts mod 2.
Gf2Matrix incidence_matrix(const PlanarDiagram &map, const std::vector<int> &sites);

/// A game board: a diagram (or a bare incidence matrix), its lamp sites and
/// one lamp bit per site. Site and region ids are 0-based positions in
/// `sites` and in the map's region list.
struct LampBoard {
  BoardKind kind = BoardKind::matrix;
  std::shared_ptr<const LinkDiagram> link;
  std::shared_ptr<const CreasePattern> crease;
  std::shared_ptr<const DiskDiagram> disk;
  std::vector<int> sites; // map vertex per site (empty for matrix boards)
  std::vector<std::string> site_names;
  std::vector<std::string> region_names;
  Gf2Matrix matrix;
  BitVec lamps;

  const PlanarDiagram *map() const;
  std::size_t site_count() const { return matrix.rows(); }
  std::size_t region_count() const { return matrix.cols(); }
  /// Site id of a map vertex, or -1.
  int site_of_vertex(int v) const;
};

LampBoard make_board(LinkDiagram d);
LampBoard make_board(CreasePattern p);
LampBoard make_board(DiskDiagram d);
LampBoard make_matrix_board(Gf2Matrix a, std::vector<std::string> site_names = {},
                            std::vector<std::string> region_names = {});

/// Board file: {"diagram": payload, "lamps": {"<site>": 0|1}}. The payload is
/// PD text, a FOLD object, a disk PD object ({"crossings", "boundary"}) or a
/// matrix object ({"rows": ["0110", ...]}). Sites missing from "lamps" are ON;
/// keys are site ids or site names.
LampBoard parse_board(const nlohmann::json &j);
LampBoard parse_board_payload(const nlohmann::json &payload);
/// Accepts a board file, a bare FOLD/disk/matrix JSON object, or PD text.
LampBoard parse_board_text(const std::string &text);
LampBoard load_board_file(const std::string &path);

nlohmann::json board_to_json(const LampBoard &b);

} // namespace regsel
