#include "marm/env/grid_map.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "marm/core/error.hpp"

namespace marm {

std::optional<char> GridMap::door_at(int r, int c) const {
  for (const auto& [color, cells] : doors)
    for (const Cell& d : cells)
      if (d.row == r && d.col == c) return color;
  return std::nullopt;
}

GridMap GridMap::parse(const std::string& text) {
  std::vector<std::string> rows;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (line.empty()) continue;
      rows.push_back(line);
    }
  }
  if (rows.empty()) throw ParseError(1, "empty map");

  GridMap m;
  m.height = static_cast<int>(rows.size());
  m.width = static_cast<int>(rows[0].size());
  for (size_t r = 1; r < rows.size(); ++r)
    if (static_cast<int>(rows[r].size()) != m.width)
      throw ParseError(static_cast<int>(r + 1), "ragged map row");
  m.walls.assign(static_cast<size_t>(m.width) * m.height, 0);

  std::map<int, Cell> starts_by_digit;
  for (int r = 0; r < m.height; ++r) {
    for (int c = 0; c < m.width; ++c) {
      const char g = rows[r][c];
      const Cell cell{r, c};
      switch (g) {
        case '.':
          break;
        case '#':
          m.walls[static_cast<size_t>(r) * m.width + c] = 1;
          break;
        case 'Y':
        case 'G':
        case 'R':
          if (m.buttons.count(g))
            throw ParseError(r + 1, std::string("duplicate button '") + g +
                                        "' at column " + std::to_string(c + 1));
          m.buttons[g] = cell;
          break;
        case 'y':
        case 'g':
        case 'r':
          m.doors[g].push_back(cell);
          break;
        case 'X':
          m.goals.push_back(cell);
          break;
        case 'V':
          if (m.rendezvous)
            throw ParseError(r + 1, "duplicate rendezvous cell at column " +
                                        std::to_string(c + 1));
          m.rendezvous = cell;
          break;
        default:
          if (std::isdigit(static_cast<unsigned char>(g)) && g != '0') {
            int agent = g - '1';
            if (starts_by_digit.count(agent))
              throw ParseError(r + 1, std::string("duplicate start '") + g + "'");
            starts_by_digit[agent] = cell;
          } else {
            throw ParseError(r + 1, std::string("unknown glyph '") + g +
                                        "' at column " + std::to_string(c + 1));
          }
      }
    }
  }

  for (const auto& [agent, cell] : starts_by_digit) {
    if (agent != static_cast<int>(m.starts.size()))
      throw ParseError(1, "agent starts must be numbered 1..N without gaps");
    m.starts.push_back(cell);
  }
  if (m.starts.empty()) throw ParseError(1, "map has no agent starts");
  return m;
}

GridMap GridMap::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open map file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace marm
