#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace marm {

struct Cell {
  int row = -1;
  int col = -1;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

// ASCII gridworld layout. Legend:
//   '#' wall   '.' floor   'Y'/'G'/'R' buttons   'y'/'g'/'r' door cells
//   digits 1..9 agent starts   'X' per-agent goals (row-major order)
//   'V' rendezvous cell
struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> walls;                 // row-major
  std::map<char, Cell> buttons;               // 'Y','G','R'
  std::map<char, std::vector<Cell>> doors;    // 'y','g','r'
  std::vector<Cell> starts;                   // index = agent
  std::vector<Cell> goals;                    // row-major X order
  std::optional<Cell> rendezvous;

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < height && c >= 0 && c < width;
  }
  bool is_wall(int r, int c) const {
    return walls[static_cast<size_t>(r) * width + c] != 0;
  }
  int cell_index(const Cell& c) const { return c.row * width + c.col; }
  int num_cells() const { return width * height; }
  std::optional<char> door_at(int r, int c) const;

  static GridMap parse(const std::string& text);
  static GridMap parse_file(const std::string& path);
};

}  // namespace marm
