#pragma once

#include <map>
#include <string>
#include <vector>

#include "povp/objects.hpp"
#include "povp/partition.hpp"

namespace povp {

/* Domino types named by the vector from the white to the black square
 * center (up to scale): PP = (1,1), MM = (-1,-1), PM = (1,-1), MP = (-1,1).
 * Path edges map to PP (horizontal), MM (vertical), PM (diagonal); MP fills
 * the rest of the plane. */
enum class DominoType { PP, MM, PM, MP };

/* Scaled chessboard: lattice points (t,x) sit at (4t,4x); diamond centers
 * are odd pairs with coordinate sum divisible by 4.  A domino is stored by
 * its white center; the black center is white + 2 * type vector. */
struct Domino {
    int wx = 0, wy = 0;  // white square center, scaled
    DominoType type = DominoType::MP;
    std::pair<int, int> black() const;
    bool operator==(const Domino& o) const {
        return wx == o.wx && wy == o.wy && type == o.type;
    }
    bool operator<(const Domino& o) const {
        if (wx != o.wx) return wx < o.wx;
        if (wy != o.wy) return wy < o.wy;
        return static_cast<int>(type) < static_cast<int>(o.type);
    }
};

bool is_center(int x, int y);
bool is_white(int x, int y);

/* Window in unscaled (t, x) coordinates, both bounds inclusive. */
struct Window {
    int tmin = 0, tmax = 0, xmin = 0, xmax = 0;
    static Window standard(const Partition& shape, int max_entry);
};

struct DominoTiling {
    Window window;
    // coverage of every diamond center inside the scaled window
    std::map<std::pair<int, int>, Domino> cover;

    std::vector<Domino> dominoes() const;  // deduplicated, sorted
    bool operator==(const DominoTiling& o) const {
        return window.tmin == o.window.tmin && window.tmax == o.window.tmax &&
               window.xmin == o.window.xmin && window.xmax == o.window.xmax &&
               cover == o.cover;
    }
};

DominoTiling pop_to_tiling(const PlaneOverpartition& pop, const Window& w);
PlaneOverpartition tiling_to_pop(const DominoTiling& t);

enum class MoveKind { AddOverline, RemoveOverline, RemoveBox, AddBox };
struct LocalMove {
    MoveKind kind;
    int t = 0;  // diagonal index of the target cell
    int x = 0;  // entry value at that diagonal
};

/* Legal moves edit the plane overpartition and swap exactly one pair of
 * PP/MM dominoes with a PM/MP pair (or back). */
PlaneOverpartition apply_move_to_pop(const PlaneOverpartition& pop, const LocalMove& mv);
DominoTiling apply_move_to_tiling(const DominoTiling& t, const PlaneOverpartition& pop,
                                  const LocalMove& mv);
std::vector<LocalMove> legal_moves(const PlaneOverpartition& pop);

// 2-d diagram lookup: value x present on diagonal t
bool diagram_has(const PlaneOverpartition& pop, int t, int x);

std::string render_ascii(const DominoTiling& t);
std::string render_svg(const DominoTiling& t);

/* Frozen-region predicate for tilings of bounded-entry overpartitions of a
 * shape; returns a violation description or empty string. */
std::string boundary_violations(const DominoTiling& t, const Partition& shape, int max_entry);

}  // namespace povp
