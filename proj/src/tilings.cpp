#include "povp/tilings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace povp {

namespace {

std::pair<int, int> type_vec(DominoType t) {
    switch (t) {
        case DominoType::PP: return {1, 1};
        case DominoType::MM: return {-1, -1};
        case DominoType::PM: return {1, -1};
        case DominoType::MP: return {-1, 1};
    }
    return {0, 0};
}

Domino h_domino(int t, int x) { return {4 * t + 1, 4 * x - 1, DominoType::PP}; }
Domino v_domino(int t, int x) { return {4 * t + 1, 4 * x + 3, DominoType::MM}; }
Domino d_domino(int t, int x) { return {4 * t + 1, 4 * x + 3, DominoType::PM}; }

}  // namespace

std::pair<int, int> Domino::black() const {
    auto [tx, ty] = type_vec(type);
    return {wx + 2 * tx, wy + 2 * ty};
}

bool is_center(int x, int y) {
    return (x % 2 != 0) && (y % 2 != 0) && (((x + y) % 4 + 4) % 4 == 0);
}

bool is_white(int x, int y) { return is_center(x, y) && ((x % 4 + 4) % 4 == 1); }

Window Window::standard(const Partition& shape, int max_entry) {
    return {-shape.length() - 1, shape.part(1) + 1, -1, max_entry + 1};
}

std::vector<Domino> DominoTiling::dominoes() const {
    std::set<Domino> s;
    for (const auto& [c, d] : cover) s.insert(d);
    return {s.begin(), s.end()};
}

namespace {

struct EdgeSet {
    std::set<std::pair<int, int>> h, v, d;  // parameters (t, x)
};

/* Path edges of the overpartition rows inside a window.  Row i descends at
 * column 1-i from the top, walks its entries, then descends at the column
 * after its last entry. */
EdgeSet path_edges(const PlaneOverpartition& pop, const Window& w) {
    EdgeSet es;
    auto descend = [&](int t, int from_x, int to_x) {
        for (int x = std::max(to_x, w.xmin - 1); x < std::min(from_x, w.xmax + 1); ++x)
            es.v.insert({t, x});
    };
    int nrows = 1 - w.tmin;  // enough rows to cover every window column
    for (int i = 1; i <= nrows; ++i) {
        int m = pop.row_length(i);
        int prev_x = w.xmax + 1;  // virtual top
        int t = 1 - i;
        for (int j = 1; j <= m; ++j) {
            Cell c = pop.cell(i, j);
            descend(t, prev_x, c.value);
            if (c.overlined) {
                es.d.insert({t, c.value - 1});
                prev_x = c.value - 1;
            } else {
                es.h.insert({t, c.value});
                prev_x = c.value;
            }
            ++t;
        }
        descend(t, prev_x, w.xmin - 1);
    }
    return es;
}

bool inside(const Window& w, int cx, int cy) {
    return cx >= 4 * w.tmin && cx <= 4 * w.tmax && cy >= 4 * w.xmin && cy <= 4 * w.xmax;
}

void place(DominoTiling& t, const Domino& d) {
    auto put = [&](int cx, int cy) {
        if (!inside(t.window, cx, cy)) return;
        auto [it, fresh] = t.cover.emplace(std::make_pair(cx, cy), d);
        if (!fresh) throw std::logic_error("tiling: overlapping dominoes");
    };
    put(d.wx, d.wy);
    auto [bx, by] = d.black();
    put(bx, by);
}

}  // namespace

DominoTiling pop_to_tiling(const PlaneOverpartition& pop, const Window& w) {
    ValidationResult pv = pop.validate();
    if (!pv.ok()) throw std::invalid_argument("pop_to_tiling: invalid overpartition");
    Partition shape = pop.shape();
    int maxe = 0;
    for (const auto& r : pop.rows())
        for (const Cell& c : r) maxe = std::max(maxe, c.value);
    Window need = Window::standard(shape, maxe);
    if (w.tmin > need.tmin || w.tmax < need.tmax || w.xmin > need.xmin || w.xmax < need.xmax)
        throw std::invalid_argument("pop_to_tiling: window too small");

    DominoTiling t;
    t.window = w;
    EdgeSet es = path_edges(pop, w);
    for (auto [tt, x] : es.h) place(t, h_domino(tt, x));
    for (auto [tt, x] : es.v) place(t, v_domino(tt, x));
    for (auto [tt, x] : es.d) place(t, d_domino(tt, x));

    // fill the rest with MP dominoes, pairing white (cx,cy) with (cx-2,cy+2)
    for (int cx = 4 * w.tmin; cx <= 4 * w.tmax; ++cx) {
        for (int cy = 4 * w.xmin; cy <= 4 * w.xmax; ++cy) {
            if (!is_center(cx, cy) || t.cover.count({cx, cy})) continue;
            Domino mp;
            if (is_white(cx, cy)) {
                mp = {cx, cy, DominoType::MP};
            } else {
                mp = {cx + 2, cy - 2, DominoType::MP};  // black partner inside
            }
            place(t, mp);
        }
    }
    return t;
}

PlaneOverpartition tiling_to_pop(const DominoTiling& t) {
    const Window& w = t.window;
    EdgeSet es;
    for (const Domino& d : t.dominoes()) {
        int tt = (d.wx - 1) / 4;
        if ((d.wx - 1) % 4 != 0) throw std::invalid_argument("tiling_to_pop: bad white center");
        if (d.type == DominoType::PP) es.h.insert({tt, (d.wy + 1) / 4});
        if (d.type == DominoType::MM) es.v.insert({tt, (d.wy - 3) / 4});
        if (d.type == DominoType::PM) es.d.insert({tt, (d.wy - 3) / 4});
    }
    std::vector<std::vector<Cell>> rows;
    for (int i = 1; 1 - i >= w.tmin; ++i) {
        int tt = 1 - i;
        int x = w.xmax;
        std::vector<Cell> row;
        while (x > w.xmin) {
            if (es.h.count({tt, x})) {
                row.push_back({x, false});
                ++tt;
            } else if (es.d.count({tt, x - 1})) {
                row.push_back({x, true});
                ++tt;
                --x;
            } else if (es.v.count({tt, x - 1})) {
                --x;
            } else {
                throw std::invalid_argument("tiling_to_pop: path breaks off inside the window");
            }
        }
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    PlaneOverpartition pop(std::move(rows));
    ValidationResult pv = pop.validate();
    if (!pv.ok()) throw std::invalid_argument("tiling_to_pop: rows are not an overpartition");
    DominoTiling again = pop_to_tiling(pop, w);
    if (!(again == t))
        throw std::invalid_argument("tiling_to_pop: tiling violates the boundary layout");
    return pop;
}

bool diagram_has(const PlaneOverpartition& pop, int t, int x) {
    if (x <= 0) return false;
    for (int i = 1; i <= pop.row_count(); ++i) {
        int j = t + i;
        if (j < 1 || j > pop.row_length(i)) continue;
        if (pop.cell(i, j).value == x) return true;
    }
    return false;
}

namespace {

// locate the cell with value x on diagonal t (unique in a valid pop)
std::pair<int, int> find_cell(const PlaneOverpartition& pop, int t, int x) {
    for (int i = 1; i <= pop.row_count(); ++i) {
        int j = t + i;
        if (j >= 1 && j <= pop.row_length(i) && pop.cell(i, j).value == x) return {i, j};
    }
    throw std::invalid_argument("local move: no such cell in the 2-d diagram");
}

}  // namespace

PlaneOverpartition apply_move_to_pop(const PlaneOverpartition& pop, const LocalMove& mv) {
    auto [i, j] = find_cell(pop, mv.t, mv.x);
    auto rows = pop.rows();
    Cell& c = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    switch (mv.kind) {
        case MoveKind::AddOverline:
            if (c.overlined) throw std::invalid_argument("local move: already overlined");
            c.overlined = true;
            break;
        case MoveKind::RemoveOverline:
            if (!c.overlined) throw std::invalid_argument("local move: not overlined");
            c.overlined = false;
            break;
        case MoveKind::RemoveBox:
            if (!c.overlined) throw std::invalid_argument("local move: box removal needs an overline");
            if (c.value <= 1)
                throw std::invalid_argument("local move: removal would change the shape");
            c.value -= 1;
            c.overlined = false;
            break;
        case MoveKind::AddBox:
            if (c.overlined) throw std::invalid_argument("local move: box addition needs a plain part");
            c.value += 1;
            c.overlined = true;
            break;
    }
    PlaneOverpartition out(std::move(rows));
    ValidationResult v = out.validate();
    if (!v.ok()) throw std::invalid_argument("local move: result invalid: " + v.violations.front());
    return out;
}

DominoTiling apply_move_to_tiling(const DominoTiling& t, const PlaneOverpartition& pop,
                                  const LocalMove& mv) {
    PlaneOverpartition after = apply_move_to_pop(pop, mv);  // validates legality
    DominoTiling out = t;
    auto erase_dom = [&](const Domino& d) {
        out.cover.erase({d.wx, d.wy});
        out.cover.erase(d.black());
    };
    auto add_dom = [&](const Domino& d) {
        auto put = [&](int cx, int cy) {
            if (!inside(out.window, cx, cy)) return;
            out.cover[{cx, cy}] = d;
        };
        put(d.wx, d.wy);
        auto [bx, by] = d.black();
        put(bx, by);
    };
    int tt = mv.t, x = mv.x;
    switch (mv.kind) {
        case MoveKind::AddOverline:
            erase_dom(h_domino(tt, x));
            erase_dom(v_domino(tt + 1, x - 1));
            add_dom(d_domino(tt, x - 1));
            add_dom({4 * tt + 5, 4 * x - 1, DominoType::MP});
            break;
        case MoveKind::RemoveOverline:
            erase_dom(d_domino(tt, x - 1));
            erase_dom({4 * tt + 5, 4 * x - 1, DominoType::MP});
            add_dom(h_domino(tt, x));
            add_dom(v_domino(tt + 1, x - 1));
            break;
        case MoveKind::RemoveBox:
            erase_dom(d_domino(tt, x - 1));
            erase_dom({4 * tt + 1, 4 * x - 5, DominoType::MP});
            add_dom(v_domino(tt, x - 1));
            add_dom(h_domino(tt, x - 1));
            break;
        case MoveKind::AddBox:
            erase_dom(v_domino(tt, x));
            erase_dom(h_domino(tt, x));
            add_dom(d_domino(tt, x));
            add_dom({4 * tt + 1, 4 * x - 1, DominoType::MP});
            break;
    }
    return out;
}

std::vector<LocalMove> legal_moves(const PlaneOverpartition& pop) {
    std::vector<LocalMove> out;
    for (int i = 1; i <= pop.row_count(); ++i) {
        for (int j = 1; j <= pop.row_length(i); ++j) {
            Cell c = pop.cell(i, j);
            int t = j - i;
            for (MoveKind k : {MoveKind::AddOverline, MoveKind::RemoveOverline,
                               MoveKind::RemoveBox, MoveKind::AddBox}) {
                LocalMove mv{k, t, c.value};
                try {
                    apply_move_to_pop(pop, mv);
                    out.push_back(mv);
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    return out;
}

std::string render_ascii(const DominoTiling& t) {
    if (t.cover.empty()) return "";
    int cxmin = 1 << 30, cxmax = -(1 << 30), cymin = 1 << 30, cymax = -(1 << 30);
    for (const auto& [c, d] : t.cover) {
        cxmin = std::min(cxmin, c.first);
        cxmax = std::max(cxmax, c.first);
        cymin = std::min(cymin, c.second);
        cymax = std::max(cymax, c.second);
    }
    std::ostringstream os;
    // legend: h = (1,1), v = (-1,-1), d = (1,-1), . = (-1,1)
    for (int cy = cymax; cy >= cymin; cy -= 2) {
        std::string line;
        for (int cx = cxmin; cx <= cxmax; cx += 2) {
            auto it = t.cover.find({cx, cy});
            if (it == t.cover.end()) {
                line += ' ';
                continue;
            }
            switch (it->second.type) {
                case DominoType::PP: line += 'h'; break;
                case DominoType::MM: line += 'v'; break;
                case DominoType::PM: line += 'd'; break;
                case DominoType::MP: line += '.'; break;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string render_svg(const DominoTiling& t) {
    std::vector<Domino> ds = t.dominoes();
    std::ostringstream os;
    int x0 = 4 * t.window.tmin - 2, x1 = 4 * t.window.tmax + 2;
    int y0 = 4 * t.window.xmin - 2, y1 = 4 * t.window.xmax + 2;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -y1 << " "
       << (x1 - x0) << " " << (y1 - y0) << "\">\n";
    os << "<style>.pp{fill:#e8b84b}.mm{fill:#4b7de8}.pm{fill:#5bbd6e}.mp{fill:#eeeeee}"
          "polygon{stroke:#333;stroke-width:0.2}</style>\n";
    for (const Domino& d : ds) {
        auto [tx, ty] = type_vec(d.type);
        auto [bx, by] = d.black();
        int pts[4][2] = {{d.wx - 2 * tx, d.wy},
                         {d.wx, d.wy - 2 * ty},
                         {bx + 2 * tx, by},
                         {bx, by + 2 * ty}};
        const char* cls = d.type == DominoType::PP   ? "pp"
                          : d.type == DominoType::MM ? "mm"
                          : d.type == DominoType::PM ? "pm"
                                                     : "mp";
        os << "<polygon class=\"" << cls << "\" points=\"";
        for (int i = 0; i < 4; ++i) {
            if (i) os << " ";
            os << pts[i][0] << "," << -pts[i][1];
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string boundary_violations(const DominoTiling& t, const Partition& shape, int max_entry) {
    std::set<int> end_cols;
    for (int i = 1;; ++i) {
        int col = shape.part(i) - i + 1;
        end_cols.insert(col);
        if (i > shape.length() && col < t.window.tmin) break;
    }
    int l = shape.length();
    int n = max_entry;
    for (const auto& [c, d] : t.cover) {
        auto [cx, cy] = c;
        // diamond belongs to lattice column tt; its generic height is cy/4
        int tt = (cx % 4 + 4) % 4 == 1 ? (cx - 1) / 4 : (cx + 1) / 4;
        bool must_mm = false, must_mp = false;
        if (tt <= -l)
            must_mm = true;
        else if (-l < tt && tt <= 0 && cy >= 4 * n)
            must_mm = true;
        else if (end_cols.count(tt) && cy <= 0)
            must_mm = true;
        if (tt > shape.part(1))
            must_mp = true;
        else if (0 < tt && tt <= shape.part(1) && 2 * cy >= 8 * n + 4)
            must_mp = true;
        else if (!end_cols.count(tt) && 2 * cy <= -4)
            must_mp = true;
        if (must_mm && d.type != DominoType::MM)
            return "expected a vertical domino at (" + std::to_string(cx) + "," +
                   std::to_string(cy) + ")";
        if (must_mp && d.type != DominoType::MP)
            return "expected a filler domino at (" + std::to_string(cx) + "," +
                   std::to_string(cy) + ")";
    }
    return "";
}

}  // namespace povp
