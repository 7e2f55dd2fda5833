#include "geodis/instance.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace geodis {

using nlohmann::json;

namespace {

void check_coord(i64 v, const char* what) {
    if (v < -kCoordLimit || v > kCoordLimit) {
        std::ostringstream os;
        os << "scale error: " << what << " " << v << " exceeds +/-2^60";
        throw std::invalid_argument(os.str());
    }
}

void validate_object(const GeomObject& o) {
    if (o.extent <= 0) throw std::invalid_argument("object extent must be positive");
    check_coord(o.cx, "object cx");
    check_coord(o.cy, "object cy");
    check_coord(o.extent, "object extent");
}

}  // namespace

Instance build_instance(std::vector<GeomObject> objects, std::vector<Point> points, i64 scale) {
    for (const auto& o : objects) validate_object(o);
    for (const auto& p : points) {
        check_coord(p.x, "point x");
        check_coord(p.y, "point y");
    }

    Instance inst;
    inst.scale = scale;

    std::set<std::tuple<int, i64, i64, i64>> seen_obj;
    for (const auto& o : objects)
        if (seen_obj.insert({static_cast<int>(o.kind), o.cx, o.cy, o.extent}).second)
            inst.objects.push_back(o);

    std::set<std::pair<i64, i64>> seen_pt;
    for (const auto& p : points)
        if (seen_pt.insert({p.x, p.y}).second) inst.points.push_back(p);

    inst.incidence.reserve(inst.objects.size());
    for (const auto& o : inst.objects) {
        Bitset row(inst.points.size());
        for (std::size_t j = 0; j < inst.points.size(); ++j)
            if (covers(o, inst.points[j])) row.set(j);
        inst.incidence.push_back(std::move(row));
    }
    return inst;
}

bool shares_point(const Instance& inst, std::size_t i, std::size_t j) {
    if (i >= inst.num_objects() || j >= inst.num_objects())
        throw std::out_of_range("shares_point: object index out of range");
    return inst.incidence[i].intersects(inst.incidence[j]);
}

bool is_feasible_is(const Instance& inst, const Bitset& sel) {
    Bitset used(inst.num_points());
    bool ok = true;
    sel.for_each([&](std::size_t i) {
        if (!ok) return;
        if (used.intersects(inst.incidence[i])) {
            ok = false;
            return;
        }
        used |= inst.incidence[i];
    });
    return ok;
}

bool is_feasible_ds(const Instance& inst, const Bitset& sel) {
    Bitset covered(inst.num_points());
    sel.for_each([&](std::size_t i) { covered |= inst.incidence[i]; });
    for (std::size_t k = 0; k < inst.num_objects(); ++k) {
        if (sel.test(k)) continue;
        if (!inst.incidence[k].intersects(covered)) return false;
    }
    return true;
}

Bitset ds_forced_objects(const Instance& inst) {
    const std::size_t m = inst.num_objects();
    // Point coverage multiplicity: a point covered twice gives both coverers
    // a partner. An object all of whose points are covered only by itself
    // (or that covers nothing) can never be dominated.
    std::vector<int> cover_count(inst.num_points(), 0);
    for (const auto& row : inst.incidence)
        row.for_each([&](std::size_t j) { ++cover_count[j]; });

    Bitset forced(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool has_partner = false;
        inst.incidence[i].for_each([&](std::size_t j) {
            if (cover_count[j] >= 2) has_partner = true;
        });
        if (!has_partner) forced.set(i);
    }
    return forced;
}

Bitset reduce_by_subset_rule(const Instance& inst, const Bitset& sel) {
    if (!is_feasible_ds(inst, sel))
        throw std::invalid_argument("reduce_by_subset_rule: selection is not DS-feasible");

    const std::size_t m = inst.num_objects();
    Bitset cur = sel;
    bool changed = true;
    while (changed) {
        changed = false;
        Bitset next(m);
        cur.for_each([&](std::size_t l) {
            // An object covering no point has an empty covered set, which is
            // a proper subset of everything, but swapping it out would leave
            // it undominated forever; it stays.
            if (inst.incidence[l].none()) {
                next.set(l);
                return;
            }
            std::size_t best = l;
            std::size_t best_sz = inst.incidence[l].count();
            for (std::size_t d = 0; d < m; ++d) {
                if (d == l) continue;
                if (!inst.incidence[l].is_subset_of(inst.incidence[d])) continue;
                if (inst.incidence[d] == inst.incidence[l]) continue;  // not proper
                const std::size_t dsz = inst.incidence[d].count();
                if (dsz > best_sz || (dsz == best_sz && d < best)) {
                    best = d;
                    best_sz = dsz;
                }
            }
            if (best != l) changed = true;
            next.set(best);
        });
        cur = next;
    }
    return cur;
}

Instance generate_random(const GenParams& p) {
    if (p.extent_lo <= 0 || p.extent_hi < p.extent_lo)
        throw std::invalid_argument("generate_random: extent range must be positive");
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<i64> coord(0, p.window);
    std::uniform_int_distribution<i64> ext(p.extent_lo, p.extent_hi);

    std::vector<GeomObject> objs;
    objs.reserve(p.m);
    for (std::size_t i = 0; i < p.m; ++i) {
        GeomObject o;
        o.kind = p.kind;
        o.cx = coord(rng);
        o.cy = coord(rng);
        o.extent = ext(rng);
        objs.push_back(o);
    }
    std::vector<Point> pts;
    pts.reserve(p.n);
    for (std::size_t j = 0; j < p.n; ++j) pts.push_back({coord(rng), coord(rng)});
    return build_instance(std::move(objs), std::move(pts));
}

std::string to_json(const Instance& inst) {
    json j;
    j["scale"] = inst.scale;
    j["objects"] = json::array();
    for (const auto& o : inst.objects)
        j["objects"].push_back({{"kind", o.kind == Kind::Disk ? "disk" : "square"},
                                {"cx", o.cx},
                                {"cy", o.cy},
                                {"extent", o.extent}});
    j["points"] = json::array();
    for (const auto& p : inst.points) j["points"].push_back({p.x, p.y});
    return j.dump(2);
}

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("instance parse error: ") + e.what());
    }
    std::vector<GeomObject> objs;
    std::vector<Point> pts;
    i64 scale = 1;
    try {
        scale = j.value("scale", i64{1});
        std::size_t idx = 0;
        for (const auto& jo : j.at("objects")) {
            GeomObject o;
            const std::string kind = jo.at("kind").get<std::string>();
            if (kind == "disk")
                o.kind = Kind::Disk;
            else if (kind == "square")
                o.kind = Kind::Square;
            else
                throw std::invalid_argument("instance parse error: objects[" +
                                            std::to_string(idx) + "].kind must be disk|square");
            o.cx = jo.at("cx").get<i64>();
            o.cy = jo.at("cy").get<i64>();
            o.extent = jo.at("extent").get<i64>();
            objs.push_back(o);
            ++idx;
        }
        for (const auto& jp : j.at("points")) {
            if (!jp.is_array() || jp.size() != 2)
                throw std::invalid_argument("instance parse error: points entries must be [x, y]");
            pts.push_back({jp[0].get<i64>(), jp[1].get<i64>()});
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("instance parse error: ") + e.what());
    }
    return build_instance(std::move(objs), std::move(pts), scale);
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << to_json(inst) << "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return instance_from_json(os.str());
}

std::string solution_to_json(const Solution& sol) {
    json j;
    j["problem"] = problem_name(sol.problem);
    j["selected"] = json::array();
    sol.selected.for_each([&](std::size_t i) { j["selected"].push_back(i); });
    j["size"] = sol.size();
    return j.dump(2);
}

Solution solution_from_json(const std::string& text, std::size_t num_objects) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("solution parse error: ") + e.what());
    }
    Solution sol;
    const std::string prob = j.at("problem").get<std::string>();
    if (prob == "is")
        sol.problem = Problem::IS;
    else if (prob == "ds")
        sol.problem = Problem::DS;
    else
        throw std::invalid_argument("solution parse error: problem must be is|ds");
    sol.selected = Bitset(num_objects);
    for (const auto& ji : j.at("selected")) {
        const auto i = ji.get<std::size_t>();
        if (i >= num_objects)
            throw std::invalid_argument("solution parse error: index out of range");
        sol.selected.set(i);
    }
    return sol;
}

std::vector<Bitset> conflict_adjacency(const Instance& inst) {
    const std::size_t m = inst.num_objects();
    std::vector<Bitset> adj(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (inst.incidence[i].intersects(inst.incidence[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return adj;
}

}  // namespace geodis
