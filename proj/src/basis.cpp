#include "gambier/basis.hpp"

#include "gambier/errors.hpp"

#include <map>

namespace gambier {

namespace {

PlaneField plane(std::initializer_list<std::tuple<int, int, int, Rat>> terms) {
    // tuple: (component, xexp, vexp, coefficient)
    PlaneField f;
    for (const auto& [c, xe, ve, coef] : terms)
        f.comp[c].add_term(Mono2{{xe, ve}}, coef);
    return f;
}

const std::map<std::string, PlaneField, std::less<>>& plane_table() {
    static const std::map<std::string, PlaneField, std::less<>> table = [] {
        std::map<std::string, PlaneField, std::less<>> t;
        t["Y1"] = plane({{0, 0, 1, 1}});                  // v d/dx
        t["Y2"] = plane({{1, -1, 2, 1}});                 // v^2/x d/dv
        t["Y3"] = plane({{1, 1, 1, 1}});                  // xv d/dv
        t["Y4"] = plane({{1, 0, 1, 1}});                  // v d/dv
        t["Y5"] = plane({{1, -1, 1, 1}});                 // v/x d/dv
        t["Y6"] = plane({{1, 3, 0, 1}});                  // x^3 d/dv
        t["Y7"] = plane({{1, 2, 0, 1}});                  // x^2 d/dv
        t["Y8"] = plane({{1, 1, 0, 1}});                  // x d/dv
        t["Y9"] = plane({{1, 0, 0, 1}});                  // d/dv
        t["Y10"] = plane({{1, -1, 0, 1}});                // 1/x d/dv
        t["Y11"] = plane({{0, 1, 0, 1}});                 // x d/dx
        t["Y12"] = plane({{0, 0, 0, 1}});                 // d/dx
        t["Y13"] = plane({{0, 2, 0, 1}});                 // x^2 d/dx
        t["Y14"] = plane({{0, 1, 1, 1}});                 // xv d/dx
        t["Y15"] = plane({{0, 3, 0, 1}});                 // x^3 d/dx
        t["Y16"] = plane({{1, 4, 0, 1}});                 // x^4 d/dv
        t["Y17"] = plane({{1, 0, 2, 1}});                 // v^2 d/dv

        t["X1"] = plane({{0, 0, 1, 1}, {1, 1, 1, -3}, {1, 3, 0, -1}});
        t["X2"] = plane({{1, 0, 0, 1}});
        t["X3"] = plane({{0, 0, 0, -1}, {1, 1, 0, 3}});
        t["X4"] = plane({{0, 1, 0, 1}, {1, 2, 0, -2}});
        t["X5"] = plane({{0, 0, 1, 1}, {0, 2, 0, 2}, {1, 1, 1, -1}, {1, 3, 0, -3}});
        t["X6"] = plane({{0, 1, 1, 2}, {0, 3, 0, 2}, {1, 0, 2, 2}, {1, 4, 0, -2}});
        t["X7"] = plane({{0, 0, 0, 1}, {1, 1, 0, -1}});
        t["X8"] = plane({{0, 1, 0, 2}, {1, 0, 1, 4}});

        t["Z1"] = t["X1"];
        t["Z2"] = (t["X3"] + t["X7"]).scaled(Rat(1, 2));
        t["Z3"] = (t["X8"] - t["X4"].scaled(Rat(2))).scaled(Rat(1, 4));
        t["Z4"] = t["X4"];
        t["Z5"] = t["X5"];
        t["Z6"] = t["X6"];
        return t;
    }();
    return table;
}

}  // namespace

PlaneField basis(std::string_view id) {
    const auto& t = plane_table();
    auto it = t.find(id);
    if (it == t.end()) throw UnknownIdentifier(std::string(id));
    return it->second;
}

LinearField basis_linear(std::string_view id) {
    LinearField f;
    auto term = [&](int c, int ye, int vye, int aye, Rat coef) {
        f.comp[c].add_term(Mono<3>{{ye, vye, aye}}, coef);
    };
    if (id == "W1") {
        term(0, 0, 1, 0, Rat(1));  // v_y d/dy
        term(1, 0, 0, 1, Rat(1));  // a_y d/dv_y
    } else if (id == "W2") {
        term(2, 0, 0, 1, Rat(1));  // a_y d/da_y
    } else if (id == "W3") {
        term(1, 0, 0, 1, Rat(2));  // 2 a_y d/dv_y
    } else if (id == "W4") {
        term(0, 0, 0, 1, Rat(-2));  // -2 a_y d/dy
    } else {
        throw UnknownIdentifier(std::string(id));
    }
    return f;
}

PlaneField combine(const std::vector<std::pair<std::string, Rat>>& terms) {
    PlaneField f;
    for (const auto& [id, coef] : terms) f += basis(id).scaled(coef);
    return f;
}

namespace spaces {

std::vector<PlaneField> VG() {
    std::vector<PlaneField> v;
    for (int i = 1; i <= 11; ++i) v.push_back(basis("Y" + std::to_string(i)));
    return v;
}

std::vector<PlaneField> WG() { return {basis("Y4"), basis("Y8"), basis("Y11")}; }

std::vector<PlaneField> VG_prime() {
    std::vector<PlaneField> v;
    for (int i = 1; i <= 17; ++i) v.push_back(basis("Y" + std::to_string(i)));
    return v;
}

std::vector<PlaneField> sl3() {
    std::vector<PlaneField> v;
    for (int i = 1; i <= 8; ++i) v.push_back(basis("X" + std::to_string(i)));
    return v;
}

std::vector<PlaneField> V1() {
    return {basis("Z1"), basis("Z3"), basis("Z1") + basis("Z5"), basis("Z6")};
}

std::vector<PlaneField> sl2_triple() {
    return {basis("Z1") + basis("Z5"), basis("Z3") - basis("Z4"), basis("Z2")};
}

std::vector<PlaneField> ks2_algebra(const Rat& c0) {
    return {basis("Y8").scaled(Rat(2)),
            basis("Y11") + basis("Y4").scaled(Rat(2)),
            basis("Y1") + basis("Y2").scaled(Rat(3, 2)) - basis("Y6").scaled(Rat(2) * c0)};
}

std::vector<LineField> abel_W() {
    LineField d, xd;
    d.comp[0].add_term(Mono<1>{{0}}, Rat(1));
    xd.comp[0].add_term(Mono<1>{{1}}, Rat(1));
    return {d, xd};
}

std::vector<LineField> abel_V() {
    std::vector<LineField> v = abel_W();
    LineField x2d, x3d;
    x2d.comp[0].add_term(Mono<1>{{2}}, Rat(1));
    x3d.comp[0].add_term(Mono<1>{{3}}, Rat(1));
    v.push_back(x2d);
    v.push_back(x3d);
    return v;
}

}  // namespace spaces

}  // namespace gambier
