#include <catch2/catch_amalgamated.hpp>

#include "hallforge/config.hpp"
#include "hallforge/expr.hpp"

using namespace hallforge;

namespace {

Json a2_json(long q = 2) {
    Json j;
    j["vertices"] = Json::array({"1", "2"});
    j["arrows"] = Json::array({Json::array({"1", "2"})});
    j["q"] = q;
    j["bound"] = Json::array({2, 2});
    j["names"]["P"] = Json::array({1, 1});
    return j;
}

std::shared_ptr<CategoryTable> a2_table(long q = 2) {
    return build_table(parse_config(a2_json(q)), std::string());
}

} // namespace

TEST_CASE("config loading and names") {
    auto t = a2_table();
    CHECK(t->find_class("S1").has_value());
    CHECK(t->find_class("P").has_value());
    CHECK(t->cls(*t->find_class("P")).is_indec);
    CHECK(t->class_name(*t->find_class("P")) == "P");

    Json bad = a2_json();
    bad["arrows"] = Json::array({Json::array({"1", "2"}), Json::array({"2", "1"})});
    CHECK_THROWS_AS(build_table(parse_config(bad), std::string()), InvalidQuiver);
    Json badq = a2_json();
    badq["q"] = 6;
    CHECK_THROWS_AS(build_table(parse_config(badq), std::string()), ConfigError);
}

TEST_CASE("table cache round trip") {
    TableConfig cfg = parse_config(a2_json(3));
    std::string dir = std::filesystem::temp_directory_path() / "hallforge-cache-test";
    std::filesystem::remove_all(dir);
    bool hit = false;
    auto fresh = build_table(cfg, dir, &hit);
    CHECK_FALSE(hit);
    auto cached = build_table(cfg, dir, &hit);
    CHECK(hit);
    REQUIRE(cached->num_classes() == fresh->num_classes());
    for (ClassId c = 0; c < (ClassId)fresh->num_classes(); ++c) {
        CHECK(cached->cls(c).dim == fresh->cls(c).dim);
        CHECK(cached->classify(fresh->cls(c).rep, fresh->cls(c).dim) == c);
        CHECK(cached->aut_count(c) == fresh->aut_count(c));
    }
    ClassId s1 = *fresh->find_class("S1");
    CHECK(hall_mul(*cached, b_gen(*cached, s1), b_gen(*cached, s1)) ==
          hall_mul(*fresh, b_gen(*fresh, s1), b_gen(*fresh, s1)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("parser basics") {
    auto t = a2_table();

    SECTION("well-formed expressions") {
        CHECK_NOTHROW(parse_expr("Z{0}[S1] * Z{0}[S2]", Algebra::Lattice));
        CHECK_NOTHROW(parse_expr("K[(1,0)]^-1 * (Zp[S1] + 2*Zm[P])", Algebra::Heis));
        CHECK_NOTHROW(parse_expr("3/2 + v^-2 * q", Algebra::B));
        CHECK_NOTHROW(parse_expr("X{2}[S1]^3", Algebra::F));
    }

    SECTION("errors") {
        CHECK_THROWS_AS(parse_expr("", Algebra::B), ParseError);
        CHECK_THROWS_AS(parse_expr("Z{0}[S1] +", Algebra::Lattice), ParseError);
        CHECK_THROWS_AS(parse_expr("Z{0}[S1]]", Algebra::Lattice), ParseError);
        CHECK_THROWS_AS(parse_expr("Zp[S1]", Algebra::Lattice), WrongAlgebra);
        CHECK_THROWS_AS(parse_expr("Z{0}[S1]", Algebra::Heis), WrongAlgebra);
        CHECK_THROWS_AS(parse_expr("X{0}[S1]", Algebra::B), WrongAlgebra);
        CHECK_THROWS_AS(parse_expr("K[(1,0)]", Algebra::F), WrongAlgebra);
        // unknown names surface at evaluation
        auto ast = parse_expr("Z{0}[S9]", Algebra::Lattice);
        CHECK_THROWS_AS(eval_expr(*t, ast, Algebra::Lattice), UnknownName);
    }
}

TEST_CASE("parse-render round trip on the expression corpus") {
    // twenty expressions covering every grammar production
    std::vector<std::pair<std::string, Algebra>> corpus = {
        {"1", Algebra::B},
        {"3/2", Algebra::B},
        {"v", Algebra::B},
        {"q", Algebra::B},
        {"v^-2", Algebra::B},
        {"Z[S1]", Algebra::B},
        {"K[(1,0)]", Algebra::B},
        {"K[(1,-1)]^-1", Algebra::B},
        {"Z[S1]*Z[S2]", Algebra::B},
        {"Z[S1] + Z[S2]", Algebra::B},
        {"Z[S1] - v*Z[S2]", Algebra::B},
        {"-Z[P]", Algebra::B},
        {"(Z[S1] + Z[S2])*K[(0,1)]", Algebra::B},
        {"Zp[S1]*Zm[S1]", Algebra::Heis},
        {"Km[(0,1)]*Zm[P]^2", Algebra::Heis},
        {"K[(1,0)]^-1*(Zp[S1] + 2*Zm[P])", Algebra::Heis},
        {"Z{0}[S1]*Z{1}[S2]", Algebra::Lattice},
        {"Z{-2}[P]^2 - 1/2", Algebra::Lattice},
        {"X{0}[S1]*X{1}[S1]", Algebra::F},
        {"X{3}[P] + X{-3}[S2]*X{0}[S1]", Algebra::F},
    };
    REQUIRE(corpus.size() == 20);
    for (auto& [src, alg] : corpus) {
        AstPtr a1 = parse_expr(src, alg);
        std::string rendered = render_expr(a1);
        AstPtr a2 = parse_expr(rendered, alg);
        INFO(src << "  ->  " << rendered);
        CHECK(ast_equal(a1, a2));
        CHECK(render_expr(a2) == rendered);
    }
}

TEST_CASE("evaluation") {
    auto tp = a2_table();
    auto& t = *tp;
    ClassId S1 = *t.find_class("S1"), S2 = *t.find_class("S2");

    SECTION("lattice hall product") {
        auto r = eval_expr(t, parse_expr("Z{0}[S1]*Z{0}[S2]", Algebra::Lattice), Algebra::Lattice);
        REQUIRE(r.l.size() == 1);
        CHECK(r.l.begin()->first.sites.at(0) == t.direct_sum(S1, S2));
        CHECK(r.l.begin()->second == Coeff::one(t.ground()));
    }

    SECTION("heis cross relation includes the K term") {
        auto r = eval_expr(t, parse_expr("Zp[S1]*Zm[S1]", Algebra::Heis), Algebra::Heis);
        REQUIRE(r.h.size() == 2);
        bool has_k = false;
        for (auto& [k, c] : r.h)
            if (k.minus == b_unit_key(t) && k.plus == BKey{{1, 0}, t.zero_class()})
                has_k = c == Coeff::one(t.ground());
        CHECK(has_k);
    }

    SECTION("unit K") {
        auto r = eval_expr(t, parse_expr("K[(0,0)]", Algebra::Lattice), Algebra::Lattice);
        CHECK(r.l == lat_unit(t));
    }

    SECTION("association independence") {
        auto r1 = eval_expr(t, parse_expr("(Z[S1]*Z[S2])*Z[S1]", Algebra::B), Algebra::B);
        auto r2 = eval_expr(t, parse_expr("Z[S1]*(Z[S2]*Z[S1])", Algebra::B), Algebra::B);
        CHECK(r1.b == r2.b);
    }

    SECTION("scalars and powers") {
        auto r = eval_expr(t, parse_expr("q - v^2", Algebra::B), Algebra::B);
        CHECK(r.b.empty());
        auto r2 = eval_expr(t, parse_expr("K[(1,0)]^-1 * K[(1,0)]", Algebra::B), Algebra::B);
        CHECK(r2.b == b_unit(t));
    }

    SECTION("out of table surfaces") {
        CHECK_THROWS_AS(eval_expr(t, parse_expr("Z[S1]^5", Algebra::B), Algebra::B), OutOfTable);
    }

    SECTION("deterministic serialization ordering") {
        auto r = eval_expr(t, parse_expr("Z[S2]*Z[S1]", Algebra::B), Algebra::B);
        auto j = r.to_json(t);
        REQUIRE(j.size() == 2);
        CHECK(j[0]["obj"] != j[1]["obj"]);
        CHECK(j[0].contains("coeff"));
        auto txt = r.to_text(t);
        CHECK(txt.find("Z[") != std::string::npos);
    }
}
