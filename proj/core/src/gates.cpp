#include "stabatlas/gates.hpp"

#include <array>
#include <stdexcept>

namespace stabatlas {

const Gen kAllGens[kNumGens] = {Gen::H1, Gen::H2, Gen::P1, Gen::P2, Gen::C12, Gen::C21};

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::H1: return "H1";
        case Gen::H2: return "H2";
        case Gen::P1: return "P1";
        case Gen::P2: return "P2";
        case Gen::C12: return "C12";
        case Gen::C21: return "C21";
    }
    throw std::invalid_argument("gen_name: bad generator");
}

Gen gen_from_name(const std::string& name) {
    for (Gen g : kAllGens)
        if (name == gen_name(g)) return g;
    throw std::invalid_argument("unknown generator name: " + name);
}

ExactMatrix hadamard_2x2() {
    ExactMatrix m(2, 1);
    m.at(0, 0) = GaussianInt(1);
    m.at(0, 1) = GaussianInt(1);
    m.at(1, 0) = GaussianInt(1);
    m.at(1, 1) = GaussianInt(-1);
    return m;
}

ExactMatrix phase_2x2() {
    ExactMatrix m(2, 0);
    m.at(0, 0) = GaussianInt(1);
    m.at(1, 1) = GaussianInt(0, 1);
    return m;
}

namespace {

/* CNOT with the given control/target bit positions inside the 2-qubit index */
ExactMatrix cnot_matrix(int control_bit, int target_bit) {
    ExactMatrix m(4, 0);
    for (int x = 0; x < 4; ++x) {
        int y = (x >> control_bit) & 1 ? x ^ (1 << target_bit) : x;
        m.at(y, x) = GaussianInt(1);
    }
    return m;
}

std::array<ExactMatrix, kNumGens> build_gen_matrices() {
    ExactMatrix id2 = ExactMatrix::identity(2);
    std::array<ExactMatrix, kNumGens> g;
    /* qubit 1 is the low bit of the index, so it sits in the second
       Kronecker factor */
    g[static_cast<int>(Gen::H1)] = ExactMatrix::kron(id2, hadamard_2x2());
    g[static_cast<int>(Gen::H2)] = ExactMatrix::kron(hadamard_2x2(), id2);
    g[static_cast<int>(Gen::P1)] = ExactMatrix::kron(id2, phase_2x2());
    g[static_cast<int>(Gen::P2)] = ExactMatrix::kron(phase_2x2(), id2);
    g[static_cast<int>(Gen::C12)] = cnot_matrix(0, 1);
    g[static_cast<int>(Gen::C21)] = cnot_matrix(1, 0);
    return g;
}

}  // namespace

const ExactMatrix& gen_matrix(Gen g) {
    static const std::array<ExactMatrix, kNumGens> m = build_gen_matrices();
    return m[static_cast<int>(g)];
}

ExactMatrix eval_word(const Word& w) {
    ExactMatrix m = ExactMatrix::identity(4);
    for (Gen g : w) m = m * gen_matrix(g);
    return m;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s.push_back(' ');
        s += gen_name(w[i]);
    }
    return s;
}

ExactMatrix omega_4x4() {
    return ExactMatrix::identity(4).times_phase(1);
}

namespace {

Word rep(const Word& unit, int times) {
    Word w;
    for (int i = 0; i < times; ++i) w.insert(w.end(), unit.begin(), unit.end());
    return w;
}

using G = Gen;

std::vector<Relation> build_catalog() {
    std::vector<Relation> cat;
    auto add = [&](const std::string& name, std::vector<RelationEquality> eqs) {
        cat.push_back({name, std::move(eqs)});
    };

    add("h_squared", {{{G::H1, G::H1}, {}, 0}, {{G::H2, G::H2}, {}, 0}});
    add("p_fourth", {{{G::P1, G::P1, G::P1, G::P1}, {}, 0},
                     {{G::P2, G::P2, G::P2, G::P2}, {}, 0}});
    add("hp_phase", {{rep({G::H1, G::P1}, 3), {}, 1},
                     {rep({G::P1, G::H1}, 3), {}, 1},
                     {rep({G::H2, G::P2}, 3), {}, 1},
                     {rep({G::P2, G::H2}, 3), {}, 1}});
    add("c_squared", {{{G::C12, G::C12}, {}, 0}, {{G::C21, G::C21}, {}, 0}});
    add("pp_commute", {{{G::P1, G::P1, G::P1, G::P2, G::P1}, {G::P2}, 0},
                       {{G::P2, G::P2, G::P2, G::P1, G::P2}, {G::P1}, 0}});
    add("hh_commute", {{{G::H1, G::H2, G::H1}, {G::H2}, 0},
                       {{G::H2, G::H1, G::H2}, {G::H1}, 0}});
    add("hp_commute", {{{G::P1, G::P1, G::P1, G::H2, G::P1}, {G::H2}, 0},
                       {{G::P2, G::P2, G::P2, G::H1, G::P2}, {G::H1}, 0}});
    add("four_generator",
        {{{G::C12, G::H2, G::C12, G::P2, G::C12, G::P2, G::P2, G::P2, G::H2}, {G::P1}, 0},
         {{G::C21, G::H1, G::C21, G::P1, G::C21, G::P1, G::P1, G::P1, G::H1}, {G::P2}, 0}});
    add("cnot_transform", {{{G::H1, G::H2, G::C21, G::H1, G::H2}, {G::C12}, 0},
                           {{G::H2, G::H1, G::C12, G::H2, G::H1}, {G::C21}, 0}});
    add("cp_fourth", {{rep({G::C12, G::P2}, 4), {G::P1, G::P1}, 0},
                      {rep({G::C21, G::P1}, 4), {G::P2, G::P2}, 0}});
    add("cc_braid", {{{G::C12, G::C21, G::C12}, {G::C21, G::C12, G::C21}, 0}});
    add("pc_commute", {{{G::P1, G::P1, G::P1, G::C12, G::P1}, {G::C12}, 0},
                       {{G::P2, G::P2, G::P2, G::C21, G::P2}, {G::C21}, 0}});
    add("ch_fourth", {{rep({G::C12, G::H2}, 4), {G::P1, G::P1}, 0},
                      {rep({G::C21, G::H1}, 4), {G::P2, G::P2}, 0}});
    add("cpcp_exchange", {{{G::C12, G::P2, G::C12, G::P2}, {G::P2, G::C12, G::P2, G::C12}, 0},
                          {{G::C21, G::P1, G::C21, G::P1}, {G::P1, G::C21, G::P1, G::C21}, 0}});
    add("chp_squared",
        {{rep({G::C12, G::H1, G::P2, G::P2}, 2), rep({G::P2, G::P2, G::H1, G::C12}, 2), 0},
         {rep({G::C21, G::H2, G::P1, G::P1}, 2), rep({G::P1, G::P1, G::H2, G::C21}, 2), 0}});
    add("hadamard_transform",
        {{{G::C21, G::C12, G::C21, G::H1, G::C21, G::C12, G::C21}, {G::H2}, 0},
         {{G::C12, G::C21, G::C12, G::H2, G::C12, G::C21, G::C12}, {G::H1}, 0}});
    return cat;
}

}  // namespace

const std::vector<Relation>& relation_catalog() {
    static const std::vector<Relation> cat = build_catalog();
    return cat;
}

bool verify_relation(const Relation& r) {
    for (const auto& eq : r.equalities) {
        ExactMatrix lhs = eval_word(eq.lhs);
        ExactMatrix rhs = eval_word(eq.rhs).times_phase(eq.omega_power);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace stabatlas
