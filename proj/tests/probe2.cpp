// scratch harness, not part of the suite
#include <cstdio>
#include <string>

#include "prolrig/classify.hpp"

using namespace prolrig;

static std::string node_name(const RootSystem& rs, int node) {
  if (rs.num_factors() == 2 && rs.factor_of_node(node) == 1)
    return "a_{" + std::to_string(node - rs.factors()[0].rank + 1) + "'}";
  return "a_" + std::to_string(node + 1);
}

static std::string rec_label(const RootSystem& rs, const MuRecord& rec) {
  const HComponent* lab = &rec.comps[0];
  for (const HComponent& c : rec.comps)
    if (c.value_factor == 0) { lab = &c; break; }
  if (rec.comps.size() == 1) lab = &rec.comps[0];
  return "(" + node_name(rs, lab->p) + "," + node_name(rs, lab->q) + ")";
}

static void run(const char* name, const RootSystem& rs, const FormSpec& fs,
                std::vector<int> sigma) {
  Grading g(rs, sigma);
  std::printf("== %s sigma={", name);
  for (int s : sigma) std::printf("%d,", s);
  std::printf("}\n");
  for (const MuRecord& rec : enumerate_records(g, fs)) {
    RecordClassification rc = classify_record(g, fs, rec);
    std::printf("  %-14s comps=%zu cls=%-22s table=%2d strata=%zu", rec_label(rs, rec).c_str(),
                rec.comps.size(), row_class_name(rc.cls), rc.table, rc.strata.size());
    if (rc.cls != RowClass::SUPPRESSED) {
      std::printf(" fixdim=%d rigdim=%d riggens=%zu", rc.fix.continuous_dim(),
                  rc.rig.continuous_dim(), rc.rig.phase_gens().size());
    }
    std::printf("\n");
    for (const StratumInfo& st : rc.strata) {
      std::printf("      stratum z=%d par=%d e1z=%d sand=%d fixed-mgs:", st.zero, st.parabolic,
                  st.e1_zero, st.sandwich);
      for (const auto& mg : st.pattern) {
        std::printf(" (");
        for (int v : mg) std::printf("%d", v);
        std::printf(")");
      }
      std::printf("\n");
    }
  }
}

static FormSpec split_form(const RootSystem& rs, SimpleType t) {
  FormSpec fs;
  fs.tag = "split";
  fs.type = t;
  fs.doubled = false;
  fs.node_iota.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) fs.node_iota[i] = i;
  fs.compact.assign(rs.rank(), false);
  return fs;
}

static FormSpec double_form(const RootSystem& rs, SimpleType t) {
  FormSpec fs;
  fs.tag = "cx";
  fs.type = t;
  fs.doubled = true;
  fs.node_iota.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) fs.node_iota[i] = rs.mirror_node(i);
  fs.compact.assign(rs.rank(), false);
  return fs;
}

int main(int argc, char** argv) {
  std::string which = argc > 1 ? argv[1] : "all";
  if (which == "all" || which == "a") {
    RootSystem a3 = RootSystem::simple({Family::A, 3});
    FormSpec fs = split_form(a3, {Family::A, 3});
    run("sl4R", a3, fs, {0, 1});
    run("sl4R", a3, fs, {0, 2});
    run("sl4R", a3, fs, {0, 1, 2});
    RootSystem a3d = RootSystem::doubled({Family::A, 3});
    FormSpec fd = double_form(a3d, {Family::A, 3});
    run("sl4C", a3d, fd, {0, 1, 3, 4});
    run("sl4C", a3d, fd, {0, 2, 3, 5});
  }
  if (which == "all" || which == "a2") {
    RootSystem a2 = RootSystem::simple({Family::A, 2});
    FormSpec fs = split_form(a2, {Family::A, 2});
    run("sl3R", a2, fs, {0, 1});
    RootSystem a2d = RootSystem::doubled({Family::A, 2});
    FormSpec fd = double_form(a2d, {Family::A, 2});
    run("sl3C", a2d, fd, {0, 2});
    run("sl3C", a2d, fd, {0, 1, 2, 3});
  }
  if (which == "all" || which == "b") {
    RootSystem b3 = RootSystem::simple({Family::B, 3});
    FormSpec fs = split_form(b3, {Family::B, 3});
    run("so34", b3, fs, {0, 1});
    run("so34", b3, fs, {0, 2});
    RootSystem b2 = RootSystem::simple({Family::B, 2});
    FormSpec f2 = split_form(b2, {Family::B, 2});
    run("so23", b2, f2, {0, 1});
    run("so23", b2, f2, {1});
  }
  if (which == "all" || which == "c") {
    RootSystem c3 = RootSystem::simple({Family::C, 3});
    FormSpec fs = split_form(c3, {Family::C, 3});
    run("sp6R", c3, fs, {0, 1});
    run("sp6R", c3, fs, {0, 2});
    run("sp6R", c3, fs, {1, 2});
    run("sp6R", c3, fs, {1});
  }
  if (which == "all" || which == "bd") {
    RootSystem b2d = RootSystem::doubled({Family::B, 2});
    FormSpec fd = double_form(b2d, {Family::B, 2});
    run("so5C", b2d, fd, {0, 2});
    run("so5C", b2d, fd, {1, 3});
    run("so5C", b2d, fd, {0, 1, 2, 3});
  }
  if (which == "all" || which == "an") {
    RootSystem a4 = RootSystem::simple({Family::A, 4});
    FormSpec fs = split_form(a4, {Family::A, 4});
    run("sl5R", a4, fs, {0, 1, 2, 3});
    run("sl5R", a4, fs, {1, 2});
  }
  return 0;
}
