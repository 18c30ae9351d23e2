// Command-line surface over the positroid toolkit: permutations and weak
// orders, necklaces and toggles, positroids, plabic graphs, weakly separated
// collections, seeds, twists, and theorem sweeps. JSON on stdout by default;
// --dot / --svg switch graph-shaped output.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "positroidlab/io.hpp"

using namespace plab;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& payload) { std::cout << versioned(payload).dump(2) << "\n"; }

std::vector<long long> parse_window(const std::string& s) {
  std::vector<long long> w;
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  long long v;
  while (in >> v) w.push_back(v);
  return w;
}

struct NecklaceArgs {
  std::string pi, rho, iota, json_path;

  Necklace build() const {
    if (!json_path.empty()) return necklace_from_json(load_json(json_path));
    if (!rho.empty() && !iota.empty())
      return grassmannlike(Perm::from_string(rho), Perm::from_string(iota));
    if (!pi.empty() && !iota.empty()) {
      Perm p = Perm::from_string(pi), i = Perm::from_string(iota);
      return grassmannlike(p.inverse().compose(i), i);
    }
    if (!pi.empty()) return forward_necklace(Perm::from_string(pi));
    throw DomainError("no necklace specified: use --pi, --rho/--iota, or --json");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--pi", pi, "trip permutation (forward necklace)");
    cmd->add_option("--rho", rho, "removal permutation");
    cmd->add_option("--iota", iota, "insertion permutation");
    cmd->add_option("--json", json_path, "necklace JSON file");
  }
};

struct GraphArgs {
  std::string pi, rho, json_path;

  PlabicGraph build() const {
    PlabicGraph G;
    if (!json_path.empty()) G = graph_from_json(load_json(json_path));
    else if (!pi.empty()) G = generate_graph(Perm::from_string(pi));
    else throw DomainError("no graph specified: use --pi or --graph");
    if (!rho.empty()) G = relabel(G, Perm::from_string(rho));
    return G;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--pi", pi, "trip permutation (synthesized reduced graph)");
    cmd->add_option("--rho", rho, "boundary relabeling to apply");
    cmd->add_option("--graph", json_path, "graph JSON file");
  }
};

std::vector<PlueckerValues> seeded_points(const Perm& pi, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<PlueckerValues> pts;
  for (int t = 0; t < count; ++t) pts.push_back(all_plueckers(sample_point(pi, rng)));
  return pts;
}

Json necklace_payload(const Necklace& N) {
  Json j = to_json(N);
  j["pretty"] = N.pretty();
  j["trip"] = N.trip().images();
  j["underlying"] = N.underlying().images();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positroid cluster toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int jobs = 1;
  app.add_option("--seed", seed, "PRNG seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();

  int exit_code = 0;
  // ---- perm ----
  auto* perm = app.add_subcommand("perm", "permutations and weak orders");
  perm->require_subcommand(1);
  {
    auto* type = perm->add_subcommand("type", "type (k, n) of a permutation");
    static std::string arg_pi;
    type->add_option("perm", arg_pi)->required();
    type->callback([&] {
      auto [k, n] = type_of(Perm::from_string(arg_pi));
      emit(Json{{"k", k}, {"n", n}});
    });

    auto* liftc = perm->add_subcommand("lift", "bounded affine lift");
    static std::string lift_pi;
    liftc->add_option("perm", lift_pi)->required();
    liftc->callback([&] { emit(to_json(lift(Perm::from_string(lift_pi)))); });

    auto* len = perm->add_subcommand("length", "affine inversion count");
    static std::string len_pi, len_window;
    len->add_option("perm", len_pi);
    len->add_option("--window", len_window, "window notation, comma separated");
    len->callback([&] {
      AffinePerm f = len_window.empty()
                         ? lift(Perm::from_string(len_pi))
                         : AffinePerm(int(parse_window(len_window).size()),
                                      parse_window(len_window));
      emit(Json{{"length", f.length()}});
    });

    auto* leq = perm->add_subcommand("leq", "circular weak order comparison");
    static std::string leq_a, leq_b;
    leq->add_option("lower", leq_a)->required();
    leq->add_option("upper", leq_b)->required();
    leq->callback([&] {
      emit(Json{{"leq", leq_circ(Perm::from_string(leq_a), Perm::from_string(leq_b))}});
    });
  }

  // ---- necklace ----
  auto* neck = app.add_subcommand("necklace", "Grassmann and Grassmannlike necklaces");
  neck->require_subcommand(1);
  {
    auto* fwd = neck->add_subcommand("forward", "forward necklace of a permutation");
    static std::string fwd_pi;
    fwd->add_option("perm", fwd_pi)->required();
    fwd->callback([&] { emit(necklace_payload(forward_necklace(Perm::from_string(fwd_pi)))); });

    auto* rev = neck->add_subcommand("reverse", "reverse necklace, optionally rotated");
    static std::string rev_pi;
    static int rev_shift = 0;
    rev->add_option("perm", rev_pi)->required();
    rev->add_option("--shift", rev_shift);
    rev->callback(
        [&] { emit(necklace_payload(reverse_necklace(Perm::from_string(rev_pi), rev_shift))); });

    auto* gl = neck->add_subcommand("grassmannlike", "necklace from removal and insertion");
    static std::string gl_rho, gl_iota;
    gl->add_option("rho", gl_rho)->required();
    gl->add_option("iota", gl_iota)->required();
    gl->callback([&] {
      emit(necklace_payload(
          grassmannlike(Perm::from_string(gl_rho), Perm::from_string(gl_iota))));
    });

    auto* tog = neck->add_subcommand("toggle", "toggle a necklace at a position");
    static NecklaceArgs tog_args;
    static int tog_pos = 1;
    tog_args.attach(tog);
    tog->add_option("--at", tog_pos, "position")->required();
    tog->callback([&] { emit(necklace_payload(toggle(tog_args.build(), tog_pos))); });

    auto* cls = neck->add_subcommand("classify", "classify every toggle position");
    static NecklaceArgs cls_args;
    cls_args.attach(cls);
    cls->callback([&] {
      Necklace N = cls_args.build();
      Json by_pos = Json::object();
      for (int a = 1; a <= N.n(); ++a)
        by_pos[std::to_string(a)] = to_string(classify_toggle(N, a));
      emit(Json{{"classification", by_pos}});
    });

    auto* du = neck->add_subcommand("dual", "dual necklace");
    static NecklaceArgs du_args;
    du_args.attach(du);
    du->callback([&] { emit(necklace_payload(dual(du_args.build()))); });

    auto* units = neck->add_subcommand("units", "unit monomials along aligned toggles");
    static std::string u_pi, u_iota;
    units->add_option("pi", u_pi)->required();
    units->add_option("iota", u_iota)->required();
    units->callback([&] {
      UnitMonomialPath ump =
          unit_monomial_path(Perm::from_string(u_pi), Perm::from_string(u_iota));
      Json entries = Json::array();
      for (int a = 1; a <= ump.base.n(); ++a)
        entries.push_back(Json{{"subset", to_json(ump.target.at(a))},
                               {"exponents", ump.exponents[a - 1]}});
      emit(Json{{"base", to_json(ump.base)},
                {"necklace", to_json(ump.target)},
                {"monomials", entries},
                {"toggles", ump.toggle_positions}});
    });
  }

  // ---- positroid ----
  auto* pos = app.add_subcommand("positroid", "basis collections via Gale orders");
  pos->require_subcommand(1);
  {
    auto* has = pos->add_subcommand("contains", "basis membership");
    static std::string has_pi, has_set;
    has->add_option("pi", has_pi)->required();
    has->add_option("subset", has_set)->required();
    has->callback([&] {
      Perm p = Perm::from_string(has_pi);
      Positroid M(p);
      emit(Json{{"contains", M.contains(KSubset::from_string(has_set, p.n()))}});
    });

    auto* en = pos->add_subcommand("enumerate", "all bases");
    static std::string en_pi;
    en->add_option("pi", en_pi)->required();
    en->callback([&] {
      Positroid M(Perm::from_string(en_pi));
      emit(to_json(M, true));
    });

    auto* dim = pos->add_subcommand("dim", "dimension of the cone");
    static std::string dim_pi;
    dim->add_option("pi", dim_pi)->required();
    dim->callback([&] { emit(Json{{"dimension", dimension(Perm::from_string(dim_pi))}}); });
  }

  // ---- plabic ----
  auto* plabic = app.add_subcommand("plabic", "plabic graphs in the disk");
  plabic->require_subcommand(1);
  {
    static bool want_dot = false;

    auto* gen = plabic->add_subcommand("gen", "synthesize a reduced graph");
    static GraphArgs gen_args;
    gen_args.attach(gen);
    gen->add_flag("--dot", want_dot, "DOT output");
    gen->callback([&] {
      PlabicGraph G = gen_args.build();
      if (want_dot) std::cout << dot(G);
      else emit(to_json(G));
    });

    auto* tr = plabic->add_subcommand("trips", "trip permutation");
    static GraphArgs tr_args;
    tr_args.attach(tr);
    tr->callback([&] {
      Trips t = trips(tr_args.build());
      emit(Json{{"trip", t.trip.images()}, {"position_trip", t.pos_trip.images()}});
    });

    auto* fc = plabic->add_subcommand("faces", "face labels");
    static GraphArgs fc_args;
    static std::string fc_mode = "target";
    fc_args.attach(fc);
    fc->add_option("--mode", fc_mode, "target or source");
    fc->callback([&] {
      FaceLabeling fl = face_labels(fc_args.build());
      const auto& lab = fc_mode == "source" ? fl.source : fl.target;
      Json faces = Json::array();
      for (int f = 0; f < fl.fd.num_faces; ++f)
        faces.push_back(Json{{"label", to_json(lab[f])},
                             {"boundary", fl.fd.is_boundary_face(f)}});
      emit(Json{{"faces", faces}, {"necklace", to_json(fl.boundary_necklace)}});
    });

    auto* qv = plabic->add_subcommand("quiver", "dual quiver on faces");
    static GraphArgs qv_args;
    static bool qv_dot = false;
    qv_args.attach(qv);
    qv->add_flag("--dot", qv_dot, "DOT output");
    qv->callback([&] {
      PlabicGraph G = qv_args.build();
      FaceLabeling fl = face_labels(G);
      Quiver q = dual_quiver(G, fl.fd);
      if (qv_dot) {
        std::vector<std::string> names;
        for (int f = 0; f < fl.fd.num_faces; ++f) names.push_back(fl.target[f].to_string());
        std::cout << dot(q, names);
      } else {
        emit(to_json(q));
      }
    });

    auto* rl = plabic->add_subcommand("relabel", "relabel the boundary");
    static GraphArgs rl_args;
    static std::string rl_sigma;
    rl_args.attach(rl);
    rl->add_option("sigma", rl_sigma)->required();
    rl->callback([&] { emit(to_json(relabel(rl_args.build(), Perm::from_string(rl_sigma)))); });

    auto* sm = plabic->add_subcommand("square-move", "square move at a face label");
    static GraphArgs sm_args;
    static std::string sm_face;
    sm_args.attach(sm);
    sm->add_option("face", sm_face)->required();
    sm->callback([&] {
      PlabicGraph G = sm_args.build();
      emit(to_json(square_move(G, KSubset::from_string(sm_face, G.n))));
    });

    auto* rd = plabic->add_subcommand("reduced", "reducedness checks");
    static GraphArgs rd_args;
    rd_args.attach(rd);
    rd->callback([&] { emit(Json{{"reduced", is_reduced(rd_args.build())}}); });
  }

  // ---- wsc ----
  auto* wsc = app.add_subcommand("wsc", "weakly separated collections");
  wsc->require_subcommand(1);
  {
    auto* ck = wsc->add_subcommand("check", "pairwise weak separation with witness");
    static std::string ck_n;
    static std::vector<std::string> ck_sets;
    static NecklaceArgs ck_neck;
    ck_neck.attach(ck);
    ck->add_option("--n", ck_n, "ground set size for explicit subsets");
    ck->add_option("subsets", ck_sets, "explicit subsets");
    ck->callback([&] {
      std::vector<KSubset> subs;
      if (!ck_sets.empty()) {
        int n = std::stoi(ck_n);
        for (const std::string& s : ck_sets) subs.push_back(KSubset::from_string(s, n));
      } else {
        subs = ck_neck.build().subsets();
      }
      auto bad = ws_violation(subs);
      Json j{{"weakly_separated", !bad.has_value()}};
      if (bad) j["witness"] = Json::array({to_json(bad->first), to_json(bad->second)});
      emit(j);
    });

    auto* comp = wsc->add_subcommand("complete", "complete to a maximal collection");
    static std::string comp_pi;
    comp->add_option("pi", comp_pi)->required();
    comp->callback([&] {
      Perm p = Perm::from_string(comp_pi);
      Positroid M(p);
      Necklace N = forward_necklace(p);
      WSCollection C = complete_to_maximal(WSCollection(p.n(), M.k(), N.subsets()), M);
      Json subs = Json::array();
      for (const KSubset& s : C.subsets()) subs.push_back(to_json(s));
      emit(Json{{"size", C.size()}, {"subsets", subs}});
    });

    auto* ti = wsc->add_subcommand("tiling-svg", "tiling picture of a maximal collection");
    static std::string ti_pi;
    ti->add_option("pi", ti_pi)->required();
    ti->callback([&] {
      Perm p = Perm::from_string(ti_pi);
      Positroid M(p);
      Necklace N = forward_necklace(p);
      WSCollection C = complete_to_maximal(WSCollection(p.n(), M.k(), N.subsets()), M);
      std::cout << svg(tiling(C), &N);
    });

    auto* in = wsc->add_subcommand("interior", "subsets enclosed by the necklace curve");
    static NecklaceArgs in_args;
    in_args.attach(in);
    in->callback([&] {
      Necklace N = in_args.build();
      Json subs = Json::array();
      for (const KSubset& s : necklace_interior(N)) subs.push_back(to_json(s));
      emit(Json{{"interior", subs}});
    });
  }

  // ---- seed ----
  auto* seedc = app.add_subcommand("seed", "cluster seeds and quasi-equivalence");
  seedc->require_subcommand(1);
  {
    auto* fg = seedc->add_subcommand("from-graph", "target or source seed of a graph");
    static GraphArgs fg_args;
    static std::string fg_mode = "target";
    fg_args.attach(fg);
    fg->add_option("--mode", fg_mode, "target or source");
    fg->callback([&] {
      emit(to_json(seed_from_graph(
          fg_args.build(), fg_mode == "source" ? LabelMode::source : LabelMode::target)));
    });

    auto* mu = seedc->add_subcommand("mutate", "mutate at mutable vertices");
    static GraphArgs mu_args;
    static std::vector<int> mu_path;
    mu_args.attach(mu);
    mu->add_option("--at", mu_path, "mutable indices, 0-based, applied in order")->required();
    mu->callback([&] {
      Seed s = seed_from_graph(mu_args.build());
      for (int p : mu_path) s = s.mutate(s.num_frozen() + p);
      emit(to_json(s));
    });

    auto* cl = seedc->add_subcommand("closure", "mutation closure");
    static GraphArgs cl_args;
    static std::size_t cl_cap = 2000;
    cl_args.attach(cl);
    cl->add_option("--cap", cl_cap, "seed cap");
    cl->callback([&] {
      Seed s = seed_from_graph(cl_args.build());
      Closure c = mutation_closure(s, cl_cap);
      std::vector<std::string> names;
      for (int v = 0; v < s.size(); ++v) names.push_back(s.label(v)->to_string());
      Json vars = Json::array();
      for (const LaurentPoly& p : c.variables) vars.push_back(p.to_string(names));
      emit(Json{{"seeds", c.seeds.size()}, {"complete", c.complete}, {"variables", vars}});
    });

    auto* qc = seedc->add_subcommand("quasi-check", "quasi-equivalence certificate");
    static std::string qc_pi, qc_rho1, qc_rho2;
    static int qc_points = 20;
    qc->add_option("pi", qc_pi)->required();
    qc->add_option("rho1", qc_rho1)->required();
    qc->add_option("rho2", qc_rho2)->required();
    qc->add_option("--points", qc_points);
    qc->callback([&] {
      Perm p = Perm::from_string(qc_pi);
      auto make = [&](const std::string& rho_str) {
        Perm rho = Perm::from_string(rho_str);
        Perm mu = rho.inverse().compose(p).compose(rho);
        return seed_from_graph(relabel(generate_graph(mu), rho));
      };
      QuasiCertificate cert =
          quasi_equivalent(make(qc_rho1), make(qc_rho2), seeded_points(p, qc_points, seed));
      emit(to_json(cert));
      if (!cert.ok) exit_code = 2;
    });

    auto* qs = seedc->add_subcommand("quasi-search", "mutation search for quasi-equivalence");
    static std::string qs_pi, qs_rho1, qs_rho2;
    static int qs_depth = 4, qs_points = 20;
    qs->add_option("pi", qs_pi)->required();
    qs->add_option("rho1", qs_rho1)->required();
    qs->add_option("rho2", qs_rho2)->required();
    qs->add_option("--depth", qs_depth);
    qs->add_option("--points", qs_points);
    qs->callback([&] {
      Perm p = Perm::from_string(qs_pi);
      auto make = [&](const std::string& rho_str) {
        Perm rho = Perm::from_string(rho_str);
        Perm mu = rho.inverse().compose(p).compose(rho);
        return seed_from_graph(relabel(generate_graph(mu), rho));
      };
      QuasiSearchResult r = quasi_transformation_search(
          make(qs_rho1), make(qs_rho2), qs_depth, seeded_points(p, qs_points, seed));
      Json j{{"found", r.found}};
      if (r.found) {
        j["mutations"] = r.mutations;
        j["certificate"] = to_json(r.certificate);
      }
      emit(j);
      if (!r.found) exit_code = 2;
    });
  }

  // ---- twist ----
  auto* tw = app.add_subcommand("twist", "exact matrix layer and twist maps");
  tw->require_subcommand(1);
  {
    auto* sp = tw->add_subcommand("sample", "positive sample point of the open cell");
    static std::string sp_pi;
    sp->add_option("pi", sp_pi)->required();
    sp->callback([&] {
      SplitMix64 rng(seed);
      emit(to_json(sample_point(Perm::from_string(sp_pi), rng)));
    });

    auto* bm = tw->add_subcommand("boundary", "boundary measurement with random weights");
    static GraphArgs bm_args;
    bm_args.attach(bm);
    bm->callback([&] {
      PlabicGraph G = bm_args.build();
      SplitMix64 rng(seed);
      emit(to_json(boundary_measurement(G, random_weights(G, rng))));
    });

    auto* rt = tw->add_subcommand("right", "right twist along a necklace");
    static NecklaceArgs rt_neck;
    static std::string rt_matrix;
    rt_neck.attach(rt);
    rt->add_option("--matrix", rt_matrix, "matrix JSON file")->required();
    rt->callback([&] {
      emit(to_json(right_twist(rt_neck.build(), matrix_from_json(load_json(rt_matrix)))));
    });

    auto* lt = tw->add_subcommand("left", "left twist along a necklace");
    static NecklaceArgs lt_neck;
    static std::string lt_matrix;
    lt_neck.attach(lt);
    lt->add_option("--matrix", lt_matrix, "matrix JSON file")->required();
    lt->callback([&] {
      emit(to_json(left_twist(lt_neck.build(), matrix_from_json(load_json(lt_matrix)))));
    });

    auto* rr = tw->add_subcommand("roundtrip", "two-sided twist inversion check");
    static NecklaceArgs rr_neck;
    static int rr_count = 10;
    rr_neck.attach(rr);
    rr->add_option("--points", rr_count);
    rr->callback([&] {
      Necklace N = rr_neck.build();
      SplitMix64 rng(seed);
      Json results = Json::array();
      bool ok = true;
      for (int t = 0; t < rr_count; ++t) {
        CheckReport rep = twist_roundtrip_check(N, sample_point(N.trip(), rng));
        ok = ok && rep.ok;
        results.push_back(Json{{"check", "twist-roundtrip"},
                               {"instance", t},
                               {"status", rep.ok ? "pass" : "fail"},
                               {"witness", rep.detail}});
      }
      emit(Json{{"results", results}, {"all_pass", ok}});
      if (!ok) exit_code = 2;
    });

    auto* dg = tw->add_subcommand("diagram", "boundary-measurement diagram check");
    static GraphArgs dg_args;
    dg_args.attach(dg);
    dg->callback([&] {
      PlabicGraph G = dg_args.build();
      SplitMix64 rng(seed);
      DiagramReport rep = diagram_check(G, random_weights(G, rng));
      Json j{{"check", "twist-diagram"},
             {"face_labels_equal", rep.face_labels_equal},
             {"status", rep.face_labels_equal ? "pass" : "fail"}};
      if (rep.first_face_mismatch) j["witness"] = to_json(*rep.first_face_mismatch);
      if (rep.off_label_discrepancy)
        j["off_label_discrepancy"] = to_json(*rep.off_label_discrepancy);
      emit(j);
      if (!rep.face_labels_equal) exit_code = 2;
    });
  }

  // ---- analysis ----
  auto* an = app.add_subcommand("analysis", "toggle graphs and theorem sweeps");
  an->require_subcommand(1);
  {
    auto* sepc = an->add_subcommand("sep", "separating weak-order elements");
    static std::string sep_pi;
    sepc->add_option("pi", sep_pi)->required();
    sepc->callback([&] {
      Json s = Json::array();
      for (const Perm& i : sep_set(Perm::from_string(sep_pi))) s.push_back(i.images());
      emit(Json{{"sep", s}});
    });

    auto* tg = an->add_subcommand("toggle-graph", "toggle graph of a permutation");
    static std::string tg_pi;
    static bool tg_dot = false;
    tg->add_option("pi", tg_pi)->required();
    tg->add_flag("--dot", tg_dot, "DOT output");
    tg->callback([&] {
      Perm p = Perm::from_string(tg_pi);
      ToggleGraph t = toggle_graph(p);
      if (tg_dot) {
        std::cout << dot(t, p);
        return;
      }
      Json verts = Json::array();
      for (const AffinePerm& v : t.vertices) verts.push_back(to_json(v));
      Json edges = Json::array();
      for (auto [x, y] : t.edges) edges.push_back(Json::array({x, y}));
      emit(Json{{"vertices", verts},
                {"edges", edges},
                {"components", t.num_components},
                {"component_of", t.component}});
    });

    auto* co = an->add_subcommand("connected", "toggle connectivity");
    static std::string co_pi;
    co->add_option("pi", co_pi)->required();
    co->callback(
        [&] { emit(Json{{"toggle_connected", is_toggle_connected(Perm::from_string(co_pi))}}); });

    auto* sc = an->add_subcommand("schubert", "schubert classification");
    static std::string sc_pi;
    sc->add_option("pi", sc_pi)->required();
    sc->callback(
        [&] { emit(Json{{"class", to_string(is_schubert(Perm::from_string(sc_pi)))}}); });

    auto* sw = an->add_subcommand("sweep", "exhaustive theorem check");
    static std::string sw_kind;
    static int sw_nmax = 5;
    sw->add_option("kind", sw_kind,
                   "main-2-iff-3 | unit-necklace | aligned-weak-order | aligned-noncrossing | "
                   "exchange-nonbasis | target-ws | schubert | toggle-witness")
        ->required();
    sw->add_option("--n-max", sw_nmax);
    sw->callback([&] {
      SweepReport rep = sweep(sw_kind, sw_nmax, jobs);
      emit(to_json(rep));
      if (!rep.all_pass) exit_code = 2;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 64;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
