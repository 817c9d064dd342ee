// moonfill: command-line front end. Every command prints one JSON document.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moonfill/moonfill.hpp"

using namespace moonfill;

namespace {

struct Options {
  std::optional<int> cap;
  bool count_only = false;
  std::string shape;
  std::string filling;
  std::string perm;
  std::string region;
  std::string diagonals;
  std::string tableau;
  std::string direction = "ne";
  std::string convention = "polygon_edges";
  int n = 0;
  int k = 1;
  int vertex = 1;
  std::optional<int> degree;
  bool trace = false;
};

Caps caps_of(const Options& o) { return o.cap ? Caps::uniform(*o.cap) : Caps::defaults(); }

Permutation perm_arg(const std::string& text) { return Permutation(parse_json_argument(text).get<std::vector<int>>()); }

void emit(const std::string& kind, json body) { std::cout << with_schema(kind, std::move(body)).dump(2) << '\n'; }

template <class Range, class F>
json listing(const Range& items, bool count_only, F&& encode) {
  json out = {{"count", items.size()}};
  if (!count_only) {
    json a = json::array();
    for (const auto& x : items) a.push_back(encode(x));
    out["items"] = a;
  }
  return out;
}

DegreeConvention convention_arg(const std::string& s) {
  if (s == "nontrivial_degree") return DegreeConvention::nontrivial_degree;
  if (s == "total_degree") return DegreeConvention::total_degree;
  if (s == "polygon_edges") return DegreeConvention::polygon_edges;
  throw Error(ErrorCode::InvalidInput, "unknown degree convention " + s);
}

json trace_or_result(const BijectionTrace& t, bool trace) {
  if (trace) return to_json(t);
  return {{"se_filling", to_json(t.se)}, {"fan", to_json(t.fan)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal fillings of moon polyominoes, pipe dreams, flagged tableaux and k-triangulations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap", o.cap, "override every enumeration cap");
  app.add_flag("--count-only", o.count_only, "print counts instead of objects");

  std::function<void()> action;
  auto on = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&action, f] { action = f; }); };

  // enumerate
  auto* en = app.add_subcommand("enumerate", "enumerate objects");
  en->require_subcommand(1);
  auto* en_fill = en->add_subcommand("fillings", "maximal k-NE or k-SE fillings of a moon polyomino");
  en_fill->add_option("--shape", o.shape, "partition or list of boxes (JSON)")->required();
  en_fill->add_option("--k", o.k)->required();
  en_fill->add_option("--dir", o.direction, "ne or se")->check(CLI::IsMember({"ne", "se"}));
  en_fill->add_flag("--count-only", o.count_only);
  on(en_fill, [&] {
    auto m = polyomino_from_json(parse_json_argument(o.shape));
    auto fs = enumerate_maximal_fillings_oracle(m, o.k, o.direction == "se" ? Direction::SE : Direction::NE, caps_of(o));
    auto body = listing(fs, o.count_only, [](const Filling& f) { return to_json(f.marks); });
    body["shape"] = to_json(m);
    body["k"] = o.k;
    body["direction"] = o.direction;
    emit("fillings", body);
  });

  auto* en_pd = en->add_subcommand("pipedreams", "reduced pipe dreams of a permutation");
  en_pd->add_option("--perm", o.perm, "one-line notation (JSON)")->required();
  en_pd->add_option("--region", o.region, "restrict crossings to this shape (JSON)");
  en_pd->add_flag("--count-only", o.count_only);
  on(en_pd, [&] {
    auto s = perm_arg(o.perm);
    auto ds = o.region.empty() ? enumerate_rp(s, caps_of(o))
                               : enumerate_rp_in(s, polyomino_from_json(parse_json_argument(o.region)), caps_of(o));
    auto body = listing(ds, o.count_only, [](const PipeDream& d) { return to_json(d.crossings); });
    body["permutation"] = to_json(s);
    emit("pipedreams", body);
  });

  auto* en_ft = en->add_subcommand("flagged", "k-flagged tableaux of a shape");
  en_ft->add_option("--shape", o.shape, "partition (JSON)")->required();
  en_ft->add_option("--k", o.k)->required();
  en_ft->add_flag("--count-only", o.count_only);
  on(en_ft, [&] {
    auto ts = enumerate_flagged(parse_json_argument(o.shape).get<Partition>(), o.k, caps_of(o));
    auto body = listing(ts, o.count_only, [](const Tableau& t) { return to_json(t); });
    body["k"] = o.k;
    emit("flagged", body);
  });

  auto* en_tr = en->add_subcommand("triangulations", "k-triangulations of the n-gon");
  en_tr->add_option("--n", o.n)->required();
  en_tr->add_option("--k", o.k)->required();
  en_tr->add_flag("--count-only", o.count_only);
  on(en_tr, [&] {
    auto ts = enumerate_triangulations(o.n, o.k, caps_of(o));
    auto body = listing(ts, o.count_only, [](const Triangulation& t) { return to_json(t)["diagonals"]; });
    body["n"] = o.n;
    body["k"] = o.k;
    emit("triangulations", body);
  });

  // biject
  auto* bj = app.add_subcommand("biject", "run the NE-to-SE bijection");
  bj->require_subcommand(1);
  auto* bj_ne = bj->add_subcommand("ne-to-se", "maximal k-NE filling of a Ferrers shape to its k-SE partner");
  bj_ne->add_option("--filling", o.filling, "{\"shape\": ..., \"marks\": ...}")->required();
  bj_ne->add_option("--k", o.k)->required();
  bj_ne->add_flag("--trace", o.trace, "print every intermediate object");
  on(bj_ne, [&] {
    auto t = ne_to_se_trace(filling_from_json(parse_json_argument(o.filling)), o.k);
    emit("bijection", trace_or_result(t, o.trace));
  });

  auto add_triangulation_input = [&](CLI::App* sub) {
    sub->add_option("--n", o.n)->required();
    sub->add_option("--k", o.k)->required();
    sub->add_option("--diagonals", o.diagonals, "nontrivial diagonals [[a,b],...]")->required();
  };
  auto* bj_tf = bj->add_subcommand("triangulation-to-fan", "k-triangulation to its fan of Dyck paths");
  add_triangulation_input(bj_tf);
  bj_tf->add_flag("--trace", o.trace, "print every intermediate object");
  on(bj_tf, [&] {
    auto tri = triangulation_from_json(o.n, o.k, parse_json_argument(o.diagonals));
    auto t = ne_to_se_trace(triangulation_to_filling(tri), o.k);
    json body = o.trace ? to_json(t) : json{{"fan", to_json(t.fan)}};
    body["triangulation"] = to_json(tri);
    body["touch_points"] = touch_points(t.fan);
    emit("bijection", body);
  });

  auto* bj_full = bj->add_subcommand("full-trace", "every stage from a k-triangulation");
  add_triangulation_input(bj_full);
  on(bj_full, [&] {
    auto tri = triangulation_from_json(o.n, o.k, parse_json_argument(o.diagonals));
    auto body = to_json(ne_to_se_trace(triangulation_to_filling(tri), o.k));
    body["triangulation"] = to_json(tri);
    emit("bijection", body);
  });

  // sigma
  auto* sg = app.add_subcommand("sigma", "the permutation sigma_k of a shape");
  sg->require_subcommand(1);
  for (const char* which : {"ferrers", "moon"}) {
    auto* sub = sg->add_subcommand(which, std::string("sigma_k of a ") + which + " shape");
    sub->add_option("--shape", o.shape)->required();
    sub->add_option("--k", o.k)->required();
    const bool moon = std::string(which) == "moon";
    on(sub, [&, moon] {
      auto m = polyomino_from_json(parse_json_argument(o.shape));
      auto s = moon ? sigma_k_moon(m, o.k) : sigma_k_ferrers(m, o.k);
      json ess = json::array();
      for (const auto& e : essential_set(s)) ess.push_back({{"box", to_json(e.box)}, {"rank", e.rank}});
      emit("sigma", {{"k", o.k}, {"permutation", to_json(s)}, {"length", length(s)}, {"essential_set", ess}});
    });
  }

  auto* sch = app.add_subcommand("schubert", "Schubert polynomial as a pipe dream sum");
  sch->add_option("--perm", o.perm)->required();
  sch->add_option("--region", o.region, "restrict to pipe dreams inside this shape");
  on(sch, [&] {
    auto s = perm_arg(o.perm);
    auto p = o.region.empty() ? schubert(s, caps_of(o))
                              : schubert_in_region(s, polyomino_from_json(parse_json_argument(o.region)), caps_of(o));
    emit("polynomial", {{"permutation", to_json(s)}, {"terms", to_json(p)}, {"value_at_ones", p.eval_at_ones()}});
  });

  auto* pos = app.add_subcommand("positivity", "Schubert difference for a stack polyomino");
  pos->add_option("--shape", o.shape)->required();
  pos->add_option("--k", o.k)->required();
  on(pos, [&] {
    auto s = polyomino_from_json(parse_json_argument(o.shape));
    auto diff = positivity_difference(s, o.k, caps_of(o));
    auto rows = row_statistics(s, o.k, caps_of(o));
    emit("positivity", {{"k", o.k},
                        {"ferrers", stack_to_ferrers(s).row_lengths()},
                        {"difference", to_json(diff)},
                        {"monomial_positive", true},
                        {"row_statistics_equal", rows.equal()}});
  });

  auto* csp = app.add_subcommand("csp", "cyclic sieving check for rotation");
  csp->add_option("--n", o.n)->required();
  csp->add_option("--k", o.k)->required();
  on(csp, [&] {
    auto r = csp_check(o.n, o.k, caps_of(o));
    auto body = to_json(r);
    body["f_polynomial"] = to_json(f_polynomial(o.n, o.k));
    emit("csp", body);
  });

  auto* dh = app.add_subcommand("degree-hist", "degree distribution at a vertex");
  dh->add_option("--n", o.n)->required();
  dh->add_option("--k", o.k)->required();
  dh->add_option("--vertex", o.vertex);
  on(dh, [&] {
    json h = json::object();
    for (auto [d, c] : degree_histogram(o.n, o.k, o.vertex, caps_of(o))) h[std::to_string(d)] = c;
    emit("degree_histogram", {{"n", o.n}, {"k", o.k}, {"vertex", o.vertex}, {"histogram", h}});
  });

  auto* det = app.add_subcommand("determinant", "degree count from the determinant");
  det->add_option("--n", o.n)->required();
  det->add_option("--k", o.k)->required();
  det->add_option("--degree", o.degree, "single degree; all degrees 0..n otherwise");
  det->add_option("--convention", o.convention, "nontrivial_degree, total_degree or polygon_edges");
  on(det, [&] {
    auto c = convention_arg(o.convention);
    json counts = json::object();
    if (o.degree) {
      counts[std::to_string(*o.degree)] = determinant_count(o.n, o.k, *o.degree, c);
    } else {
      for (int d = 0; d <= o.n; ++d)
        if (auto v = determinant_count(o.n, o.k, d, c); v != 0) counts[std::to_string(d)] = v;
    }
    emit("determinant", {{"n", o.n}, {"k", o.k}, {"convention", to_string(c)}, {"counts", counts}});
  });

  auto* cc = app.add_subcommand("complex-check", "sphere checks on the complex of k-NE fillings");
  cc->add_option("--shape", o.shape)->required();
  cc->add_option("--k", o.k)->required();
  on(cc, [&] {
    auto m = polyomino_from_json(parse_json_argument(o.shape));
    auto c = build_complex(m, o.k, caps_of(o));
    auto passive = passive_boxes(m, o.k);
    auto body = to_json(sphere_checks(c, &passive));
    body["k"] = o.k;
    body["passive"] = to_json(passive);
    emit("complex_check", body);
  });

  auto* pr = app.add_subcommand("promotion", "flagged promotion of a tableau");
  pr->add_option("--tableau", o.tableau, "rows (JSON)")->required();
  pr->add_option("--k", o.k)->required();
  on(pr, [&] {
    auto t = tableau_from_json(parse_json_argument(o.tableau));
    auto p = flagged_promotion(t, o.k);
    int order = 1;
    for (auto cur = p; cur != t; cur = flagged_promotion(cur, o.k)) ++order;
    emit("promotion", {{"k", o.k}, {"input", to_json(t)}, {"output", to_json(p)}, {"order", order}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    action();
  } catch (const Error& e) {
    std::cout << with_schema("error", error_json(e)).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << with_schema("error", {{"error", "InvalidInput"}, {"message", e.what()}}).dump(2) << '\n';
    return 2;
  }
  return 0;
}
