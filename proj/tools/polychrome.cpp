// Command-line front end: exact polychromatic colorings, epsilon-nets, and
// lower-bound instances over JSON files with "p/q" rational coordinates.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
// exceeded.

#include "polychrome/polychrome.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace polychrome;

namespace {

Json coloring_json(const Coloring& chi) {
  return Json{{"k", chi.k}, {"colors", chi.colors}};
}

Coloring coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("colors"))
    throw std::invalid_argument("coloring must have \"k\" and \"colors\"");
  Coloring chi;
  chi.k = j.at("k").get<int>();
  chi.colors = j.at("colors").get<std::vector<int>>();
  return chi;
}

Json violation_json(const Violation& v) {
  Json j{{"kind", v.kind}};
  if (!v.edge.empty()) j["edge"] = v.edge;
  if (v.point) j["point"] = point_json(*v.point);
  if (v.missing_color) j["missing_color"] = v.missing_color;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json(out_path, j);
}

PointSet points_of(const Instance& inst, bool perturb, std::uint64_t seed) {
  if (inst.kind != "points") throw std::invalid_argument("expected a \"points\" instance");
  PointSet P{inst.points};
  if (!in_general_position(P)) {
    if (!perturb)
      throw std::invalid_argument(
          "points are not in general position; rerun with --perturb");
    P = perturb_to_general_position(P, seed);
  }
  return P;
}

std::vector<HalfPlane> halfplanes_of(const Instance& inst) {
  if (inst.kind != "halfplanes")
    throw std::invalid_argument("expected a \"halfplanes\" instance");
  require_distinct_lines(inst.halfplanes);
  return inst.halfplanes;
}

int run(int argc, char** argv) {
  CLI::App app{"exact polychromatic colorings and epsilon-nets for half-plane ranges"};
  app.require_subcommand(1);

  std::string input, output, svg_path, method = "3k2", verify_mode = "fast", eps_str, result_path;
  int k = 2, n = 0;
  bool perturb = false, exhaustive = false;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_points_opts) {
    cmd->add_option("input", input, "instance JSON file")->required();
    cmd->add_option("-o,--output", output, "write the result here (atomic); default stdout");
    if (with_points_opts) {
      cmd->add_flag("--perturb", perturb, "symbolically perturb degenerate input");
      cmd->add_option("--seed", seed, "perturbation seed");
    }
  };

  auto* cp = app.add_subcommand("color-points", "polychromatic k-coloring of a point set");
  add_common(cp, true);
  cp->add_option("-k", k, "number of colors")->required()->check(CLI::PositiveNumber);
  cp->add_option("--verify", verify_mode, "fast: check the coloring; exhaustive: also search for the optimal threshold")
      ->check(CLI::IsMember({"fast", "exhaustive"}));

  auto* ch = app.add_subcommand("color-halfplanes", "k-coloring of a half-plane family");
  add_common(ch, false);
  ch->add_option("-k", k, "number of colors")->required()->check(CLI::PositiveNumber);
  ch->add_option("--method", method, "coloring method / depth guarantee")
      ->check(CLI::IsMember({"3k2", "4k3"}));

  auto* en = app.add_subcommand("epsnet", "epsilon-net for a point set or half-plane family");
  add_common(en, true);
  en->add_option("--eps", eps_str, "epsilon as an integer or \"p/q\"")->required();

  auto* gl = app.add_subcommand("gen-lowerbound", "tightness instance: 2k-1 curve points plus bulk");
  gl->add_option("-n", n, "total number of points")->required()->check(CLI::PositiveNumber);
  gl->add_option("-k", k, "number of colors")->required()->check(CLI::PositiveNumber);
  gl->add_option("-o,--output", output, "write the instance here (atomic); default stdout");
  gl->add_option("--svg", svg_path, "also render the instance to this SVG file");

  auto* vf = app.add_subcommand("verify", "check a result against an instance");
  add_common(vf, true);
  vf->add_option("--result", result_path, "result JSON produced by another subcommand");
  vf->add_option("-k", k, "number of colors for --exhaustive");
  vf->add_flag("--exhaustive", exhaustive, "search all k-colorings for the optimal threshold");

  auto* rd = app.add_subcommand("render", "render a point instance as SVG");
  rd->add_option("input", input, "instance JSON file")->required();
  rd->add_option("-o,--output", output, "SVG output path")->required();
  rd->add_option("--result", result_path, "coloring result to drive the point fills");

  CLI11_PARSE(app, argc, argv);

  if (cp->parsed()) {
    PointSet P = points_of(load_instance(input), perturb, seed);
    PointColoring pc = color_points(P, k);
    Json res{{"kind", "point-coloring"}, {"threshold", 2 * k - 1},
             {"coloring", coloring_json(pc.coloring)}};
    Json levels = Json::array();
    for (const auto& lv : pc.levels)
      levels.push_back(Json{{"color", lv.color}, {"t", lv.t}, {"hitting_set", lv.hitting_set}});
    res["levels"] = levels;
    auto vr = verify_point_coloring(P, pc.coloring, 2 * k - 1);
    res["verdict"] = vr.ok ? "ok" : "violated";
    if (!vr.ok) res["violation"] = violation_json(*vr.violation);
    if (verify_mode == "exhaustive") res["optimal_threshold"] = exhaustive_best_threshold(P, k);
    emit(res, output);
    return vr.ok ? 0 : 1;
  }

  if (ch->parsed()) {
    auto H = halfplanes_of(load_instance(input));
    Json res{{"kind", "halfplane-coloring"}, {"method", method}};
    Coloring chi;
    int depth_bound;
    if (method == "3k2") {
      depth_bound = 3 * k - 2;
      auto hc = color_halfplanes_3k2(H, k);
      chi = hc.coloring;
      Json layers = Json::array();
      for (const auto& layer : hc.trace.layers) layers.push_back(layer);
      res["layers"] = layers;
      res["residual"] = hc.trace.residual;
      if (hc.witness) res["witness"] = point_json(*hc.witness);
    } else {
      depth_bound = 4 * k - 3;
      chi = color_halfplanes_4k3(H, k);
    }
    res["depth_bound"] = depth_bound;
    res["coloring"] = coloring_json(chi);
    auto vr = verify_halfplane_coloring(H, chi, depth_bound);
    res["verdict"] = vr.ok ? "ok" : "violated";
    if (!vr.ok) res["violation"] = violation_json(*vr.violation);
    emit(res, output);
    return vr.ok ? 0 : 1;
  }

  if (en->parsed()) {
    Rat eps = parse_rational(eps_str);
    Instance inst = load_instance(input);
    EpsNet net;
    VerifyResult vr;
    if (inst.kind == "points") {
      PointSet P = points_of(inst, perturb, seed);
      net = epsnet_points(P, eps);
      vr = verify_epsnet(P, net);
    } else {
      auto H = halfplanes_of(inst);
      net = epsnet_halfplanes(H, eps);
      vr = verify_epsnet(H, net);
    }
    Json res{{"kind", "epsnet"},
             {"eps", rat_json(net.eps)},
             {"net", net.indices},
             {"size_bound_guaranteed", net.size_bound_guaranteed},
             {"verdict", vr.ok ? "ok" : "violated"}};
    if (!vr.ok) res["violation"] = violation_json(*vr.violation);
    emit(res, output);
    return vr.ok ? 0 : 1;
  }

  if (gl->parsed()) {
    auto lb = gen_lower_bound(n, k);
    Instance inst;
    inst.kind = "points";
    for (std::size_t i = 0; i < lb.points.size(); ++i) inst.points.push_back(lb.points[i]);
    Json seps = Json::array();
    for (const auto& h : lb.separators) seps.push_back(halfplane_json(h));
    inst.metadata = Json{{"k", lb.k}, {"curve_indices", lb.curve_indices}, {"separators", seps}};
    if (!svg_path.empty()) {
      SvgOptions opt;
      opt.curve_indices = lb.curve_indices;
      opt.coloring = color_points(lb.points, lb.k).coloring;
      opt.highlight = lb.separators[0];
      atomic_write_file(svg_path, render_svg(lb.points, opt));
    }
    emit(instance_json(inst), output);
    return 0;
  }

  if (vf->parsed()) {
    Instance inst = load_instance(input);
    Json res{{"kind", "verification"}};
    bool ok = true;
    if (!result_path.empty()) {
      Json r = load_json(result_path);
      std::string rkind = r.value("kind", "");
      VerifyResult vr;
      if (rkind == "point-coloring") {
        PointSet P = points_of(inst, perturb, seed);
        vr = verify_point_coloring(P, coloring_from_json(r.at("coloring")),
                                   r.at("threshold").get<int>());
      } else if (rkind == "halfplane-coloring") {
        vr = verify_halfplane_coloring(halfplanes_of(inst),
                                       coloring_from_json(r.at("coloring")),
                                       r.at("depth_bound").get<int>());
      } else if (rkind == "epsnet") {
        EpsNet net{r.at("net").get<std::vector<int>>(), rat_from_json(r.at("eps")), true};
        if (inst.kind == "points")
          vr = verify_epsnet(points_of(inst, perturb, seed), net);
        else
          vr = verify_epsnet(halfplanes_of(inst), net);
      } else {
        throw std::invalid_argument("unrecognized result kind: " + rkind);
      }
      ok = vr.ok;
      res["verdict"] = ok ? "ok" : "violated";
      if (!ok) res["violation"] = violation_json(*vr.violation);
    } else if (exhaustive) {
      PointSet P = points_of(inst, perturb, seed);
      res["optimal_threshold"] = exhaustive_best_threshold(P, k);
      res["k"] = k;
      res["verdict"] = "ok";
    } else {
      throw std::invalid_argument("verify needs --result or --exhaustive");
    }
    emit(res, output);
    return ok ? 0 : 1;
  }

  if (rd->parsed()) {
    Instance inst = load_instance(input);
    if (inst.kind != "points") throw std::invalid_argument("render expects a \"points\" instance");
    PointSet P{inst.points};
    SvgOptions opt;
    if (inst.metadata.contains("curve_indices"))
      opt.curve_indices = inst.metadata.at("curve_indices").get<std::vector<int>>();
    if (inst.metadata.contains("separators") && !inst.metadata.at("separators").empty())
      opt.highlight = halfplane_from_json(inst.metadata.at("separators")[0]);
    if (!result_path.empty()) {
      Json r = load_json(result_path);
      if (r.contains("coloring")) opt.coloring = coloring_from_json(r.at("coloring"));
    }
    atomic_write_file(output, render_svg(P, opt));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
