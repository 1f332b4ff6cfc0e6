#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <string>

#include "tpos/classes.hpp"
#include "tpos/cone_vertex.hpp"
#include "tpos/error.hpp"
#include "tpos/fan.hpp"
#include "tpos/io.hpp"
#include "tpos/rank_one.hpp"
#include "tpos/seshadri.hpp"
#include "tpos/verify.hpp"

namespace {

using tpos::Json;

Json make_report(const std::string& command, Json inputs, Json result,
                 Json checks = Json::array()) {
    Json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["checks"] = std::move(checks);
    return j;
}

void print_flat(const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            print_flat(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_string()) {
        std::cout << prefix << " = " << j.get<std::string>() << "\n";
    } else {
        std::cout << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const Json& report, const std::string& mode) {
    if (mode == "table") {
        print_flat(report["result"], "");
        for (const auto& row : report["checks"])
            std::cout << (row["pass"].get<bool>() ? "PASS " : "FAIL ")
                      << row["name"].get<std::string>() << " (expected "
                      << row["expected"].get<std::string>() << ", got "
                      << row["got"].get<std::string>() << ")\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

std::string value_str(const tpos::SeshadriResult& r) {
    return r.neg_infinity ? "-inf" : tpos::rat_str(r.value);
}

std::size_t checked_point(const tpos::Fan& fan, std::size_t point) {
    tpos::require(point < fan.max_cones.size(),
                  "--point: index " + std::to_string(point) + " out of range (fan has " +
                      std::to_string(fan.max_cones.size()) + " maximal cones)");
    return point;
}

Json boundary_pair_json(const tpos::BoundaryPair& p) {
    Json arr = Json::array();
    for (const auto& cls : p)
        arr.push_back(Json::array({tpos::rat_str(cls[0]), tpos::rat_str(cls[1])}));
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local positivity invariants on smooth complete toric varieties"};
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // The chosen subcommand stores its work here; main runs it after parsing.
    std::function<int()> action;

    auto* check_cmd = app.add_subcommand("check", "validate a fan file");
    {
        auto fan_path = std::make_shared<std::string>();
        check_cmd->add_option("--fan", *fan_path, "fan JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        check_cmd->callback([&, fan_path] {
            action = [&, fan_path] {
                const tpos::Fan fan = tpos::fan_from_json(tpos::load_json(*fan_path));
                const auto v = tpos::fan_validate(fan);
                Json result;
                result["dim"] = fan.dim;
                result["rays"] = fan.rays.size();
                result["max_cones"] = fan.max_cones.size();
                result["smooth"] = v.smooth;
                result["complete"] = v.complete;
                result["projective"] = v.projective;
                emit(make_report("check", Json{{"fan", *fan_path}}, result), output);
                return 0;
            };
        });
    }

    auto* cones_cmd = app.add_subcommand("cones", "extremal data of the four cones");
    {
        auto fan_path = std::make_shared<std::string>();
        cones_cmd->add_option("--fan", *fan_path, "fan JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        cones_cmd->callback([&, fan_path] {
            action = [&, fan_path] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const auto cs = tpos::cone_system(fan);
                Json result;
                result["eff_divisors"] = tpos::cone_to_json(cs.eff_divisors);
                result["nef_divisors"] = tpos::cone_to_json(cs.nef_divisors);
                result["mori_curves"] = tpos::cone_to_json(cs.mori_curves);
                result["movable_curves"] = tpos::cone_to_json(cs.movable_curves);
                emit(make_report("cones", Json{{"fan", *fan_path}}, result), output);
                return 0;
            };
        });
    }

    auto* sc = app.add_subcommand("seshadri-curve",
                                  "Seshadri constant of a curve class at an invariant point");
    {
        auto fan_path = std::make_shared<std::string>();
        auto curve_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        auto method = std::make_shared<std::string>("both");
        sc->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        sc->add_option("--curve", *curve_path, "curve JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sc->add_option("--point", *point, "maximal cone index")->required();
        sc->add_option("--method", *method, "ray, blowup, or both")
            ->check(CLI::IsMember({"ray", "blowup", "both"}));
        sc->callback([&, fan_path, curve_path, point, method] {
            action = [&, fan_path, curve_path, point, method] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec c = tpos::load_curve(*curve_path, fan);
                const std::size_t s = checked_point(fan, *point);
                Json result;
                Json checks = Json::array();
                if (*method == "ray" || *method == "both")
                    result["ray_formula"] =
                        tpos::seshadri_result_to_json(tpos::seshadri_curve(fan, c, s));
                if (*method == "blowup") {
                    result["blowup"] = tpos::seshadri_result_to_json(
                        tpos::seshadri_curve_blowup(fan, c, s));
                } else if (*method == "both") {
                    const auto cs = tpos::cone_system(fan);
                    if (tpos::cone_contains(cs.movable_curves, c)) {
                        const auto bu = tpos::seshadri_curve_blowup(fan, c, s);
                        result["blowup"] = tpos::seshadri_result_to_json(bu);
                        checks.push_back(tpos::check_row(
                            "methods-agree",
                            result["ray_formula"]["value"].get<std::string>(),
                            value_str(bu)));
                    } else {
                        result["note"] = "blow-up method skipped: class is not movable";
                    }
                }
                Json inputs{{"fan", *fan_path}, {"curve", *curve_path},
                            {"point", s},      {"method", *method}};
                emit(make_report("seshadri-curve", inputs, result, checks), output);
                return 0;
            };
        });
    }

    auto* sd = app.add_subcommand("seshadri-divisor",
                                  "Seshadri constant of a nef divisor at an invariant point");
    {
        auto fan_path = std::make_shared<std::string>();
        auto div_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        sd->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        sd->add_option("--divisor", *div_path, "divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sd->add_option("--point", *point, "maximal cone index")->required();
        sd->callback([&, fan_path, div_path, point] {
            action = [&, fan_path, div_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec a = tpos::load_divisor(*div_path, fan);
                const std::size_t s = checked_point(fan, *point);
                const auto cs = tpos::cone_system(fan);
                Json result{{"value", tpos::rat_str(tpos::seshadri_divisor(fan, cs, a, s))}};
                Json inputs{{"fan", *fan_path}, {"divisor", *div_path}, {"point", s}};
                emit(make_report("seshadri-divisor", inputs, result), output);
                return 0;
            };
        });
    }

    auto* snd = app.add_subcommand(
        "seshadri-nef-dual", "table-driven Seshadri constant of a nef dual class");
    {
        auto fan_path = std::make_shared<std::string>();
        auto table_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        snd->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        snd->add_option("--table", *table_path,
                        "JSON table {\"k\":…, \"values\":[{\"cone\":…, \"value\":…}]}")
            ->required()
            ->check(CLI::ExistingFile);
        snd->add_option("--point", *point, "maximal cone index")->required();
        snd->callback([&, fan_path, table_path, point] {
            action = [&, fan_path, table_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const auto table = tpos::load_nef_table(*table_path);
                const std::size_t s = checked_point(fan, *point);
                const tpos::Rat v = tpos::seshadri_nef_dual(fan, table.k, table.values, s);
                Json result{{"k", table.k}, {"value", tpos::rat_str(v)}};
                Json inputs{{"fan", *fan_path}, {"table", *table_path}, {"point", s}};
                emit(make_report("seshadri-nef-dual", inputs, result), output);
                return 0;
            };
        });
    }

    auto* fd = app.add_subcommand("fujita-divisor",
                                  "maximal multiplicity invariant of a divisor class");
    {
        auto fan_path = std::make_shared<std::string>();
        auto div_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        fd->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        fd->add_option("--divisor", *div_path, "divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        fd->add_option("--point", *point, "maximal cone index")->required();
        fd->callback([&, fan_path, div_path, point] {
            action = [&, fan_path, div_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec a = tpos::load_divisor(*div_path, fan);
                const std::size_t s = checked_point(fan, *point);
                const auto cs = tpos::cone_system(fan);
                const auto r = tpos::fujita_divisor(fan, cs, a, s);
                Json inputs{{"fan", *fan_path}, {"divisor", *div_path}, {"point", s}};
                emit(make_report("fujita-divisor", inputs, tpos::fujita_result_to_json(r)),
                     output);
                return 0;
            };
        });
    }

    auto* fc = app.add_subcommand("fujita-curve",
                                  "maximal multiplicity invariant of a curve class");
    {
        auto fan_path = std::make_shared<std::string>();
        auto curve_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        fc->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        fc->add_option("--curve", *curve_path, "curve JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        fc->add_option("--point", *point, "maximal cone index")->required();
        fc->callback([&, fan_path, curve_path, point] {
            action = [&, fan_path, curve_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec c = tpos::load_curve(*curve_path, fan);
                const std::size_t s = checked_point(fan, *point);
                const auto cs = tpos::cone_system(fan);
                const auto r = tpos::fujita_curve(fan, cs, c, s);
                Json inputs{{"fan", *fan_path}, {"curve", *curve_path}, {"point", s}};
                emit(make_report("fujita-curve", inputs, tpos::fujita_result_to_json(r)),
                     output);
                return 0;
            };
        });
    }

    auto* nl = app.add_subcommand("null-locus", "rays pairing to zero with a movable class");
    {
        auto fan_path = std::make_shared<std::string>();
        auto curve_path = std::make_shared<std::string>();
        nl->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        nl->add_option("--curve", *curve_path, "curve JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        nl->callback([&, fan_path, curve_path] {
            action = [&, fan_path, curve_path] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec c = tpos::load_curve(*curve_path, fan);
                const auto r = tpos::null_locus(fan, c);
                Json inputs{{"fan", *fan_path}, {"curve", *curve_path}};
                emit(make_report("null-locus", inputs, tpos::null_locus_to_json(r)), output);
                return 0;
            };
        });
    }

    auto* bl = app.add_subcommand("blowup", "star subdivision at an invariant point");
    {
        auto fan_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        bl->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        bl->add_option("--point", *point, "maximal cone index")->required();
        bl->callback([&, fan_path, point] {
            action = [&, fan_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const std::size_t s = checked_point(fan, *point);
                const auto ctx = tpos::blowup_at_cone(fan, s);
                Json result;
                result["fan"] = tpos::fan_to_json(ctx.blown);
                result["new_ray"] = ctx.new_ray;
                result["exceptional_divisor"] = tpos::vec_to_json(ctx.exceptional_divisor);
                result["exceptional_curve"] = tpos::vec_to_json(ctx.exceptional_curve);
                Json inputs{{"fan", *fan_path}, {"point", s}};
                emit(make_report("blowup", inputs, result), output);
                return 0;
            };
        });
    }

    auto* vol = app.add_subcommand("volume", "volume of a divisor class");
    {
        auto fan_path = std::make_shared<std::string>();
        auto div_path = std::make_shared<std::string>();
        vol->add_option("--fan", *fan_path, "fan JSON file")->required()->check(CLI::ExistingFile);
        vol->add_option("--divisor", *div_path, "divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        vol->callback([&, fan_path, div_path] {
            action = [&, fan_path, div_path] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec a = tpos::load_divisor(*div_path, fan);
                Json result{{"value", tpos::rat_str(tpos::divisor_volume(fan, a))}};
                Json inputs{{"fan", *fan_path}, {"divisor", *div_path}};
                emit(make_report("volume", inputs, result), output);
                return 0;
            };
        });
    }

    auto* bounds = app.add_subcommand(
        "bounds", "product, volume, and power inequalities for a curve/divisor pair");
    {
        auto fan_path = std::make_shared<std::string>();
        auto curve_path = std::make_shared<std::string>();
        auto div_path = std::make_shared<std::string>();
        auto point = std::make_shared<std::size_t>(0);
        bounds->add_option("--fan", *fan_path, "fan JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        bounds->add_option("--curve", *curve_path, "curve JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        bounds->add_option("--divisor", *div_path, "divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        bounds->add_option("--point", *point, "maximal cone index")->required();
        bounds->callback([&, fan_path, curve_path, div_path, point] {
            action = [&, fan_path, curve_path, div_path, point] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec c = tpos::load_curve(*curve_path, fan);
                const tpos::QVec a = tpos::load_divisor(*div_path, fan);
                const std::size_t s = checked_point(fan, *point);
                const auto cs = tpos::cone_system(fan);
                Json result;
                Json checks = Json::array();
                const auto pb = tpos::bound_product_check(fan, cs, c, a, s);
                Json pj{{"vacuous", pb.vacuous}, {"holds", pb.holds}};
                if (!pb.vacuous) {
                    pj["eps_times_mu"] = tpos::rat_str(pb.lhs);
                    pj["intersection"] = tpos::rat_str(pb.rhs);
                }
                result["product"] = pj;
                checks.push_back(
                    tpos::check_row("product-bound", "holds", pb.holds ? "holds" : "fails"));
                if (tpos::divisor_volume(fan, a) > 0) {
                    const auto vb = tpos::bound_vol_checks(fan, cs, c, a, s);
                    Json vj{{"mu", tpos::rat_str(vb.mu)},
                            {"eps", tpos::rat_str(vb.eps)},
                            {"volume", tpos::rat_str(vb.volume)},
                            {"intersection", tpos::rat_str(vb.intersection)},
                            {"mu_vs_vol", vb.mu_vs_vol},
                            {"eps_vs_vol", vb.eps_vs_vol}};
                    result["volume"] = vj;
                    checks.push_back(tpos::check_row("volume-bounds", "holds",
                                                     vb.mu_vs_vol && vb.eps_vs_vol
                                                         ? "holds"
                                                         : "fails"));
                } else {
                    result["volume"] = "skipped: divisor class has volume 0";
                }
                if (tpos::cone_contains(cs.nef_divisors, a, true)) {
                    const auto pw = tpos::power_bound_check(fan, cs, a, s);
                    result["power"] = Json{{"eps_power", tpos::rat_str(pw.eps_power)},
                                           {"eps_base", tpos::rat_str(pw.eps_base)},
                                           {"holds", pw.holds}};
                    checks.push_back(tpos::check_row("power-bound", "holds",
                                                     pw.holds ? "holds" : "fails"));
                } else {
                    result["power"] = "skipped: divisor class is not ample";
                }
                Json inputs{{"fan", *fan_path},
                            {"curve", *curve_path},
                            {"divisor", *div_path},
                            {"point", s}};
                emit(make_report("bounds", inputs, result, checks), output);
                return 0;
            };
        });
    }

    auto* r1 = app.add_subcommand("rank1", "Picard-rank-1 invariant calculator");
    {
        auto dataset = std::make_shared<std::string>();
        auto n = std::make_shared<std::size_t>(0);
        auto k = std::make_shared<std::size_t>(0);
        auto deg = std::make_shared<std::string>();
        auto eps_div = std::make_shared<std::string>();
        auto mu_div = std::make_shared<std::string>();
        auto eps_curve = std::make_shared<std::string>();
        auto mu_curve = std::make_shared<std::string>();
        auto curve_scale = std::make_shared<std::string>();
        auto root_chain = std::make_shared<bool>(false);
        r1->add_option("--dataset", *dataset, "builtin dataset name, e.g. \"G(2,4)\"");
        r1->add_option("--n", *n, "dimension (alone: P^n; with --k: G(k,n) parameters)");
        r1->add_option("--k", *k, "Grassmann parameter k for G(k,n)");
        r1->add_option("--deg", *deg, "H^n as p/q (switches to explicit data mode)");
        r1->add_option("--eps-div", *eps_div, "eps of H");
        r1->add_option("--mu-div", *mu_div, "mu of H");
        r1->add_option("--eps-curve", *eps_curve, "eps of H^{n-1}");
        r1->add_option("--mu-curve", *mu_curve, "mu of H^{n-1}");
        r1->add_option("--curve-scale", *curve_scale, "factor lam with [C] = lam H^{n-1}");
        r1->add_flag("--root-chain", *root_chain,
                     "also check eps^n <= deg <= mu^n");
        r1->callback([&, dataset, n, k, deg, eps_div, mu_div, eps_curve, mu_curve,
                      curve_scale, root_chain] {
            action = [&, dataset, n, k, deg, eps_div, mu_div, eps_curve, mu_curve,
                      curve_scale, root_chain] {
                tpos::RankOneData data;
                if (!dataset->empty()) {
                    data = tpos::builtin_dataset(*dataset);
                } else if (!deg->empty()) {
                    tpos::require(*n >= 1, "rank1: explicit data needs --n");
                    data.name = "custom";
                    data.dim = *n;
                    data.deg = tpos::parse_rat(*deg);
                    if (!eps_div->empty()) data.eps_div = tpos::parse_rat(*eps_div);
                    if (!mu_div->empty()) data.mu_div = tpos::parse_rat(*mu_div);
                    if (!eps_curve->empty()) data.eps_curve = tpos::parse_rat(*eps_curve);
                    if (!mu_curve->empty()) data.mu_curve = tpos::parse_rat(*mu_curve);
                    if (!curve_scale->empty())
                        data.curve_scale = tpos::parse_rat(*curve_scale);
                    data.root_chain = *root_chain;
                    data = tpos::solve(data);
                } else if (*k >= 1) {
                    tpos::require(*n >= 1, "rank1: G(k,n) needs --n as well");
                    data = tpos::rank_one_grassmann(*k, *n);
                } else if (*n >= 1) {
                    data = tpos::rank_one_projective(*n);
                } else {
                    throw tpos::input_error(
                        "rank1: provide --dataset, --n, --n with --k, or explicit --deg data");
                }
                Json result;
                result["name"] = data.name;
                result["dim"] = data.dim;
                result["deg"] = tpos::rat_str(data.deg);
                result["eps_div"] = tpos::rat_str(*data.eps_div);
                result["mu_div"] = tpos::rat_str(*data.mu_div);
                result["eps_curve"] = tpos::rat_str(*data.eps_curve);
                result["mu_curve"] = tpos::rat_str(*data.mu_curve);
                result["curve_scale"] = tpos::rat_str(data.curve_scale);
                result["curve_eps"] = tpos::rat_str(tpos::curve_eps(data));
                result["curve_mu"] = tpos::rat_str(tpos::curve_mu(data));
                if (!data.note.empty()) result["note"] = data.note;
                const auto cones = tpos::blowup_cones(data);
                result["cones"] = Json{
                    {"eff_divisors", boundary_pair_json(cones.eff_divisors)},
                    {"nef_divisors", boundary_pair_json(cones.nef_divisors)},
                    {"mori_curves", boundary_pair_json(cones.mori_curves)},
                    {"movable_curves", boundary_pair_json(cones.movable_curves)}};
                Json inputs;
                if (!dataset->empty()) inputs["dataset"] = *dataset;
                emit(make_report("rank1", inputs, result), output);
                return 0;
            };
        });
    }

    auto* cv = app.add_subcommand("cone-vertex",
                                  "vertex Seshadri constants of the cone over a surface");
    {
        auto fan_path = std::make_shared<std::string>();
        auto alpha_path = std::make_shared<std::string>();
        auto h_path = std::make_shared<std::string>();
        cv->add_option("--fan", *fan_path, "surface fan JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        cv->add_option("--alpha", *alpha_path, "nef divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        // Long help only: frees the short name so --h can mean the ample class.
        cv->set_help_flag("--help", "Print this help message and exit");
        cv->add_option("--h,--ample", *h_path, "ample divisor JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        cv->callback([&, fan_path, alpha_path, h_path] {
            action = [&, fan_path, alpha_path, h_path] {
                const tpos::Fan fan = tpos::load_fan(*fan_path);
                const tpos::QVec alpha = tpos::load_divisor(*alpha_path, fan);
                const tpos::QVec h = tpos::load_divisor(*h_path, fan);
                const auto cs = tpos::cone_system(fan);
                Json result{
                    {"dual", tpos::rat_str(tpos::vertex_seshadri_dual(fan, cs, alpha, h))},
                    {"curve",
                     tpos::rat_str(tpos::vertex_seshadri_curve(fan, cs, alpha, h))}};
                Json inputs{{"fan", *fan_path}, {"alpha", *alpha_path}, {"ample", *h_path}};
                emit(make_report("cone-vertex", inputs, result), output);
                return 0;
            };
        });
    }

    auto* verify_cmd =
        app.add_subcommand("verify", "run the embedded reproduction battery");
    verify_cmd->callback([&] {
        action = [&] {
            const auto rows = tpos::run_verification();
            bool all_pass = true;
            if (output == "table") {
                for (const auto& row : rows) {
                    all_pass = all_pass && row.pass;
                    std::cout << (row.pass ? "PASS " : "FAIL ") << row.name << " ("
                              << row.checks << " checks) " << row.detail << "\n";
                }
            } else {
                Json result = Json::array();
                Json checks = Json::array();
                for (const auto& row : rows) {
                    all_pass = all_pass && row.pass;
                    result.push_back(Json{{"name", row.name},
                                          {"pass", row.pass},
                                          {"checks", row.checks},
                                          {"detail", row.detail}});
                    checks.push_back(
                        tpos::check_row(row.name, "PASS", row.pass ? "PASS" : "FAIL"));
                }
                emit(make_report("verify", Json::object(), result, checks), output);
            }
            return all_pass ? 0 : 2;
        };
    });

    // Lets --output appear after the subcommand name as well as before it.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return action ? action() : 0;
    } catch (const tpos::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
