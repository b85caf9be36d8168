#include "horoflex/report.hpp"

#include <algorithm>
#include <sstream>

#include "horoflex/oracle.hpp"

namespace horoflex {

using nlohmann::json;

namespace {

constexpr long kJsonIntLimit = 1LL << 53;

json rat_to_json(const Rat& q) { return q.get_str(); }

Rat json_to_rat(const json& j) {
    if (!j.is_string()) fail(Errc::BadInput, "expected rational as string");
    Rat q(j.get<std::string>());
    q.canonicalize();
    return q;
}

json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat_to_json(q));
    return a;
}

RatVec json_to_ratvec(const json& j) {
    RatVec v;
    for (const auto& e : j) v.push_back(json_to_rat(e));
    return v;
}

json obstruction_to_json(const IntFeasibility& f) {
    json j;
    switch (f.kind) {
        case IntFeasibility::Kind::InfeasibleLP:
            j["kind"] = "lp";
            j["farkas"] = ratvec_to_json(f.farkas->y);
            break;
        case IntFeasibility::Kind::InfeasibleCongruence: {
            j["kind"] = "congruence";
            j["modulus"] = int_to_json(f.congruence->modulus);
            j["functional"] = vec_to_json(f.congruence->functional);
            j["columns"] = f.congruence->columns;
            break;
        }
        case IntFeasibility::Kind::InfeasibleComposite: {
            j["kind"] = "composite";
            json fz = json::array();
            for (const auto& c : f.forced_zero)
                fz.push_back({{"column", c.column}, {"dual", ratvec_to_json(c.dual)}});
            j["forced_zero"] = fz;
            j["congruence"] = {{"modulus", int_to_json(f.congruence->modulus)},
                               {"functional", vec_to_json(f.congruence->functional)},
                               {"columns", f.congruence->columns}};
            break;
        }
        default: fail(Errc::BadInput, "only infeasibility certificates serialize");
    }
    return j;
}

IntFeasibility json_to_obstruction(const json& j) {
    IntFeasibility f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lp") {
        f.kind = IntFeasibility::Kind::InfeasibleLP;
        f.farkas = FarkasCertificate{json_to_ratvec(j.at("farkas"))};
    } else if (kind == "congruence") {
        f.kind = IntFeasibility::Kind::InfeasibleCongruence;
        CongruenceCertificate c;
        c.modulus = json_to_int(j.at("modulus"));
        c.functional = json_to_vec(j.at("functional"));
        c.columns = j.at("columns").get<std::vector<std::size_t>>();
        f.congruence = c;
    } else if (kind == "composite") {
        f.kind = IntFeasibility::Kind::InfeasibleComposite;
        for (const auto& e : j.at("forced_zero"))
            f.forced_zero.push_back(ForcedZeroCertificate{e.at("column").get<std::size_t>(),
                                                          json_to_ratvec(e.at("dual"))});
        CongruenceCertificate c;
        c.modulus = json_to_int(j.at("congruence").at("modulus"));
        c.functional = json_to_vec(j.at("congruence").at("functional"));
        c.columns = j.at("congruence").at("columns").get<std::vector<std::size_t>>();
        f.congruence = c;
    } else {
        fail(Errc::BadInput, "unknown obstruction kind");
    }
    return f;
}

const char* regularity_name(Regularity r) {
    switch (r) {
        case Regularity::Regular: return "regular";
        case Regularity::NotRegular: return "not_regular";
        case Regularity::Undecided: return "undecided";
        case Regularity::NotComputed: return "not_computed";
    }
    return "not_computed";
}

json bounds_to_json(const Bounds& b) {
    return {{"degree", int_to_json(b.degree)},
            {"module_degree", int_to_json(b.module_degree)},
            {"search_degree", int_to_json(b.search_degree)},
            {"root_height", int_to_json(b.root_height)}};
}

std::string oracle_cross_check(const HoroVariety& h, const Bounds& bounds) {
    int r = h.rank();
    long d = std::min<long>(r <= 2 ? 8 : 4, bounds.degree.get_si());
    long coeff = 2 * d;
    const IntMat& gens = h.gens_m();
    IntVec x(r, Int(-d));
    bool more = r > 0;
    while (more) {
        if (h.sigma_dual().contains(x)) {
            bool engine = h.semigroup().member(x);
            bool brute = oracle::brute_member(gens, x, coeff);
            if (engine != brute) return "member mismatch at " + to_string(x);
        } else if (oracle::brute_in_cone(gens, x)) {
            return "cone mismatch at " + to_string(x);
        }
        std::size_t i = r;
        while (i-- > 0) {
            if (x[i] < d) {
                x[i] += 1;
                break;
            }
            x[i] = -d;
            if (i == 0) more = false;
        }
    }
    return "ok";
}

}  // namespace

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) {
        long x = v.get_si();
        if (x < kJsonIntLimit && x > -kJsonIntLimit) return x;
    }
    return v.get_str();
}

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    fail(Errc::BadInput, "expected integer or decimal string");
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec json_to_vec(const json& j) {
    if (!j.is_array()) fail(Errc::BadInput, "expected array");
    IntVec v;
    for (const auto& e : j) v.push_back(json_to_int(e));
    return v;
}

json mat_to_json(const IntMat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_to_json(row));
    return a;
}

IntMat json_to_mat(const json& j) {
    if (!j.is_array()) fail(Errc::BadInput, "expected array of arrays");
    IntMat m;
    for (const auto& e : j) m.push_back(json_to_vec(e));
    return m;
}

InputDocument parse_input(const json& j) {
    InputDocument in;
    if (!j.is_object() || !j.contains("group") || !j.contains("generators"))
        fail(Errc::BadInput, "input needs 'group' and 'generators'");
    const json& g = j.at("group");
    if (g.contains("simple_factors"))
        for (const auto& f : g.at("simple_factors")) {
            std::string t = f.at("type").get<std::string>();
            if (t.size() != 1) fail(Errc::BadInput, "factor type must be a single letter");
            in.group.simple_factors.push_back(SimpleFactor{t[0], f.at("rank").get<int>()});
        }
    in.group.torus_rank = g.value("torus_rank", 0);
    validate(in.group);
    in.generators = json_to_mat(j.at("generators"));
    for (const auto& v : in.generators)
        if (static_cast<int>(v.size()) != in.group.ambient_dim())
            fail(Errc::BadInput, "generator length must equal total rank plus torus rank");
    if (j.contains("bounds")) {
        for (const auto& [k, v] : j.at("bounds").items()) {
            if (k != "degree" && k != "module_degree" && k != "search_degree" &&
                k != "root_height")
                fail(Errc::BadInput, "unknown bound '" + k + "'");
            in.bounds[k] = json_to_int(v);
        }
    }
    return in;
}

json input_to_json(const InputDocument& in) {
    json g;
    g["simple_factors"] = json::array();
    for (const auto& f : in.group.simple_factors)
        g["simple_factors"].push_back({{"type", std::string(1, f.type)}, {"rank", f.rank}});
    g["torus_rank"] = in.group.torus_rank;
    json j;
    j["group"] = g;
    j["generators"] = mat_to_json(in.generators);
    if (!in.bounds.empty()) {
        json b;
        for (const auto& [k, v] : in.bounds) b[k] = int_to_json(v);
        j["bounds"] = b;
    }
    return j;
}

Bounds resolve_bounds(const HoroVariety& h, const InputDocument& in,
                      const std::map<std::string, Int>& overrides) {
    Bounds b = h.default_bounds();
    auto apply = [&](const std::map<std::string, Int>& m) {
        for (const auto& [k, v] : m) {
            if (v < 0) fail(Errc::BadInput, "bounds must be nonnegative");
            if (k == "degree")
                b.degree = v;
            else if (k == "module_degree")
                b.module_degree = v;
            else if (k == "search_degree")
                b.search_degree = v;
            else if (k == "root_height")
                b.root_height = v;
            else
                fail(Errc::BadInput, "unknown bound '" + k + "'");
        }
    };
    apply(in.bounds);
    apply(overrides);
    return b;
}

json analyze_document(const InputDocument& in, const std::map<std::string, Int>& bound_overrides,
                      const ReportOptions& opt) {
    HoroVariety h = HoroVariety::build(in.group, in.generators);
    Bounds bounds = resolve_bounds(h, in, bound_overrides);
    FlexReport flex = flexibility(h, bounds);

    json j;
    j["format_version"] = 1;
    j["input"] = input_to_json(in);
    j["bounds_used"] = bounds_to_json(bounds);
    j["lattice_rank"] = h.rank();
    j["dim_x"] = flex.dim_x;
    j["sigma_dual_rays"] = mat_to_json(h.sigma_dual().rays());
    j["sigma_rays"] = mat_to_json(h.sigma().rays());
    j["theta_dual_rays"] = mat_to_json(h.theta_dual().rays());
    j["theta_rays"] = mat_to_json(h.theta().rays());
    j["module_generators"] = mat_to_json(flex.module_gens.gens);
    j["module_generators_certified_up_to"] = int_to_json(flex.module_gens.certified_up_to);
    j["gamma_min_rays"] = mat_to_json(flex.gamma.gamma_min.rays());
    j["gamma_max_rays"] = mat_to_json(flex.gamma.gamma_max.rays());
    j["verdict"] = verdict_name(flex.verdict);

    json stats = json::array();
    for (const auto& rs : flex.ray_statuses) {
        json e;
        e["ray"] = vec_to_json(rs.ray);
        e["codim_one"] = rs.codim_one;
        if (!rs.status) {
            e["status"] = nullptr;
        } else {
            json s;
            switch (rs.status->kind) {
                case SaturationStatus::Kind::AlmostSaturated: {
                    s["kind"] = "almost_saturated";
                    s["witness"] = vec_to_json(rs.status->witness);
                    auto cert = h.semigroup().member_certificate(rs.status->witness);
                    s["witness_certificate"] = vec_to_json(*cert);
                    json shifts = json::array();
                    for (const auto& m : flex.module_gens.gens) {
                        auto sc = h.semigroup().member_certificate(add(rs.status->witness, m));
                        shifts.push_back(vec_to_json(*sc));
                    }
                    s["shift_certificates"] = shifts;
                    break;
                }
                case SaturationStatus::Kind::NowhereSaturatedCertified:
                    s["kind"] = "nowhere_saturated";
                    s["obstruction"] = obstruction_to_json(rs.status->obstruction);
                    s["search_bound"] = int_to_json(rs.status->bound);
                    break;
                case SaturationStatus::Kind::UndecidedUpToBound:
                    s["kind"] = "undecided";
                    s["bound"] = int_to_json(rs.status->bound);
                    break;
            }
            e["status"] = s;
        }
        stats.push_back(e);
    }
    j["ray_statuses"] = stats;

    json certs;
    if (flex.hyperplane_normal) certs["hyperplane_normal"] = vec_to_json(*flex.hyperplane_normal);
    j["certificates"] = certs;

    if (opt.with_orbits) {
        std::vector<OrbitInfo> orbits = orbit_lattice(h);
        for (auto& o : orbits) {
            if (o.codim == 1) {
                const IntMat& rays = o.face.tau.pointed_rays();
                for (const auto& rs : flex.ray_statuses) {
                    if (!rs.codim_one || rays.size() != 1 || rays[0] != rs.ray) continue;
                    switch (rs.status->kind) {
                        case SaturationStatus::Kind::AlmostSaturated:
                            o.regularity = Regularity::Regular;
                            break;
                        case SaturationStatus::Kind::NowhereSaturatedCertified:
                            o.regularity = Regularity::NotRegular;
                            break;
                        case SaturationStatus::Kind::UndecidedUpToBound:
                            o.regularity = Regularity::Undecided;
                            break;
                    }
                }
            }
        }
        json arr = json::array();
        for (const auto& o : orbits) {
            json e;
            e["tau_rays"] = mat_to_json(o.face.tau.rays());
            e["tau_hat_rays"] = mat_to_json(o.face.tau_hat.rays());
            e["orbit_dim"] = o.orbit_dim;
            e["codim"] = o.codim;
            e["regularity"] = regularity_name(o.regularity);
            IntMat face_gens;
            for (auto i : o.face_gen_indices) face_gens.push_back(h.gens_m()[i]);
            e["face_generators"] = mat_to_json(face_gens);
            arr.push_back(e);
        }
        j["orbits"] = arr;
    }

    if (opt.with_holes) {
        json e;
        e["degree_bound"] = int_to_json(bounds.degree);
        e["points"] = mat_to_json(saturation_holes(h.semigroup(), bounds.degree));
        j["holes"] = e;
    }

    if (opt.with_roots) {
        json arr = json::array();
        const IntMat& rays = h.sigma().pointed_rays();
        for (int i = 0; i < static_cast<int>(rays.size()); ++i) {
            json e;
            e["ray"] = vec_to_json(rays[i]);
            e["max_height"] = int_to_json(bounds.root_height);
            IntMat roots;
            for (const auto& root : demazure_roots(h.sigma(), i, bounds.root_height))
                roots.push_back(root.e);
            e["roots"] = mat_to_json(roots);
            arr.push_back(e);
        }
        j["demazure_roots"] = arr;
    }

    if (opt.with_lnd) {
        json arr = json::array();
        for (const auto& rs : flex.ray_statuses) {
            if (!rs.codim_one ||
                rs.status->kind != SaturationStatus::Kind::AlmostSaturated)
                continue;
            json e;
            e["ray"] = vec_to_json(rs.ray);
            auto root = find_lnd_root(h, rs.ray_index, *rs.status, bounds);
            if (!root) {
                e["found"] = false;
                e["root_height"] = int_to_json(bounds.root_height);
            } else {
                e["found"] = true;
                e["e"] = vec_to_json(root->root.e);
                e["in_theta_dual"] = root->in_theta_dual;
                e["ideal_generators"] = mat_to_json(root->ideal_gens);
                json shifts = json::array();
                for (const auto& chk : root->shift_checks)
                    shifts.push_back({{"generator", vec_to_json(chk.ideal_gen)},
                                      {"shifted", vec_to_json(chk.shifted)},
                                      {"certificate", vec_to_json(chk.certificate)}});
                e["shift_checks"] = shifts;
            }
            arr.push_back(e);
        }
        j["lnd_roots"] = arr;
    }

    if (opt.oracle_check) j["oracle_check"] = oracle_cross_check(h, bounds);
    return j;
}

VerifyOutcome verify_report(const json& report) {
    VerifyOutcome out;
    auto check = [&](const std::string& name, bool ok) {
        out.checks.emplace_back(name, ok);
        out.ok = out.ok && ok;
    };

    InputDocument in = parse_input(report.at("input"));
    HoroVariety h = HoroVariety::build(in.group, in.generators);
    const AffineSemigroup& s = h.semigroup();

    check("lattice rank", report.at("lattice_rank").get<int>() == h.rank());
    check("sigma_dual rays", json_to_mat(report.at("sigma_dual_rays")) == h.sigma_dual().rays());
    check("sigma rays", json_to_mat(report.at("sigma_rays")) == h.sigma().rays());
    check("theta rays", json_to_mat(report.at("theta_rays")) == h.theta().rays());
    check("dim formula", report.at("dim_x").get<long>() == dimension(h));

    ModuleGens mg;
    mg.gens = json_to_mat(report.at("module_generators"));
    mg.certified_up_to = json_to_int(report.at("module_generators_certified_up_to"));
    bool mg_ok = !mg.gens.empty() && is_zero(mg.gens.front());
    for (const auto& m : mg.gens) mg_ok = mg_ok && s.cone().contains(m);
    check("module generators lie in the saturation", mg_ok);

    std::vector<int> codim1 = codim_one_rays(h);
    const IntMat& rays = h.sigma().pointed_rays();
    bool flags_ok = true;
    IntMat sig_rays, und_rays;
    for (const auto& e : report.at("ray_statuses")) {
        IntVec ray = json_to_vec(e.at("ray"));
        auto it = std::find(rays.begin(), rays.end(), ray);
        if (it == rays.end()) {
            flags_ok = false;
            continue;
        }
        int idx = static_cast<int>(it - rays.begin());
        bool is_c1 = std::find(codim1.begin(), codim1.end(), idx) != codim1.end();
        if (e.at("codim_one").get<bool>() != is_c1) flags_ok = false;

        if (e.at("status").is_null()) {
            if (is_c1) flags_ok = false;
            continue;
        }
        const json& st = e.at("status");
        std::string kind = st.at("kind").get<std::string>();
        if (kind == "almost_saturated") {
            sig_rays.push_back(ray);
            IntVec p = json_to_vec(st.at("witness"));
            bool ok = s.cone().contains(p) && dot(p, ray) == 0;
            IntVec cert = json_to_vec(st.at("witness_certificate"));
            IntVec sum = zero_vec(h.rank());
            for (std::size_t k = 0; k < cert.size() && k < s.gens().size(); ++k) {
                if (cert[k] < 0) ok = false;
                sum = add(sum, scaled(s.gens()[k], cert[k]));
            }
            ok = ok && cert.size() == s.gens().size() && sum == p;
            const json& shifts = st.at("shift_certificates");
            ok = ok && shifts.size() == mg.gens.size();
            for (std::size_t mi = 0; ok && mi < mg.gens.size(); ++mi) {
                IntVec sc = json_to_vec(shifts[mi]);
                if (sc.size() != s.gens().size()) {
                    ok = false;
                    break;
                }
                IntVec target = add(p, mg.gens[mi]);
                IntVec acc = zero_vec(h.rank());
                for (std::size_t k = 0; k < sc.size(); ++k) {
                    if (sc[k] < 0) ok = false;
                    acc = add(acc, scaled(s.gens()[k], sc[k]));
                }
                ok = ok && acc == target;
            }
            check("witness replay for ray " + to_string(ray), ok);
        } else if (kind == "nowhere_saturated") {
            IntFeasibility obs = json_to_obstruction(st.at("obstruction"));
            SaturationSystem sys = saturation_system(s, ray_face_pair(h, idx), mg);
            check("obstruction replay for ray " + to_string(ray),
                  replay(sys.columns, sys.rhs, obs));
        } else if (kind == "undecided") {
            und_rays.push_back(ray);
        } else {
            flags_ok = false;
        }
    }
    check("codim-one flags", flags_ok);

    IntMat min_gens = h.theta().rays();
    for (const auto& rv : sig_rays) min_gens.push_back(rv);
    IntMat max_gens = min_gens;
    for (const auto& rv : und_rays) max_gens.push_back(rv);
    Cone gamma_min = Cone::from_generators(h.rank(), min_gens);
    Cone gamma_max = Cone::from_generators(h.rank(), max_gens);
    check("gamma_min rays", json_to_mat(report.at("gamma_min_rays")) == gamma_min.rays());
    check("gamma_max rays", json_to_mat(report.at("gamma_max_rays")) == gamma_max.rays());

    std::string verdict = report.at("verdict").get<std::string>();
    bool verdict_ok;
    if (gamma_min.is_full_dimensional())
        verdict_ok = verdict == "FLEXIBLE";
    else if (!gamma_max.is_full_dimensional())
        verdict_ok = verdict == "NOT_FLEXIBLE";
    else
        verdict_ok = verdict == "UNDECIDED";
    check("verdict consistent with gamma", verdict_ok);

    if (verdict == "NOT_FLEXIBLE") {
        bool ok = report.at("certificates").contains("hyperplane_normal");
        if (ok) {
            IntVec n = json_to_vec(report.at("certificates").at("hyperplane_normal"));
            ok = !is_zero(n);
            for (const auto& g : gamma_max.rays()) ok = ok && dot(n, g) == 0;
        }
        check("hyperplane certificate", ok);
    }

    if (report.contains("orbits")) {
        bool ok = true;
        long dim_x = dimension(h);
        for (const auto& e : report.at("orbits"))
            ok = ok && e.at("orbit_dim").get<long>() + e.at("codim").get<long>() == dim_x;
        check("orbit dimensions", ok);
    }

    if (report.contains("holes")) {
        bool ok = true;
        for (const auto& e : report.at("holes").at("points")) {
            IntVec v = json_to_vec(e);
            if (!s.cone().contains(v) || s.member(v)) ok = false;
        }
        check("holes replay", ok);
    }

    if (report.contains("demazure_roots")) {
        bool ok = true;
        for (const auto& e : report.at("demazure_roots")) {
            IntVec ray = json_to_vec(e.at("ray"));
            auto it = std::find(rays.begin(), rays.end(), ray);
            if (it == rays.end()) {
                ok = false;
                continue;
            }
            int idx = static_cast<int>(it - rays.begin());
            for (const auto& r : e.at("roots"))
                ok = ok && is_demazure_root(h.sigma(), json_to_vec(r), idx);
        }
        check("demazure roots replay", ok);
    }

    if (report.contains("lnd_roots")) {
        bool ok = true;
        for (const auto& e : report.at("lnd_roots")) {
            if (!e.at("found").get<bool>()) continue;
            IntVec ray = json_to_vec(e.at("ray"));
            auto it = std::find(rays.begin(), rays.end(), ray);
            if (it == rays.end()) {
                ok = false;
                continue;
            }
            int idx = static_cast<int>(it - rays.begin());
            IntVec root = json_to_vec(e.at("e"));
            ok = ok && is_demazure_root(h.sigma(), root, idx) && h.theta_dual().contains(root);
            for (const auto& chk : e.at("shift_checks")) {
                IntVec g = json_to_vec(chk.at("generator"));
                IntVec shifted = json_to_vec(chk.at("shifted"));
                IntVec cert = json_to_vec(chk.at("certificate"));
                ok = ok && shifted == add(g, root) && cert.size() == s.gens().size();
                IntVec acc = zero_vec(h.rank());
                for (std::size_t k = 0; k < cert.size() && ok; ++k) {
                    if (cert[k] < 0) ok = false;
                    acc = add(acc, scaled(s.gens()[k], cert[k]));
                }
                ok = ok && acc == shifted;
            }
        }
        check("lnd roots replay", ok);
    }

    return out;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "lattice rank: " << report.at("lattice_rank").get<int>() << "\n";
    os << "dim X: " << report.at("dim_x").get<long>() << "\n";
    auto put_rays = [&](const char* label, const json& m) {
        os << label << ":";
        for (const auto& row : m) os << " " << to_string(json_to_vec(row));
        os << "\n";
    };
    put_rays("sigma_dual rays", report.at("sigma_dual_rays"));
    put_rays("sigma rays", report.at("sigma_rays"));
    put_rays("theta rays", report.at("theta_rays"));
    os << "ray statuses:\n";
    for (const auto& e : report.at("ray_statuses")) {
        os << "  " << to_string(json_to_vec(e.at("ray")));
        if (!e.at("codim_one").get<bool>()) {
            os << ": orbit codimension != 1\n";
            continue;
        }
        const json& st = e.at("status");
        std::string kind = st.at("kind").get<std::string>();
        if (kind == "almost_saturated")
            os << ": almost saturated, witness " << to_string(json_to_vec(st.at("witness")))
               << "\n";
        else if (kind == "nowhere_saturated")
            os << ": nowhere saturated (certified)\n";
        else
            os << ": undecided up to bound " << json_to_int(st.at("bound")).get_str() << "\n";
    }
    put_rays("gamma_min rays", report.at("gamma_min_rays"));
    put_rays("gamma_max rays", report.at("gamma_max_rays"));
    if (report.contains("holes")) put_rays("holes", report.at("holes").at("points"));
    os << "verdict: " << report.at("verdict").get<std::string>() << "\n";
    if (report.at("certificates").contains("hyperplane_normal"))
        os << "hyperplane normal: "
           << to_string(json_to_vec(report.at("certificates").at("hyperplane_normal"))) << "\n";
    return os.str();
}

}  // namespace horoflex
