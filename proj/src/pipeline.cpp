#include "systolic/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "systolic/errors.hpp"
#include "systolic/f_extension.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/homology.hpp"
#include "systolic/largeness.hpp"
#include "systolic/path_data.hpp"
#include "systolic/radius.hpp"
#include "systolic/saturate.hpp"
#include "systolic/short_loops.hpp"
#include "systolic/y_complex.hpp"
#include "systolic/y_verify.hpp"

namespace systolic {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "unknown";
    }
}

const StageResult* Report::stage(const std::string& name) const {
    for (const StageResult& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

json Report::to_json() const {
    json stages_json = json::array();
    for (const StageResult& s : stages)
        stages_json.push_back(json{{"name", s.name},
                                   {"verdict", verdict_name(s.verdict)},
                                   {"details", s.details}});
    return json{{"pass", pass},
                {"stages", stages_json},
                {"config", config_echo},
                {"input_digests", input_digests}};
}

namespace {

const char* case_name(DiagonalMove::Case c) {
    switch (c) {
        case DiagonalMove::Case::Bijective: return "bijective";
        case DiagonalMove::Case::NonConsecutiveSameImage: return "non_consecutive_same_image";
        default: return "consecutive_same_image";
    }
}

const char* kind_name(ShortLoop::Kind k) {
    switch (k) {
        case ShortLoop::Kind::Relator: return "relator";
        case ShortLoop::Kind::StabilizerLoop: return "stabilizer";
        default: return "crossing";
    }
}

json h1_json(const HomologyH1& h) { return json{{"rank", h.rank}, {"torsion", h.torsion}}; }

bool h1_trivial(const HomologyH1& h) { return h.rank == 0 && h.torsion.empty(); }

// Verdict for a connectivity report: hard failures beat budget exhaustion.
Verdict connectivity_verdict(const SimpleConnectivityReport& r) {
    bool disconnected = false;
    for (const std::string& msg : r.report.failures)
        if (msg.rfind("interior is disconnected", 0) == 0) disconnected = true;
    if (r.interior_count == 0 || !h1_trivial(r.h1) || disconnected) return Verdict::Fail;
    if (!r.unresolved.empty()) return Verdict::Unknown;
    return Verdict::Pass;
}

json connectivity_json(const SimpleConnectivityReport& r) {
    return json{{"interior_classes", r.interior_count},
                {"h1", h1_json(r.h1)},
                {"generators", r.generators},
                {"contracted", r.contracted},
                {"unresolved", r.unresolved},
                {"failures", r.report.failures}};
}

struct Timer {
    bool enabled = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    void mark(StageResult& s) {
        if (!enabled) return;
        auto dt = std::chrono::steady_clock::now() - t0;
        s.details["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        t0 = std::chrono::steady_clock::now();
    }
};

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg, StopAfter stop) {
    PipelineResult out;
    Report& rep = out.report;
    rep.config_echo = run_config_to_json(cfg);
    rep.input_digests = json{{"complex", json_digest(cfg.complex)},
                             {"presentation", json_digest(cfg.presentation)},
                             {"action", json_digest(cfg.action)},
                             {"paths", json_digest(cfg.paths)}};

    Timer timer;
    timer.enabled = cfg.emit_timestamps;
    std::string current = "inputs";
    auto finalize = [&]() {
        rep.pass = true;
        for (const StageResult& s : rep.stages) {
            if (s.verdict == Verdict::Pass) continue;
            if (s.verdict == Verdict::Unknown &&
                std::find(cfg.allow_unknown.begin(), cfg.allow_unknown.end(), s.name) !=
                    cfg.allow_unknown.end())
                continue;
            rep.pass = false;
        }
        out.exit_code = rep.pass ? 0 : 1;
        if (!cfg.output_dir.empty()) {
            json artifacts = json::object();
            auto emit = [&](const char* name, const json& j) {
                if (j.is_null()) return;
                artifacts[std::string(name) + ".json"] = json_digest(j);
                write_json_file(cfg.output_dir + "/" + name + ".json", j);
            };
            emit("gamma", out.gamma);
            emit("short_loops", out.short_loops);
            emit("radius", out.radius);
            emit("y", out.y);
            emit("moves", out.moves);
            emit("w", out.w);
            json rj = rep.to_json();
            rj["artifact_digests"] = artifacts;
            if (cfg.emit_timestamps) {
                std::time_t now = std::time(nullptr);
                char buf[32];
                std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
                rj["generated_at"] = buf;
            }
            write_json_file(cfg.output_dir + "/report.json", rj);
        }
    };

    try {
        Setup s = load_setup(cfg);
        const Presentation& p = *s.presentation;
        const SkeletonGraph& X = *s.patch;
        const VertexAction& a = *s.action;
        FlagComplex Xc(X);

        {
            StageResult st{"inputs", Verdict::Pass, json::object()};
            std::vector<std::string> av = a.validate();
            std::vector<std::string> pv = validate_path_data(s.paths, a);
            LargenessWitness lw = is_m_large(Xc, 6);
            HomologyH1 xh1 = homology_h1(Xc);
            st.details["patch_vertices"] = X.size();
            st.details["patch_edges"] = X.edge_count();
            st.details["boundary_vertices"] = static_cast<int>(s.boundary_ids.size());
            st.details["symbols"] = p.symbol_count();
            st.details["relators"] = static_cast<int>(p.relators().size());
            st.details["L"] = s.paths.L;
            st.details["patch_six_large"] = lw.pass;
            st.details["patch_h1"] = h1_json(xh1);
            st.details["action_failures"] = av;
            st.details["path_failures"] = pv;
            if (!lw.pass && lw.bad_cycle) st.details["largeness_witness"] = lw.bad_cycle->vertices;
            if (!av.empty() || !pv.empty() || !lw.pass || !h1_trivial(xh1)) st.verdict = Verdict::Fail;
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::Inputs || rep.stages.back().verdict == Verdict::Fail) {
            finalize();
            return out;
        }

        current = "gamma";
        Ball ball = enumerate_ball(p, a, cfg.rho);
        GammaComplex gamma = build_gamma(s.paths, a, ball);
        {
            int pieces = 0;
            if (ball.rho == 0) {
                pieces = p.symbol_count();
            } else {
                for (int h = 0; h < ball.size(); ++h)
                    for (int sym = 0; sym < p.symbol_count(); ++sym)
                        if (ball.mult_right(h, sym) >= 0) ++pieces;
            }
            out.gamma = json{{"complex", complex_to_json(gamma.complex.skeleton(), {})},
                             {"ball_size", ball.size()},
                             {"pieces", pieces}};
            StageResult st{"gamma", Verdict::Pass,
                           json{{"ball_size", ball.size()},
                                {"pieces", pieces},
                                {"vertices", gamma.complex.vertex_count()},
                                {"edges", gamma.complex.edge_count()}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::Gamma) {
            finalize();
            return out;
        }

        current = "short_loops";
        std::vector<ShortLoop> loops = enumerate_short_loops(p, a, s.paths, ball);
        {
            int n_rel = 0, n_stab = 0, n_cross = 0;
            json lj = json::array();
            for (const ShortLoop& l : loops) {
                json e{{"kind", kind_name(l.kind)},
                       {"word", p.word_string(l.word)},
                       {"walk", l.loop.vertices}};
                if (l.kind == ShortLoop::Kind::CrossingLoop) {
                    e["replacement"] = p.word_string(l.replacement);
                    e["crossing_vertex"] = l.crossing_vertex;
                    ++n_cross;
                } else if (l.kind == ShortLoop::Kind::StabilizerLoop) {
                    ++n_stab;
                } else {
                    ++n_rel;
                }
                lj.push_back(std::move(e));
            }
            out.short_loops = json{{"loops", lj}};
            StageResult st{"short_loops", Verdict::Pass,
                           json{{"relator", n_rel}, {"stabilizer", n_stab}, {"crossing", n_cross}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::ShortLoops) {
            finalize();
            return out;
        }

        current = "radius";
        RadiusCertificate cert = compute_R(loops, X, s.paths.L);
        int R_eff = cert.R;
        {
            if (cfg.R_override >= 0) {
                if (cfg.R_override < cert.R)
                    throw InputError("R_override " + std::to_string(cfg.R_override) +
                                     " is below the computed certificate R = " +
                                     std::to_string(cert.R));
                R_eff = cfg.R_override;
            }
            ensure_balls_inside_patch(p, X, s.boundary_ids, ball, s.paths.x0, R_eff);
            std::vector<LoopContraction> lc =
                certify_loop_contractions(loops, X, R_eff, cfg.nullhomotopy_budget);
            json cj = json::array();
            std::vector<int> open;
            for (const LoopContraction& c : lc) {
                cj.push_back(json{{"loop", c.loop_index},
                                  {"base_vertex", c.base_vertex},
                                  {"contractible", c.homotopy.contractible},
                                  {"moves", static_cast<int>(c.homotopy.moves.size())}});
                if (!c.homotopy.contractible) open.push_back(c.loop_index);
            }
            out.radius = json{{"L", cert.L},
                              {"R1", cert.R1},
                              {"R1_prime", cert.R1prime},
                              {"R2", cert.R2},
                              {"R_prime", cert.Rprime},
                              {"R", cert.R},
                              {"R_effective", R_eff},
                              {"loop_radius", cert.loop_radius},
                              {"contractions", cj}};
            StageResult st{"radius", open.empty() ? Verdict::Pass : Verdict::Unknown,
                           json{{"L", cert.L},
                                {"R1", cert.R1},
                                {"R1_prime", cert.R1prime},
                                {"R2", cert.R2},
                                {"R_prime", cert.Rprime},
                                {"R", cert.R},
                                {"R_effective", R_eff},
                                {"open_contractions", open}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::Radius) {
            finalize();
            return out;
        }

        current = "y";
        YComplex Y = build_Y(ball, R_eff, a, s.paths.x0);
        {
            json f_ids = json::array();
            for (int c = 0; c < Y.class_count(); ++c) f_ids.push_back(X.id_of(Y.f(c)));
            json reps = json::array();
            for (int c = 0; c < Y.class_count(); ++c) {
                auto [h, v] = Y.rep(c);
                reps.push_back(json::array(
                    {p.word_string(ball.element(h).word), X.id_of(v)}));
            }
            out.y = json{{"R", R_eff},
                         {"x0", X.id_of(s.paths.x0)},
                         {"classes", Y.class_count()},
                         {"complex", complex_to_json(Y.complex().skeleton(), {})},
                         {"f_image_ids", f_ids},
                         {"reps", reps}};
            StageResult st{"y", Verdict::Pass,
                           json{{"classes", Y.class_count()},
                                {"edges", Y.complex().edge_count()}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::Y) {
            finalize();
            return out;
        }

        current = "sections";
        {
            CheckReport cr = verify_sections(Y, a, ball);
            StageResult st{"sections", cr.pass ? Verdict::Pass : Verdict::Fail,
                           json{{"failures", cr.failures}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        current = "factorization";
        {
            CheckReport cr = verify_factorization(Y, gamma, a, ball);
            StageResult st{"factorization", cr.pass ? Verdict::Pass : Verdict::Fail,
                           json{{"failures", cr.failures}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        current = "connectivity";
        {
            SimpleConnectivityReport scr =
                verify_Y_simply_connected(Y, X, s.boundary_ids, cfg.interior_margin,
                                          cfg.nullhomotopy_budget);
            StageResult st{"connectivity", connectivity_verdict(scr), connectivity_json(scr)};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        current = "properness";
        {
            PropernessStats ps = f_properness_stats(Y, X);
            StageResult st{"properness", Verdict::Pass,
                           json{{"max_fiber", ps.max_fiber}, {"max_valence", ps.max_valence}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::VerifyY) {
            finalize();
            return out;
        }

        current = "saturation";
        SaturationResult sat = saturate(Y, a, ball, s.boundary_ids, cfg.interior_margin,
                                        cfg.max_moves);
        {
            json mj = json::array();
            int n_bij = 0, n_noncons = 0, n_cons = 0, skipped = 0;
            for (const DiagonalMove& m : sat.moves) {
                json imgs = json::array();
                for (auto [iu, iv] : m.images)
                    imgs.push_back(json::array({X.id_of(iu), X.id_of(iv)}));
                json orbit = json::array();
                for (auto [u, v] : m.orbit) orbit.push_back(json::array({u, v}));
                mj.push_back(json{{"case", case_name(m.kind)},
                                  {"bad_cycle", m.bad_cycle.vertices},
                                  {"chosen", json::array({m.chosen.first, m.chosen.second})},
                                  {"orbit", orbit},
                                  {"triangle_apexes", m.mids},
                                  {"images", imgs},
                                  {"skipped_elements", m.skipped}});
                skipped += static_cast<int>(m.skipped.size());
                if (m.kind == DiagonalMove::Case::Bijective) ++n_bij;
                else if (m.kind == DiagonalMove::Case::NonConsecutiveSameImage) ++n_noncons;
                else ++n_cons;
            }
            out.moves = json{{"moves", mj}};
            json added = json::array();
            for (const DiagonalMove& m : sat.moves)
                for (auto [u, v] : m.orbit) added.push_back(json::array({u, v}));
            json f_ids = json::array();
            for (int c = 0; c < sat.W.class_count(); ++c) f_ids.push_back(X.id_of(sat.W.f(c)));
            out.w = json{{"complex", complex_to_json(sat.W.skeleton(), {})},
                         {"added_edges", added},
                         {"f_image_ids", f_ids}};
            StageResult st{"saturation", Verdict::Pass,
                           json{{"moves", static_cast<int>(sat.moves.size())},
                                {"edges_added", sat.edges_added},
                                {"bijective", n_bij},
                                {"non_consecutive_same_image", n_noncons},
                                {"consecutive_same_image", n_cons},
                                {"skipped_translates", skipped}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
        if (stop == StopAfter::Saturate) {
            finalize();
            return out;
        }

        current = "homotopy";
        {
            HomotopyReport hr = verify_homotopy_preservation(Y, sat.W, sat.moves, X,
                                                             s.boundary_ids, cfg.interior_margin);
            StageResult st{"homotopy", hr.report.pass ? Verdict::Pass : Verdict::Fail,
                           json{{"replayed_edges", hr.replayed_edges},
                                {"h1_interior", h1_json(hr.h1_interior)},
                                {"failures", hr.report.failures}}};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }

        current = "systolic";
        {
            SystolicReport sr = verify_systolic(sat.W, a, ball, s.boundary_ids,
                                                cfg.interior_margin, cfg.nullhomotopy_budget);
            Verdict v = connectivity_verdict(sr.connectivity);
            if (sr.largeness_witness) v = Verdict::Fail;
            json details{{"interior_classes", sr.interior_count},
                         {"flag", sr.flag},
                         {"connectivity", connectivity_json(sr.connectivity)},
                         {"max_valence", sr.max_valence},
                         {"max_fiber", sr.max_fiber},
                         {"orbit_count", sr.orbit_count},
                         {"max_stabilizer", sr.max_stabilizer}};
            if (sr.largeness_witness) details["largeness_witness"] = sr.largeness_witness->vertices;
            StageResult st{"systolic", v, details};
            timer.mark(st);
            rep.stages.push_back(std::move(st));
        }
    } catch (const DomainEscape&) {
        throw;
    } catch (const PatchTooSmall&) {
        throw;
    } catch (const BallTooSmall&) {
        throw;
    } catch (const AmbientNotSixLarge&) {
        throw;
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded("stage " + current + ": " + e.what(), e.residual);
    } catch (const InputError& e) {
        throw InputError("stage " + current + ": " + e.what());
    } catch (const Error& e) {
        throw Error("stage " + current + ": " + e.what());
    }

    finalize();
    return out;
}

CheckResult run_check(const json& complex_json, int m) {
    if (m < 4) throw InputError("check: m must be at least 4");
    CheckResult out;
    Report& rep = out.report;
    rep.config_echo = json{{"m", m}};
    rep.input_digests = json{{"complex", json_digest(complex_json)}};

    ComplexInput ci = complex_from_json(complex_json);
    SimplicialComplexInput input;
    input.vertices = ci.graph.ids();
    input.edges = ci.graph.edge_list_ids();
    bool has_simplices = complex_json.contains("simplices");
    if (has_simplices) {
        const json& sj = complex_json.at("simplices");
        if (!sj.is_array()) throw InputError("complex.simplices: expected an array");
        for (const json& simplex : sj) {
            if (!simplex.is_array()) throw InputError("complex.simplices: expected id arrays");
            std::vector<int> ids;
            for (const json& e : simplex) {
                if (!e.is_number_integer())
                    throw InputError("complex.simplices: expected integer vertex ids");
                ids.push_back(e.get<int>());
            }
            input.maximal_simplices.push_back(std::move(ids));
        }
    }

    SkeletonGraph skel = has_simplices ? input.derived_skeleton() : ci.graph;
    FlagComplex c(skel);

    {
        StageResult st{"flag", Verdict::Pass, json::object()};
        if (has_simplices) {
            FlagWitness fw = check_flag(input);
            if (!fw.pass) {
                st.verdict = Verdict::Fail;
                st.details["missing_clique"] = fw.missing_clique;
            }
        } else {
            st.details["note"] = "one-skeleton input: flag by construction";
        }
        rep.stages.push_back(std::move(st));
    }
    {
        StageResult st{"largeness", Verdict::Pass, json{{"m", m}}};
        LargenessWitness lw = is_m_large(c, m);
        if (!lw.pass) {
            st.verdict = Verdict::Fail;
            if (lw.bad_cycle) st.details["witness"] = lw.bad_cycle->vertices;
        }
        rep.stages.push_back(std::move(st));
    }
    {
        HomologyH1 h1 = homology_h1(c);
        rep.stages.push_back(StageResult{"h1", Verdict::Pass, h1_json(h1)});
    }

    rep.pass = true;
    for (const StageResult& s : rep.stages)
        if (s.verdict != Verdict::Pass) rep.pass = false;
    out.exit_code = rep.pass ? 0 : 1;
    return out;
}

}  // namespace systolic
