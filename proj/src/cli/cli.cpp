#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "atiyah/atiyah.hpp"
#include "atiyah/connection.hpp"
#include "cli/modelio.hpp"
#include "hpl/constructions.hpp"
#include "hpl/contraction.hpp"
#include "liepair/moduleform.hpp"
#include "pidgla/picontext.hpp"
#include "todd/exactness.hpp"
#include "todd/serialize.hpp"
#include "todd/todd.hpp"

namespace cli {

using liepair::LiePairModel;

namespace {

using Clock = std::chrono::steady_clock;

// Runs one check body, timing it and folding exceptions into the record. The
// point-only solvers signal NotPointCase, which marks the record skipped;
// any other exception fails the record with its message as the witness.
template <typename Body>
void add_record(Report& rep, const std::string& id, Body&& body) {
    CheckRecord rec;
    rec.id = id;
    rec.status = "pass";
    const auto t0 = Clock::now();
    try {
        body(rec);
    } catch (const todd::NotPointCase& e) {
        rec.status = "skipped";
        rec.witness = e.what();
    } catch (const std::exception& e) {
        rec.status = "fail";
        rec.witness = e.what();
    }
    rec.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    rep.records.push_back(std::move(rec));
}

std::string form_to_string(const liepair::ModuleForm& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, val] : w.comps) {
        if (val.is_zero()) continue;
        if (!first) os << "; ";
        first = false;
        os << "{";
        for (size_t t = 0; t < key.size(); ++t) os << (t ? "," : "") << key[t];
        os << "}: " << val.to_string();
    }
    return first ? "0" : os.str();
}

atiyah::ConnectionTable pick_table(const Options& opt, const LiePairModel& m) {
    if (opt.gamma == "random") return atiyah::random_admissible(m, opt.seed);
    return atiyah::default_table(m);
}

int cap_arity(const Options& opt, const LiePairModel& m) {
    return opt.max_k < 0 ? m.r : std::min(opt.max_k, m.r);
}

void run_check(Report& rep, const LiePairModel& m) {
    const liepair::ValidationReport vr = liepair::validate(m);
    for (const std::string id :
         {"antisymmetry", "subalgebra-closure", "anchor-compatibility", "jacobi"}) {
        add_record(rep, id, [&](CheckRecord& rec) {
            std::ostringstream w;
            bool bad = false;
            for (const auto& issue : vr.issues) {
                if (issue.invariant != id) continue;
                if (bad) w << "; ";
                bad = true;
                w << "(";
                for (size_t t = 0; t < issue.indices.size(); ++t)
                    w << (t ? "," : "") << issue.indices[t];
                w << "): " << issue.detail;
            }
            if (bad) {
                rec.status = "fail";
                rec.witness = w.str();
            }
        });
    }
}

void run_hpl_verify(Report& rep, const LiePairModel& m) {
    const pidgla::PiContext ctx = pidgla::make_pi_context(m);
    const hpl::Contraction basic = ctx.basic_contraction();
    auto verify_into = [](CheckRecord& rec, const hpl::Contraction& c) {
        const auto failures = hpl::verify_contraction(c);
        if (failures.empty()) return;
        rec.status = "fail";
        std::ostringstream w;
        for (size_t t = 0; t < failures.size(); ++t)
            w << (t ? "; " : "") << failures[t].axiom << " at " << failures[t].generator;
        rec.witness = w.str();
    };
    add_record(rep, "contraction-basic", [&](CheckRecord& rec) { verify_into(rec, basic); });
    std::optional<hpl::PerturbedContraction> pert;
    add_record(rep, "perturbation-closed-forms", [&](CheckRecord&) {
        pert = pidgla::perturbed_pi_contraction(ctx);
    });
    add_record(rep, "contraction-perturbed", [&](CheckRecord& rec) {
        if (!pert) throw std::runtime_error("the perturbed contraction is unavailable");
        verify_into(rec, pert->as_contraction());
    });
    add_record(rep, "contraction-hom", [&](CheckRecord& rec) {
        const hpl::HomContraction hc = hpl::hom_contraction(basic, basic);
        verify_into(rec, hc.c);
    });
    add_record(rep, "contraction-tensor2", [&](CheckRecord& rec) {
        const hpl::TensorContraction tc = hpl::tensor_contraction({&basic, &basic});
        verify_into(rec, tc.c);
    });
    for (int k = 1; k <= 3; ++k) {
        add_record(rep, "contraction-exterior-" + std::to_string(k), [&](CheckRecord& rec) {
            const hpl::LambdaContraction lc = hpl::exterior_contraction(basic, k);
            verify_into(rec, lc.c);
        });
    }
}

void run_atiyah(Report& rep, const Options& opt, const LiePairModel& m) {
    const atiyah::ConnectionTable t = pick_table(opt, m);
    add_record(rep, "connection-admissible", [&](CheckRecord& rec) {
        const auto issues = atiyah::admissibility_issues(m, t);
        if (issues.empty()) return;
        rec.status = "fail";
        std::ostringstream w;
        for (size_t s = 0; s < issues.size(); ++s) w << (s ? "; " : "") << issues[s];
        rec.witness = w.str();
    });
    add_record(rep, "pair-cocycle-closed", [&](CheckRecord& rec) {
        const liepair::ModuleForm at = atiyah::pair_atiyah(m, t);
        const liepair::ModuleForm d = liepair::module_covariant_derivative(m, at);
        if (!d.is_zero()) {
            rec.status = "fail";
            rec.witness = form_to_string(d);
        }
    });
    add_record(rep, "dgla-cocycle-closed", [&](CheckRecord& rec) {
        const atiyah::Setup s = atiyah::make_setup(m);
        const atiyah::Connection conn = atiyah::make_connection(s.ctx, t);
        const hpl::ModuleElem At = atiyah::dgla_atiyah(s, conn);
        const hpl::ModuleElem D = s.chom.c.delta.apply(At);
        if (!D.is_zero()) {
            rec.status = "fail";
            rec.witness = D.to_string();
        }
    });
}

void run_compare(Report& rep, const Options& opt, const LiePairModel& m) {
    const atiyah::ConnectionTable t = pick_table(opt, m);
    add_record(rep, "theoremB-equal", [&](CheckRecord& rec) {
        const atiyah::Setup s = atiyah::make_setup(m);
        const atiyah::TheoremBResult res = atiyah::compare_theoremB(s, t);
        rec.witness = form_to_string(res.residual);
        if (!res.equal) rec.status = "fail";
    });
}

void run_todd(Report& rep, const Options& opt, const LiePairModel& m) {
    const atiyah::ConnectionTable t = pick_table(opt, m);
    const int K = cap_arity(opt, m);
    add_record(rep, "trace-lemma", [&](CheckRecord& rec) {
        const todd::Certificate cert = todd::trace_lemma_check(m);
        if (cert.pass) return;
        rec.status = "fail";
        std::ostringstream w;
        for (size_t s = 0; s < cert.details.size(); ++s) w << (s ? "; " : "") << cert.details[s];
        rec.witness = w.str();
    });
    const todd::World pw = todd::make_world(m, t, todd::Side::pair);
    const todd::World dw = todd::make_world(m, t, todd::Side::dgla);
    std::vector<hpl::ModuleElem> sp(static_cast<size_t>(K) + 1), sd(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const auto ks = static_cast<size_t>(k);
        add_record(rep, "scalar-class-pair-" + std::to_string(k),
                   [&](CheckRecord&) { sp[ks] = todd::scalar_class(pw, k); });
        add_record(rep, "scalar-class-dgla-" + std::to_string(k),
                   [&](CheckRecord&) { sd[ks] = todd::scalar_class(dw, k); });
    }
    auto cocycle_closed = [K](const todd::World& w, CheckRecord& rec) {
        const auto tc = todd::todd_cocycle(w, K);
        for (size_t k = 0; k < tc.size(); ++k) {
            const hpl::ModuleElem d = w.lam[k].c.delta.apply(tc[k]);
            if (d.is_zero()) continue;
            rec.status = "fail";
            rec.witness = "arity " + std::to_string(k) + ": " + d.to_string();
            return;
        }
    };
    add_record(rep, "todd-cocycle-closed-pair",
               [&](CheckRecord& rec) { cocycle_closed(pw, rec); });
    add_record(rep, "todd-cocycle-closed-dgla",
               [&](CheckRecord& rec) { cocycle_closed(dw, rec); });
    for (int k = 0; k <= K; ++k) {
        const auto ks = static_cast<size_t>(k);
        add_record(rep, "exactness-" + std::to_string(k), [&](CheckRecord& rec) {
            const todd::LambdaMaps maps = todd::lambda_maps(pw, dw, k);
            const hpl::ModuleElem z = sd[ks] - maps.T_lambda.apply(sp[ks]);
            const todd::ExactnessResult res = todd::exactness_solve(dw.lam[ks].c.delta, z);
            if (!res.exact) {
                rec.status = "fail";
                rec.witness = todd::to_json(res).dump();
                return;
            }
            if (!(dw.lam[ks].c.delta.apply(res.witness) == z))
                throw std::runtime_error("the solved witness does not reproduce the difference");
        });
    }
    add_record(rep, "connection-independence", [&](CheckRecord& rec) {
        const atiyah::ConnectionTable tb = atiyah::random_admissible(m, opt.seed + 101);
        const hpl::ModuleElem za = todd::hom_form_multihom(pw, atiyah::pair_atiyah(m, t)).elem;
        const hpl::ModuleElem zb = todd::hom_form_multihom(pw, atiyah::pair_atiyah(m, tb)).elem;
        const todd::ExactnessResult res = todd::exactness_solve(pw.lamend[1].c.delta, za - zb);
        if (!res.exact) {
            rec.status = "fail";
            rec.witness = todd::to_json(res).dump();
        }
    });
}

void run_cohomology(Report& rep, const Options& opt, const LiePairModel& m) {
    if (m.n > 0) {
        add_record(rep, "cohomology", [&](CheckRecord&) {
            (void)todd::ce_cohomology_dims(m, liepair::ModuleTag::B, 0, 0, 0);
        });
        return;
    }
    auto dims_into = [&m](CheckRecord& rec, liepair::ModuleTag tag, int lambda_k) {
        const auto dims = todd::ce_cohomology_dims(m, tag, lambda_k, 0, m.r);
        rec.witness = nlohmann::json(dims).dump();
    };
    add_record(rep, "cohomology-B",
               [&](CheckRecord& rec) { dims_into(rec, liepair::ModuleTag::B, 0); });
    add_record(rep, "cohomology-HomBBtoB",
               [&](CheckRecord& rec) { dims_into(rec, liepair::ModuleTag::HomBBtoB, 0); });
    const int K = cap_arity(opt, m);
    for (int k = 0; k <= K; ++k) {
        add_record(rep, "cohomology-LambdaBDual-" + std::to_string(k), [&](CheckRecord& rec) {
            dims_into(rec, liepair::ModuleTag::LambdaBDual, k);
        });
    }
}

}  // namespace

bool Report::pass() const {
    for (const auto& rec : records)
        if (rec.status == "fail") return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["model"] = model;
    j["gamma"] = gamma;
    j["seed"] = seed;
    j["max_k"] = max_k;
    j["pass"] = pass();
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json r;
        r["id"] = rec.id;
        r["status"] = rec.status;
        r["witness"] = rec.witness;
        r["ms"] = rec.ms;
        recs.push_back(std::move(r));
    }
    j["records"] = recs;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "liepair " << command << ": " << model << " (gamma=" << gamma << ", seed=" << seed;
    if (max_k >= 0) os << ", max-k=" << max_k;
    os << ")\n";
    os << std::fixed << std::setprecision(2);
    for (const auto& rec : records) {
        const char* tag = rec.status == "pass"      ? "PASS"
                          : rec.status == "skipped" ? "SKIP"
                                                    : "FAIL";
        os << "  [" << tag << "] " << rec.id << " (" << rec.ms << " ms)\n";
        if (!rec.witness.empty()) {
            const char* label = rec.status == "fail"   ? "witness: "
                                : rec.status == "pass" ? "result: "
                                                       : "";
            os << "         " << label << rec.witness << "\n";
        }
    }
    os << "overall: " << (pass() ? "PASS" : "FAIL") << " (" << records.size() << " records)\n";
    return os.str();
}

std::string usage() {
    return "usage: liepair <command> <model.json> [--json] [--gamma default|random]\n"
           "               [--seed N] [--max-k K]\n"
           "\n"
           "commands:\n"
           "  check       validate the structure equations of the model\n"
           "  atiyah      certify closedness of both Atiyah cocycles\n"
           "  compare     certify the transfer identity between the two cocycles\n"
           "  todd        trace lemma, scalar classes, Todd cocycles, exactness\n"
           "  hpl-verify  verify the contraction calculus on the pullback complex\n"
           "  cohomology  exact cohomology dimension tables (point models)\n"
           "  report      run every command and concatenate the records\n"
           "\n"
           "flags:\n"
           "  --json        emit the report as JSON\n"
           "  --gamma MODE  connection table: default | random (default: default)\n"
           "  --seed N      seed for random connection tables (default: 0)\n"
           "  --max-k K     cap the arity of the Todd/cohomology records (default: r)\n";
}

Options parse_args(const std::vector<std::string>& args) {
    static const std::set<std::string> commands = {"check", "atiyah",     "compare",
                                                   "todd",  "hpl-verify", "cohomology",
                                                   "report"};
    if (args.empty()) throw UsageError("missing command");
    Options opt;
    opt.command = args[0];
    if (commands.count(opt.command) == 0)
        throw UsageError("unknown command '" + opt.command + "'");
    size_t i = 1;
    auto value_of = [&](const std::string& flag) {
        if (i + 1 >= args.size()) throw UsageError(flag + " expects a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            opt.json = true;
        } else if (a == "--gamma") {
            const std::string v = value_of(a);
            if (v != "default" && v != "random")
                throw UsageError("--gamma must be 'default' or 'random', got '" + v + "'");
            opt.gamma = v;
        } else if (a == "--seed") {
            const std::string v = value_of(a);
            if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("--seed expects a nonnegative integer, got '" + v + "'");
            try {
                opt.seed = static_cast<unsigned>(std::stoul(v));
            } catch (const std::exception&) {
                throw UsageError("--seed value '" + v + "' is out of range");
            }
        } else if (a == "--max-k") {
            const std::string v = value_of(a);
            const std::string digits = (!v.empty() && v[0] == '-') ? v.substr(1) : v;
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("--max-k expects an integer, got '" + v + "'");
            try {
                opt.max_k = std::stoi(v);
            } catch (const std::exception&) {
                throw UsageError("--max-k value '" + v + "' is out of range");
            }
        } else if (!a.empty() && a[0] == '-') {
            throw UsageError("unknown flag '" + a + "'");
        } else if (opt.path.empty()) {
            opt.path = a;
        } else {
            throw UsageError("unexpected argument '" + a + "'");
        }
    }
    if (opt.path.empty()) throw UsageError("missing model file path");
    return opt;
}

Report run_command(const Options& opt, const LiePairModel& m) {
    Report rep;
    rep.command = opt.command;
    rep.model = m.name.empty() ? opt.path : m.name;
    rep.gamma = opt.gamma;
    rep.seed = opt.seed;
    rep.max_k = opt.max_k;
    if (opt.command == "check") {
        run_check(rep, m);
    } else if (opt.command == "hpl-verify") {
        run_hpl_verify(rep, m);
    } else if (opt.command == "atiyah") {
        run_atiyah(rep, opt, m);
    } else if (opt.command == "compare") {
        run_compare(rep, opt, m);
    } else if (opt.command == "todd") {
        run_todd(rep, opt, m);
    } else if (opt.command == "cohomology") {
        run_cohomology(rep, opt, m);
    } else if (opt.command == "report") {
        for (const std::string sub :
             {"check", "hpl-verify", "atiyah", "compare", "todd", "cohomology"}) {
            Options o = opt;
            o.command = sub;
            const Report part = run_command(o, m);
            rep.records.insert(rep.records.end(), part.records.begin(), part.records.end());
        }
    } else {
        throw UsageError("unknown command '" + opt.command + "'");
    }
    return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    try {
        opt = parse_args(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << usage();
        return 2;
    }
    LiePairModel m;
    try {
        m = opt.command == "check" ? load_model_raw(opt.path) : load_model(opt.path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    Report rep;
    try {
        rep = run_command(opt, m);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.pass() ? 0 : 1;
}

}  // namespace cli
