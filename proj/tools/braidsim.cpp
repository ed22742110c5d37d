#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "braids/garside.hpp"
#include "braids/json_io.hpp"
#include "braids/verify.hpp"

using namespace braids;

namespace {

struct Global {
    bool json = false;
    bool serial = false;
    std::uint64_t seed = 1;
    std::string mode = "symbolic";
};

void print_matrix(const SymMatrix& m) {
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c)
            std::cout << (c ? "  " : "") << m.at(r, c).str();
        std::cout << "\n";
    }
}

void print_matrix(const RatMatrix& m) {
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c)
            std::cout << (c ? "  " : "") << mpq_str(m.at(r, c));
        std::cout << "\n";
    }
}

void print_matrix(const FloatMatrix& m) {
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) std::cout << (c ? "  " : "") << m.at(r, c);
        std::cout << "\n";
    }
}

// Emits a symbolic matrix in the domain picked by --mode and --q.
void emit_matrix(const SymMatrix& m, const Global& g, const std::string& qv,
                 const std::string& tv) {
    if (g.mode == "symbolic" && qv.empty()) {
        if (g.json)
            std::cout << to_json(m).dump(2) << "\n";
        else
            print_matrix(m);
        return;
    }
    if (qv.empty())
        throw ParseError("--mode " + g.mode + " needs --q (and --t for lkb)");
    mpq_class q0 = mpq_from_str(qv);
    mpq_class t0 = tv.empty() ? mpq_class(1) : mpq_from_str(tv);
    RatMatrix r = eval_matrix(m, q0, t0);
    if (g.mode == "float") {
        FloatMatrix f = to_float(r);
        if (g.json)
            std::cout << to_json(f).dump(2) << "\n";
        else
            print_matrix(f);
    } else {
        if (g.json)
            std::cout << to_json(r).dump(2) << "\n";
        else
            print_matrix(r);
    }
}

int report_out(const Report& report, const Global& g) {
    if (g.json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << "  " << c.detail;
            std::cout << "\n";
        }
        std::cout << report.title << ": " << report.summary() << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

RepMode parse_mode(const std::string& name) {
    if (name == "lkb") return RepMode::LKB;
    if (name == "simplicial") return RepMode::Simplicial;
    if (name == "perm" || name == "permutation") return RepMode::Permutation;
    throw ParseError("unknown representation: " + name);
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_off(const FloatPoints& pts, std::ostream& os) {
    int n = pts.n;
    std::vector<std::vector<int>> faces;
    if (n == 3)
        faces = {{0, 1, 2}};
    else
        faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    os << "OFF\n" << n << " " << faces.size() << " 0\n";
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < 3; ++k) {
            double x = k < n - 1 ? pts.coords[i][k] : 0.0;
            os << (k ? " " : "") << fmt12(x);
        }
        os << "\n";
    }
    for (const auto& f : faces) {
        os << f.size();
        for (int v : f) os << " " << v;
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplicial representations of braid groups"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json, "emit JSON");
    app.add_flag("--serial", g.serial, "run verification sweeps single-threaded");
    app.add_option("--seed", g.seed, "seed for randomized runs");
    app.add_option("--mode", g.mode, "scalar domain for matrix output")
        ->check(CLI::IsMember({"symbolic", "rational", "float"}));

    // Return code from the executed action; set by callbacks.
    int rc = 0;

    // ---- nc ----
    auto* nc = app.add_subcommand("nc", "noncrossing partitions");
    nc->require_subcommand(1);
    nc->fallthrough();
    {
        auto* list = nc->add_subcommand("list", "enumerate NC_n");
        auto n = std::make_shared<int>(4);
        list->add_option("--n", *n, "number of points")->required();
        list->fallthrough();
        list->callback([&, n]() {
            auto partitions = enumerate_nc(*n);
            if (g.json) {
                Json j = Json::array();
                for (const auto& p : partitions) j.push_back(to_json(p));
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& p : partitions) std::cout << p.str() << "\n";
                std::cout << partitions.size() << " noncrossing partitions\n";
            }
        });

        auto* comp = nc->add_subcommand("complement", "left/right complement");
        auto cn = std::make_shared<int>(0);
        auto perm = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>("left");
        comp->add_option("--n", *cn)->required();
        comp->add_option("--perm", *perm, "cycle notation, e.g. (1,3,6)")->required();
        comp->add_option("--side", *side)->check(CLI::IsMember({"left", "right"}));
        comp->fallthrough();
        comp->callback([&, cn, perm, side]() {
            Perm sigma = Perm::parse(*cn, *perm);
            Perm result = complement(sigma, *side == "left" ? Side::Left : Side::Right);
            if (g.json) {
                Json j;
                j["perm"] = result.str();
                j["partition"] = to_json(from_permutation(result));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << result.str() << "\n";
            }
        });

        auto* five = nc->add_subcommand("five", "five-permutation factorizations");
        auto fn = std::make_shared<int>(0);
        auto s1 = std::make_shared<std::string>();
        auto s2 = std::make_shared<std::string>();
        five->add_option("--n", *fn)->required();
        five->add_option("--s1", *s1)->required();
        five->add_option("--s2", *s2)->required();
        five->fallthrough();
        five->callback([&, fn, s1, s2]() {
            auto f = five_permutations(Perm::parse(*fn, *s1), Perm::parse(*fn, *s2));
            if (g.json) {
                Json j;
                j["s3"] = f.s3.str();
                j["s4"] = f.s4.str();
                j["s5"] = f.s5.str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "s3 = " << f.s3.str() << "\ns4 = " << f.s4.str()
                          << "\ns5 = " << f.s5.str() << "\n";
            }
        });
    }

    // ---- rep ----
    auto* rep = app.add_subcommand("rep", "representation matrices");
    rep->require_subcommand(1);
    rep->fallthrough();
    {
        auto* mat = rep->add_subcommand("matrix", "evaluate a braid word");
        auto n = std::make_shared<int>(0);
        auto word = std::make_shared<std::string>();
        auto repname = std::make_shared<std::string>("simplicial");
        auto qv = std::make_shared<std::string>();
        auto tv = std::make_shared<std::string>();
        mat->add_option("--n", *n)->required();
        mat->add_option("--word", *word)->required();
        mat->add_option("--rep", *repname)
            ->check(CLI::IsMember({"lkb", "simplicial", "perm"}));
        mat->add_option("--q", *qv, "evaluate at rational q");
        mat->add_option("--t", *tv, "evaluate at rational t (lkb)");
        mat->fallthrough();
        mat->callback([&, n, word, repname, qv, tv]() {
            BraidWord w = parse_word(*n, *word);
            emit_matrix(evaluate_word(w, parse_mode(*repname)), g, *qv, *tv);
        });

        auto* act = rep->add_subcommand("act", "apply a word to edge norms");
        auto an = std::make_shared<int>(0);
        auto aword = std::make_shared<std::string>();
        auto normsfile = std::make_shared<std::string>();
        auto aq = std::make_shared<std::string>("1");
        act->add_option("--n", *an)->required();
        act->add_option("--word", *aword)->required();
        act->add_option("--norms", *normsfile, "JSON file with {\"n\",\"a\"}")
            ->required();
        act->add_option("--q", *aq)->required();
        act->fallthrough();
        act->callback([&, an, aword, normsfile, aq]() {
            std::ifstream in(*normsfile);
            if (!in) throw ParseError("cannot open " + *normsfile);
            Json j = Json::parse(in);
            RatNorms v = rat_norms_from_json(j);
            if (v.n != *an) throw DimensionMismatch("--n disagrees with norms file");
            BraidWord w = parse_word(*an, *aword);
            RatMatrix m = evaluate_word_rational(w, RepMode::Simplicial,
                                                 mpq_from_str(*aq));
            RatNorms out = act_on_norms(m, v);
            if (g.json) {
                std::cout << to_json(out).dump(2) << "\n";
            } else {
                for (const auto& x : out.a) std::cout << mpq_str(x) << "\n";
                std::cout << (is_nondegenerate(out) ? "nondegenerate\n"
                                                    : "DEGENERATE\n");
            }
        });
    }

    // ---- rescale ----
    auto* rescale = app.add_subcommand("rescale", "edge rescaling matrices");
    rescale->require_subcommand(1);
    rescale->fallthrough();
    {
        auto* mat = rescale->add_subcommand("matrix", "q-rescaling matrix");
        auto n = std::make_shared<int>(0);
        auto scaled = std::make_shared<std::string>();
        auto fixed = std::make_shared<std::string>();
        auto qv = std::make_shared<std::string>();
        mat->add_option("--n", *n)->required();
        mat->add_option("--scaled", *scaled, "partition, e.g. {1,2}")->required();
        mat->add_option("--fixed", *fixed, "partition, e.g. {2,3,4}")->required();
        mat->add_option("--q", *qv, "evaluate at rational q");
        mat->fallthrough();
        mat->callback([&, n, scaled, fixed, qv]() {
            RescalingSpec spec{*n, parse_partition(*n, *scaled),
                               parse_partition(*n, *fixed)};
            emit_matrix(rescaling_matrix(spec), g, *qv, "");
        });
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    {
        auto* rel = verify->add_subcommand("relations", "braid and dual relations");
        auto n = std::make_shared<int>(4);
        auto repname = std::make_shared<std::string>("simplicial");
        rel->add_option("--n", *n)->required();
        rel->add_option("--rep", *repname)
            ->check(CLI::IsMember({"lkb", "simplicial", "perm"}));
        rel->fallthrough();
        rel->callback([&, n, repname]() {
            rc = report_out(verify_relations(*n, parse_mode(*repname),
                                             g.serial ? Exec::Serial : Exec::Parallel),
                            g);
        });

        auto* ta = verify->add_subcommand("theorem-a", "braids reshape simplices");
        auto tan = std::make_shared<int>(4);
        auto trials = std::make_shared<int>(100);
        auto len = std::make_shared<int>(15);
        auto qlist = std::make_shared<std::string>("1/3,1/2,2,3");
        ta->add_option("--n", *tan)->required();
        ta->add_option("--trials", *trials);
        ta->add_option("--len", *len);
        ta->add_option("--q-values", *qlist, "comma-separated rationals");
        ta->fallthrough();
        ta->callback([&, tan, trials, len, qlist]() {
            TheoremAConfig cfg;
            cfg.n = *tan;
            cfg.trials = *trials;
            cfg.word_length = *len;
            cfg.seed = g.seed;
            std::istringstream qs(*qlist);
            std::string item;
            while (std::getline(qs, item, ','))
                if (!item.empty()) cfg.q_values.push_back(mpq_from_str(item));
            rc = report_out(
                verify_theorem_a(cfg, g.serial ? Exec::Serial : Exec::Parallel), g);
        });

        auto* tb = verify->add_subcommand("theorem-b", "dual simples relabel and rescale");
        auto tbn = std::make_shared<int>(4);
        tb->add_option("--n", *tbn)->required();
        tb->fallthrough();
        tb->callback([&, tbn]() {
            rc = report_out(
                verify_theorem_b(*tbn, g.serial ? Exec::Serial : Exec::Parallel), g);
        });
    }

    // ---- garside ----
    auto* garside = app.add_subcommand("garside", "dual Garside machinery");
    garside->require_subcommand(1);
    garside->fallthrough();
    {
        auto* nf = garside->add_subcommand("nf", "greedy normal form");
        auto n = std::make_shared<int>(0);
        auto word = std::make_shared<std::string>();
        nf->add_option("--n", *n)->required();
        nf->add_option("--word", *word, "dual simple factors, e.g. \"d{1,2} d{2,3}\"")
            ->required();
        nf->fallthrough();
        nf->callback([&, n, word]() {
            BraidWord parsed = parse_word(*n, *word);
            DualPositiveWord w;
            w.n = *n;
            for (const auto& tok : parsed.tokens) {
                if (tok.power != 1)
                    throw UnsupportedToken("normal form needs a positive word");
                if (const auto* gen = std::get_if<GeneratorToken>(&tok.payload)) {
                    std::vector<std::vector<int>> blocks = {{gen->i, gen->j}};
                    w.factors.push_back(make_partition(*n, blocks));
                } else {
                    w.factors.push_back(std::get<NCPartition>(tok.payload));
                }
            }
            DualPositiveWord nfw = normal_form(w);
            if (g.json) {
                Json j;
                j["factors"] = Json::array();
                for (const auto& f : nfw.factors) j["factors"].push_back(to_json(f));
                j["length"] = static_cast<int>(nfw.factors.size());
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << dual_word_str(nfw) << "\n"
                          << "dual length " << nfw.factors.size() << "\n";
            }
        });

        auto* qdeg = garside->add_subcommand("qdeg", "q-degree experiment");
        auto qn = std::make_shared<int>(4);
        auto trials = std::make_shared<int>(100);
        auto maxf = std::make_shared<int>(6);
        qdeg->add_option("--n", *qn)->required();
        qdeg->add_option("--trials", *trials);
        qdeg->add_option("--max-factors", *maxf);
        qdeg->fallthrough();
        qdeg->callback([&, qn, trials, maxf]() {
            Report report = qdegree_experiment(*qn, *trials, *maxf, g.seed,
                                               g.serial ? Exec::Serial : Exec::Parallel);
            if (g.json) {
                std::cout << to_json(report).dump(2) << "\n";
            } else {
                for (const auto& c : report.checks)
                    std::cout << c.detail << "\n";
                int mism = report.failed();
                std::cout << report.title << ": " << (report.total() - mism) << "/"
                          << report.total() << " agree";
                if (mism) std::cout << "  (" << mism << " mismatches reported above)";
                std::cout << "\n";
            }
            // Experimental findings are reported, not gated on.
        });
    }

    // ---- export ----
    auto* exp = app.add_subcommand("export", "mesh export of reshaped simplices");
    exp->require_subcommand(1);
    exp->fallthrough();
    {
        auto* orbit = exp->add_subcommand("orbit", "iterate a word on a seed simplex");
        auto n = std::make_shared<int>(3);
        auto word = std::make_shared<std::string>();
        auto qv = std::make_shared<std::string>("2");
        auto steps = std::make_shared<int>(4);
        auto format = std::make_shared<std::string>("off");
        auto out = std::make_shared<std::string>("orbit");
        orbit->add_option("--n", *n)->check(CLI::IsMember({"3", "4"}))->required();
        orbit->add_option("--word", *word)->required();
        orbit->add_option("--q", *qv)->required();
        orbit->add_option("--steps", *steps);
        orbit->add_option("--format", *format)->check(CLI::IsMember({"off", "json"}));
        orbit->add_option("--out", *out, "output file prefix for off format");
        orbit->fallthrough();
        orbit->callback([&, n, word, qv, steps, format, out]() {
            BraidWord w = parse_word(*n, *word);
            RatMatrix m = evaluate_word_rational(w, RepMode::Simplicial,
                                                 mpq_from_str(*qv));
            RatNorms v;
            v.n = *n;
            v.a.assign(edge_count(*n), 1);
            Json stages = Json::array();
            for (int k = 0; k <= *steps; ++k) {
                FloatPoints pts = embed_float(v);
                if (*format == "off") {
                    std::string path = *out + "_" + std::to_string(k) + ".off";
                    std::ofstream f(path);
                    write_off(pts, f);
                    std::cout << path << "\n";
                } else {
                    Json stage;
                    stage["step"] = k;
                    stage["norms"] = to_json(v);
                    Json coords = Json::array();
                    for (const auto& row : pts.coords) {
                        Json r = Json::array();
                        for (double x : row) r.push_back(x);
                        coords.push_back(std::move(r));
                    }
                    stage["points"] = std::move(coords);
                    stages.push_back(std::move(stage));
                }
                if (k < *steps) {
                    v = act_on_norms(m, v);
                    if (!is_nondegenerate(v))
                        throw InternalError("orbit left the nondegenerate cone");
                }
            }
            if (*format == "json") std::cout << stages.dump(2) << "\n";
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InternalError& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
