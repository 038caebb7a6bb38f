#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "baire/bm.hpp"
#include "baire/category.hpp"
#include "baire/crosscheck.hpp"
#include "baire/determinize.hpp"
#include "baire/frontend.hpp"
#include "baire/io.hpp"
#include "baire/measure.hpp"
#include "baire/msou.hpp"
#include "baire/rewrite.hpp"
#include "baire/tree.hpp"

using namespace baire;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Globals {
    bool json = false;
    std::size_t budget = 0;
    std::size_t effective_budget() const { return budget ? budget : default_budget(); }
};

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::string rational(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json sets_json(const std::vector<StateSet>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(s);
    return a;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
    if (g.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_text_file(path, text);
}

std::string formula_text(const std::string& arg) {
    if (arg.size() > 4 && arg.substr(arg.size() - 4) == ".s1s") return read_text_file(arg);
    return arg;
}

DetMuller as_detmuller(const AnyAutomaton& a, std::size_t budget) {
    if (const auto* d = std::get_if<DetMuller>(&a)) return *d;
    if (const auto* p = std::get_if<DPA>(&a)) return dpa_to_detmuller(*p);
    if (const auto* n = std::get_if<NBA>(&a)) return dpa_to_detmuller(determinize(*n, budget));
    throw UsageError("expected a word automaton of kind detmuller, dpa or nba, got " + kind_name(a));
}

GameAutomaton as_game(const AnyAutomaton& a) {
    if (const auto* g = std::get_if<GameAutomaton>(&a)) return *g;
    if (const auto* t = std::get_if<AltTree>(&a)) {
        if (auto g = as_game_automaton(*t)) return *g;
        throw UsageError("tree automaton is not a game automaton; comeagerness beyond game automata is open");
    }
    throw UsageError("expected a tree automaton of kind game, got " + kind_name(a));
}

bool word_member(const AnyAutomaton& a, const LassoWord& w) {
    if (const auto* n = std::get_if<NBA>(&a)) return lasso_membership_nba(*n, w);
    if (const auto* d = std::get_if<DPA>(&a)) return lasso_membership(*d, w);
    if (const auto* d = std::get_if<DetMuller>(&a)) return lasso_membership(*d, w);
    if (const auto* m = std::get_if<AltMuller>(&a)) return lasso_membership(*m, w);
    throw UsageError("member expects a word automaton, got " + kind_name(a));
}

PlayerTag parse_seat(const std::string& s) {
    if (s == "A" || s == "forall") return PlayerTag::Forall;
    if (s == "E" || s == "exists") return PlayerTag::Exists;
    throw UsageError("seat must be A or E");
}

std::vector<LetterId> parse_ror_word(const std::string& text) {
    const Alphabet ab = ror_alphabet();
    std::vector<LetterId> w;
    bool spaced = text.find(' ') != std::string::npos;
    std::vector<std::string> toks;
    if (spaced) {
        std::istringstream in(text);
        std::string t;
        while (in >> t) toks.push_back(t);
    } else {
        for (char c : text) toks.emplace_back(1, c);
    }
    for (const auto& t : toks) {
        auto l = ab.parse_letter(t);
        if (!l) throw ParseError("unknown letter '" + t + "', expected 0, 1 or R", 1, 1);
        w.push_back(*l);
    }
    return w;
}

Json crosscheck_json(const CrosscheckReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["instances_passed"] = r.instances_passed;
    j["checks"] = r.checks;
    j["agreed"] = r.agreed;
    j["pass"] = r.pass();
    Json f = Json::array();
    for (const auto& x : r.failures)
        f.push_back({{"index", x.index},
                     {"checks", x.checks},
                     {"agreed", x.agreed},
                     {"detail", x.detail},
                     {"lasso", x.lasso},
                     {"automaton", x.automaton}});
    j["failures"] = f;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for category and measure quantifiers over omega-words and trees", "baire"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Emit a JSON report");
    app.add_option("--budget", g.budget, "State budget (overrides BAIRE_BUDGET)")->check(CLI::PositiveNumber);

    std::string formula, input, input2, output, method = "both", rule, profile = "v=n", select = "all", seat,
                script, suite;
    std::vector<std::string> quantified;
    std::size_t trunc = 30, blocks = 3, rounds = 0, n = 100;
    std::uint64_t seed = 7;
    std::function<int()> action;

    auto* compile_cmd = app.add_subcommand("compile", "Compile a formula to a Buchi automaton");
    compile_cmd->add_option("formula", formula, "Formula text or .s1s file")->required();
    compile_cmd->add_option("-o,--output", output, "Output .oaut file");
    compile_cmd->callback([&] {
        action = [&] {
            auto f = parse_formula(formula_text(formula));
            auto c = compile(f, g.effective_budget());
            auto text = write_oaut(c.nba);
            Json j = envelope("compile");
            j["formula"] = to_string(f);
            j["tracks"] = c.tracks;
            j["states"] = c.nba.states;
            j["notes"] = c.notes;
            if (!output.empty()) write_text_file(output, text);
            j["automaton"] = text;
            if (g.json) emit(g, j, "");
            else if (output.empty()) std::cout << text;
            return kExitTrue;
        };
    });

    auto* decide_cmd = app.add_subcommand("decide", "Decide a sentence");
    decide_cmd->add_option("sentence", formula, "Sentence text or .s1s file")->required();
    decide_cmd->callback([&] {
        action = [&] {
            auto f = parse_formula(formula_text(formula));
            auto v = decide_sentence(f, g.effective_budget());
            Json j = envelope("decide");
            j["formula"] = to_string(f);
            j["value"] = v.value;
            j["root"] = v.root;
            j["comeager"] = v.comeager ? Json(*v.comeager) : Json();
            j["measure"] = v.measure ? Json(rational(*v.measure)) : Json();
            j["oracles_agree"] = v.oracles_agree;
            j["nba_states"] = v.nba_states;
            j["notes"] = v.notes;
            emit(g, j, std::string(v.value ? "true" : "false") + "\n");
            if (!v.oracles_agree) {
                std::cerr << "baire: oracle disagreement on the root quantifier\n";
                return kExitInternal;
            }
            return v.value ? kExitTrue : kExitFalse;
        };
    });

    auto* measure_cmd = app.add_subcommand("measure", "Exact measure of a word language");
    measure_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    measure_cmd->callback([&] {
        action = [&] {
            auto a = read_oaut_file(input);
            Json j = envelope("measure");
            mpq_class m;
            if (std::holds_alternative<NBA>(a)) {
                m = nba_measure(std::get<NBA>(a), g.effective_budget());
            } else {
                auto rep = std::holds_alternative<DPA>(a) ? language_measure(std::get<DPA>(a))
                                                          : language_measure(as_detmuller(a, g.effective_budget()));
                m = rep.measure;
                std::vector<StateSet> acc;
                for (std::size_t i = 0; i < rep.recurrent_classes.size(); ++i)
                    if (rep.accepting[i]) acc.push_back(rep.recurrent_classes[i]);
                j["recurrent_classes"] = sets_json(rep.recurrent_classes);
                j["accepting_classes"] = sets_json(acc);
                Json ab = Json::array();
                for (const auto& p : rep.absorption) ab.push_back(rational(p));
                j["absorption"] = ab;
            }
            j["measure"] = rational(m);
            j["decimal"] = decimal(m);
            emit(g, j, format_rational(m) + "\n");
            return kExitTrue;
        };
    });

    auto* comeager_cmd = app.add_subcommand("comeager", "Decide whether a word language is comeager");
    comeager_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    comeager_cmd->add_option("--method", method, "game, measure or both")
        ->check(CLI::IsMember({"game", "measure", "both"}));
    comeager_cmd->callback([&] {
        action = [&] {
            auto a = as_detmuller(read_oaut_file(input), g.effective_budget());
            Json j = envelope("comeager");
            j["method"] = method;
            std::optional<bool> game, meas;
            if (method != "measure") game = decide_comeager(a).comeager;
            if (method != "game") {
                auto rep = language_measure(a);
                meas = rep.measure == 1;
                j["measure"] = rational(rep.measure);
            }
            j["game"] = game ? Json(*game) : Json();
            j["measure_one"] = meas ? Json(*meas) : Json();
            bool agree = !game || !meas || *game == *meas;
            bool verdict = game ? *game : *meas;
            j["agree"] = agree;
            j["comeager"] = verdict;
            if (!agree) {
                emit(g, j, "disagreement: game " + std::string(*game ? "comeager" : "not comeager") + ", measure " +
                               (*meas ? "1" : "below 1") + "\n");
                return kExitInternal;
            }
            emit(g, j, std::string(verdict ? "comeager" : "not comeager") + "\n");
            return verdict ? kExitTrue : kExitFalse;
        };
    });

    auto* ctree_cmd = app.add_subcommand("comeager-tree", "Decide whether a game automaton's tree language is comeager");
    ctree_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    ctree_cmd->callback([&] {
        action = [&] {
            auto ga = as_game(read_oaut_file(input));
            auto r = decide_comeager_tree(ga);
            Json j = envelope("comeager-tree");
            j["comeager"] = r.comeager;
            j["b_states"] = r.b->states;
            j["arena_positions"] = r.game.arena.size();
            emit(g, j, std::string(r.comeager ? "comeager" : "not comeager") + "\n");
            return r.comeager ? kExitTrue : kExitFalse;
        };
    });

    auto* cb_cmd = app.add_subcommand("construct-b", "Alternating automaton for comeager sections");
    cb_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    cb_cmd->add_option("--quantified", quantified, "Quantified tracks")->required();
    cb_cmd->add_option("-o,--output", output, "Output .oaut file");
    cb_cmd->callback([&] {
        action = [&] {
            auto b = build_b_word(as_detmuller(read_oaut_file(input), g.effective_budget()), quantified);
            write_output(output, write_oaut(b));
            return kExitTrue;
        };
    });

    auto* cbt_cmd = app.add_subcommand("construct-b-tree", "Alternating tree automaton for comeager sections");
    cbt_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    cbt_cmd->add_option("--quantified", quantified, "Quantified tracks")->required();
    cbt_cmd->add_option("-o,--output", output, "Output .oaut file");
    cbt_cmd->callback([&] {
        action = [&] {
            auto b = build_b_tree(as_game(read_oaut_file(input)), quantified);
            write_output(output, write_oaut(b));
            return kExitTrue;
        };
    });

    auto* dealt_cmd = app.add_subcommand("dealternate", "Alternating Muller automaton to Buchi automaton");
    dealt_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    dealt_cmd->add_option("-o,--output", output, "Output .oaut file");
    dealt_cmd->callback([&] {
        action = [&] {
            auto a = read_oaut_file(input);
            const auto* m = std::get_if<AltMuller>(&a);
            if (!m) throw UsageError("dealternate expects kind altmuller, got " + kind_name(a));
            DealternationStats st;
            auto nba = dealternate(*m, g.effective_budget(), &st);
            auto text = write_oaut(nba);
            if (g.json) {
                if (!output.empty()) write_text_file(output, text);
                Json j = envelope("dealternate");
                j["profiles"] = st.profiles;
                j["idempotents"] = st.idempotents;
                j["visit_classes"] = st.visit_classes;
                j["nba_states"] = st.nba_states;
                j["automaton"] = text;
                emit(g, j, "");
            } else {
                write_output(output, text);
            }
            return kExitTrue;
        };
    });

    auto* det_cmd = app.add_subcommand("determinize", "Buchi automaton to deterministic parity automaton");
    det_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    det_cmd->add_option("-o,--output", output, "Output .oaut file");
    det_cmd->callback([&] {
        action = [&] {
            auto a = read_oaut_file(input);
            const auto* nba = std::get_if<NBA>(&a);
            if (!nba) throw UsageError("determinize expects kind nba, got " + kind_name(a));
            write_output(output, write_oaut(determinize(*nba, g.effective_budget())));
            return kExitTrue;
        };
    });

    auto* tm_cmd = app.add_subcommand("tree-member", "Membership of a regular tree");
    tm_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    tm_cmd->add_option("tree", input2, ".rtree file")->required()->check(CLI::ExistingFile);
    tm_cmd->callback([&] {
        action = [&] {
            auto a = read_oaut_file(input);
            auto t = read_rtree_file(input2, alphabet_of(a));
            bool in;
            if (const auto* ga = std::get_if<GameAutomaton>(&a)) in = tree_membership(*ga, t);
            else if (const auto* at = std::get_if<AltTree>(&a)) in = tree_membership(*at, t);
            else throw UsageError("tree-member expects a tree automaton, got " + kind_name(a));
            Json j = envelope("tree-member");
            j["accepted"] = in;
            emit(g, j, std::string(in ? "accepted" : "rejected") + "\n");
            return in ? kExitTrue : kExitFalse;
        };
    });

    auto* m_cmd = app.add_subcommand("member", "Membership of a lasso word");
    m_cmd->add_option("automaton", input, ".oaut file")->required()->check(CLI::ExistingFile);
    m_cmd->add_option("lasso", input2, "Lasso such as '1 0 $ 1 1'")->required();
    m_cmd->callback([&] {
        action = [&] {
            auto a = read_oaut_file(input);
            auto w = parse_lasso(input2, alphabet_of(a));
            bool in = word_member(a, w);
            Json j = envelope("member");
            j["lasso"] = lasso_to_string(w, alphabet_of(a));
            j["accepted"] = in;
            emit(g, j, std::string(in ? "accepted" : "rejected") + "\n");
            return in ? kExitTrue : kExitFalse;
        };
    });

    auto* blocks_cmd = app.add_subcommand("blocks", "Block decomposition of a word over {0,1,R}");
    blocks_cmd->add_option("word", input, "Finite word or lasso")->required();
    blocks_cmd->callback([&] {
        action = [&] {
            Json j = envelope("blocks");
            std::ostringstream text;
            if (input.find('$') != std::string::npos) {
                auto w = parse_lasso(input, ror_alphabet());
                auto p = lasso_profile(w);
                j["profile"] = p.to_string();
                j["unbounded"] = u_predicate(p);
                text << "profile " << p.to_string() << "\n";
                text << "unbounded " << (u_predicate(p) ? "yes" : "no") << "\n";
            } else {
                auto w = parse_ror_word(input);
                Json arr = Json::array();
                const auto bs = decompose_blocks(w);
                for (std::size_t i = 0; i < bs.size(); ++i) {
                    const auto& b = bs[i];
                    arr.push_back({{"index", i}, {"start", b.start}, {"end", b.end ? Json(*b.end) : Json()},
                                   {"value", b.value}});
                    text << "v_" << i << " = " << b.value << "  [" << b.start << ", "
                         << (b.end ? std::to_string(*b.end) : std::string("open")) << "]\n";
                }
                j["blocks"] = arr;
            }
            emit(g, j, text.str());
            return kExitTrue;
        };
    });

    auto* psiu_cmd = app.add_subcommand("psiu", "Certified probability interval for the block formula");
    psiu_cmd->add_option("--profile", profile, "const:c, arith:a,b, periodic:..., explicit:...;..., v=n");
    psiu_cmd->add_option("--trunc", trunc, "Number of selected factors")->check(CLI::PositiveNumber);
    psiu_cmd->add_option("--select", select, "all, witness, every:s,k or finite:i,...");
    psiu_cmd->callback([&] {
        action = [&] {
            auto p = BlockProfile::parse(profile);
            auto s = BlockSelection::parse(select);
            auto iv = psi_u_probability(p, s, trunc);
            mpq_class width = iv.hi - iv.lo;
            Json j = envelope("psiu");
            j["profile"] = p.to_string();
            j["select"] = s.to_string();
            j["trunc"] = trunc;
            j["lo"] = rational(iv.lo);
            j["hi"] = rational(iv.hi);
            j["lo_decimal"] = decimal(iv.lo, 15);
            j["hi_decimal"] = decimal(iv.hi, 15);
            j["width"] = decimal(width, 15);
            j["exact"] = iv.exact();
            std::ostringstream text;
            text << "lo " << decimal(iv.lo, 15) << "\nhi " << decimal(iv.hi, 15) << "\nwidth " << decimal(width, 15)
                 << "\n";
            emit(g, j, text.str());
            return kExitTrue;
        };
    });

    auto* rw_cmd = app.add_subcommand("rewrite", "Apply a formula rewriting");
    rw_cmd->add_option("--rule", rule, "catpath, meas1path, u1, interp or psi")
        ->required()
        ->check(CLI::IsMember({"catpath", "meas1path", "u1", "interp", "psi"}));
    rw_cmd->add_option("formula", formula, "Formula text or .s1s file")->required();
    rw_cmd->callback([&] {
        action = [&] {
            auto f = parse_formula(formula_text(formula));
            Formula r;
            if (rule == "catpath") r = rewrite_category_path(f);
            else if (rule == "meas1path") r = rewrite_measure_path(f);
            else if (rule == "u1") r = rewrite_u1(f);
            else if (rule == "interp") r = interpret_s1s_in_s2s(f);
            else r = rewrite_u_to_psi(f);
            Json j = envelope("rewrite");
            j["rule"] = rule;
            j["input"] = to_string(f);
            j["output"] = to_string(r);
            emit(g, j, to_string(r) + "\n");
            return kExitTrue;
        };
    });

    auto* wit_cmd = app.add_subcommand("witness-u1", "Finite prefix of the tree witnessing the measure-one claim");
    wit_cmd->add_option("--blocks", blocks, "Number of blocks")->check(CLI::Range(1, 3));
    wit_cmd->add_option("-o,--output", output, "Output JSON file");
    wit_cmd->callback([&] {
        action = [&] {
            auto w = witness_u1_tree(static_cast<unsigned>(blocks));
            Json j = envelope("witness-u1");
            j["blocks"] = blocks;
            j["growth"] = w.growth;
            j["partial_sum"] = rational(w.partial_sum);
            Json hp = Json::array();
            for (const auto& h : w.hit_probability) hp.push_back(rational(h));
            j["hit_probability"] = hp;
            j["forest_marked"] = w.forest_marked;
            j["lower_blocks_see_one"] = w.lower_blocks_see_one;
            Json labels = Json::object();
            for (const auto& [node, l] : w.prefix.label) labels[node.empty() ? "root" : node] = l;
            j["prefix"] = labels;
            std::string text = j.dump(2) + "\n";
            if (!output.empty()) {
                write_text_file(output, text);
                std::ostringstream s;
                s << "growth";
                for (auto x : w.growth) s << " " << x;
                s << "\npartial sum " << rational(w.partial_sum) << "\nprefix nodes " << w.prefix.label.size()
                  << "\n";
                emit(g, j, s.str());
            } else {
                std::cout << text;
            }
            return kExitTrue;
        };
    });

    auto* bm_cmd = app.add_subcommand("bm-play", "Banach-Mazur game against the synthesized strategy");
    bm_cmd->add_option("--automaton", input, "Deterministic Muller .oaut file")->required()->check(CLI::ExistingFile);
    bm_cmd->add_option("--seat", seat, "Human seat, A or E")->required();
    bm_cmd->add_option("--script", script, "Transcript to replay")->check(CLI::ExistingFile);
    bm_cmd->add_option("--rounds", rounds, "Human moves to read, 0 = until end of input");
    bm_cmd->callback([&] {
        action = [&] {
            auto a = as_detmuller(read_oaut_file(input), g.effective_budget());
            BmOptions opts;
            opts.rounds = rounds;
            std::ostringstream transcript;
            BmRecord rec;
            if (script.empty()) {
                opts.prompt = &std::cerr;
                rec = bm_play(a, parse_seat(seat), std::cin, g.json ? transcript : std::cout, opts);
            } else {
                std::ifstream in(script);
                rec = bm_play(a, parse_seat(seat), in, g.json ? transcript : std::cout, opts);
            }
            if (g.json) {
                Json j = envelope("bm-play");
                j["human"] = player_name(rec.human);
                j["comeager"] = rec.comeager;
                Json moves = Json::array();
                for (const auto& m : rec.moves) {
                    std::vector<std::string> ls;
                    for (auto l : m.letters) ls.push_back(a.alphabet.letter_name(l));
                    moves.push_back({{"player", player_name(m.player)}, {"machine", m.machine}, {"letters", ls}});
                }
                j["moves"] = moves;
                j["limit"] = lasso_to_string(rec.limit, a.alphabet);
                j["inf_set"] = rec.inf_set;
                j["winner"] = player_name(rec.winner);
                j["transcript"] = transcript.str();
                std::cout << j.dump(2) << "\n";
            }
            return kExitTrue;
        };
    });

    std::string selftest_suite = "all";
    suite = "staiger";
    auto add_suite_options = [&](CLI::App* c, std::string& target) {
        c->add_option("--suite", target, "staiger, section or dealternation");
        c->add_option("--n", n, "Instances")->check(CLI::PositiveNumber);
        c->add_option("--seed", seed, "Random seed");
    };

    auto* cc_cmd = app.add_subcommand("crosscheck", "Seeded batch comparing independent deciders");
    add_suite_options(cc_cmd, suite);
    cc_cmd->callback([&] {
        action = [&] {
            auto r = run_crosscheck(suite, n, seed, g.effective_budget());
            Json j = envelope("crosscheck");
            j["report"] = crosscheck_json(r);
            std::ostringstream text;
            text << r.suite << " seed " << r.seed << ": " << r.instances_passed << "/" << r.n << " instances, "
                 << r.agreed << "/" << r.checks << " checks\n";
            for (const auto& f : r.failures)
                text << "FAIL instance " << f.index << ": " << f.detail << (f.lasso.empty() ? "" : " at " + f.lasso)
                     << "\n" << f.automaton;
            emit(g, j, text.str());
            return r.pass() ? kExitTrue : kExitInternal;
        };
    });

    auto* st_cmd = app.add_subcommand("selftest", "Run oracle agreement suites");
    add_suite_options(st_cmd, selftest_suite);
    st_cmd->callback([&] {
        action = [&] {
            std::vector<std::string> suites = selftest_suite == "all" ? crosscheck_suites() : std::vector<std::string>{selftest_suite};
            Json j = envelope("selftest");
            Json reps = Json::array();
            std::ostringstream text;
            bool ok = true;
            for (const auto& s : suites) {
                auto r = run_crosscheck(s, n, seed, g.effective_budget());
                ok = ok && r.pass();
                reps.push_back(crosscheck_json(r));
                text << r.suite << ": agreement " << r.instances_passed << "/" << r.n << " (" << r.agreed << "/"
                     << r.checks << " checks) " << (r.pass() ? "PASS" : "FAIL") << "\n";
            }
            j["reports"] = reps;
            j["pass"] = ok;
            emit(g, j, text.str());
            return ok ? kExitTrue : kExitInternal;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action();
    } catch (const BudgetError& e) {
        std::cerr << "baire: budget exceeded: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "baire: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "baire: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
