#include "baire/bm.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace baire {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string letters_string(const Alphabet& a, const std::vector<LetterId>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += a.letter_name(w[i]);
    }
    return s;
}

// Walks the acceptance game of B on the unary word. Root children of a B
// state are the atoms in the order (letter y, continue), (letter y, hand over)
// with index 2y + tag.
class Play {
public:
    Play(const ComeagerResult& r, PlayerTag machine)
        : r_(r), ar_(r.game.arena), strat_(r.solution.strategy(machine)), machine_(machine) {
        pos_ = ar_.initial;
        mem_ = strat_.initial_memory;
        enter(pos_);
        stall_bound_ = ar_.size() * std::max<std::size_t>(1, strat_.memory_size) + 2;
    }

    PlayerTag to_move() const { return b_tag(r_.game.info[pos_].state); }
    Position position() const { return pos_; }
    std::uint32_t memory() const { return mem_; }
    const std::vector<LetterId>& word() const { return word_; }

    void append(LetterId y, bool hand_over) {
        const PlayerTag me = to_move();
        Position root = ar_.succ[pos_].at(0);
        enter(root);
        const auto tag = hand_over ? opponent(me) : me;
        Position atom = ar_.succ[root].at(2 * y + (tag == PlayerTag::Forall ? 1 : 0));
        step_to(atom);
        word_.push_back(y);
    }

    std::vector<LetterId> machine_move() {
        std::vector<LetterId> out;
        for (std::size_t k = 0;; ++k) {
            Position root = ar_.succ[pos_].at(0);
            enter(root);
            auto c = strat_.choice(mem_, root);
            std::size_t idx = (opponent(machine_) == PlayerTag::Forall ? 1 : 0);
            if (c) {
                const auto& s = ar_.succ[root];
                idx = static_cast<std::size_t>(std::find(s.begin(), s.end(), *c) - s.begin());
            }
            LetterId y = static_cast<LetterId>(idx / 2);
            Position next = ar_.succ[ar_.succ[root][idx]].at(0);
            bool hand_over = b_tag(r_.game.info[next].state) != machine_;
            if (!hand_over && k + 1 >= stall_bound_) {
                idx = 2 * y + (opponent(machine_) == PlayerTag::Forall ? 1 : 0);
                hand_over = true;
            }
            step_to(ar_.succ[root][idx]);
            word_.push_back(y);
            out.push_back(y);
            if (hand_over) return out;
        }
    }

private:
    const ComeagerResult& r_;
    const Arena& ar_;
    const Strategy& strat_;
    PlayerTag machine_;
    Position pos_ = 0;
    std::uint32_t mem_ = 0;
    std::size_t stall_bound_ = 0;
    std::vector<LetterId> word_;

    void enter(Position p) { mem_ = strat_.update(mem_, p); }
    void step_to(Position atom) {
        enter(atom);
        pos_ = ar_.succ[atom].at(0);
        enter(pos_);
    }
};

}  // namespace

BmRecord bm_play(const DetMuller& a, PlayerTag human, std::istream& in, std::ostream& out, const BmOptions& opts) {
    a.validate();
    const PlayerTag machine = opponent(human);
    const auto r = decide_comeager(a);
    const Alphabet& ab = a.alphabet;
    BmRecord rec;
    rec.human = human;
    rec.comeager = r.comeager;
    Play play(r, machine);

    out << "# human " << player_name(human) << ", machine " << player_name(machine) << ", language "
        << (r.comeager ? "comeager" : "not comeager") << "\n";

    auto machine_turn = [&] {
        BmMove m{machine, true, play.machine_move()};
        out << player_name(machine) << ": " << letters_string(ab, m.letters) << "\n";
        rec.moves.push_back(std::move(m));
    };

    if (machine == PlayerTag::Forall) machine_turn();
    std::size_t human_moves = 0;
    std::string line;
    while (opts.rounds == 0 || human_moves < opts.rounds) {
        if (opts.prompt) *opts.prompt << player_name(human) << "> " << std::flush;
        if (!std::getline(in, line)) break;
        auto hash = line.find('#');
        std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;
        auto colon = body.find(':');
        if (colon != std::string::npos) {
            std::string seat = trim(body.substr(0, colon));
            if (seat == player_name(machine)) continue;
            if (seat != player_name(human)) {
                out << "# rejected: unknown seat '" << seat << "'\n";
                continue;
            }
            body = trim(body.substr(colon + 1));
        }
        std::istringstream toks(body);
        std::vector<LetterId> letters;
        std::string tok, bad;
        while (toks >> tok) {
            auto l = ab.parse_letter(tok);
            if (!l) {
                bad = tok;
                break;
            }
            letters.push_back(*l);
        }
        if (!bad.empty()) {
            out << "# rejected: unknown letter '" << bad << "'\n";
            continue;
        }
        if (letters.empty()) {
            out << "# rejected: a move must append at least one letter\n";
            continue;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) play.append(letters[i], i + 1 == letters.size());
        out << player_name(human) << ": " << letters_string(ab, letters) << "\n";
        rec.moves.push_back({human, false, letters});
        ++human_moves;
        machine_turn();
    }
    rec.complete = opts.rounds != 0 && human_moves == opts.rounds;
    if (!rec.complete && opts.rounds != 0) out << "# input ended after " << human_moves << " moves\n";
    rec.word = play.word();

    // Continue with the human seat appending the first letter and handing over.
    std::map<std::pair<Position, std::uint32_t>, std::size_t> seen;
    while (true) {
        auto key = std::make_pair(play.position(), play.memory());
        auto [it, fresh] = seen.emplace(key, play.word().size());
        if (!fresh) {
            const auto& w = play.word();
            rec.limit.prefix.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(it->second));
            rec.limit.cycle.assign(w.begin() + static_cast<std::ptrdiff_t>(it->second), w.end());
            break;
        }
        if (play.to_move() == human) play.append(0, true);
        else play.machine_move();
    }
    rec.limit = canonical(rec.limit);
    rec.inf_set = run_inf_set(a.delta, a.initial, rec.limit);
    rec.winner = lasso_membership(a, rec.limit) ? PlayerTag::Exists : PlayerTag::Forall;
    out << "# limit: " << letters_string(ab, rec.limit.prefix) << (rec.limit.prefix.empty() ? "$ " : " $ ")
        << letters_string(ab, rec.limit.cycle) << "\n";
    out << "# inf-set: " << to_string(rec.inf_set) << "\n";
    out << "# winner: " << player_name(rec.winner) << "\n";
    return rec;
}

}  // namespace baire
