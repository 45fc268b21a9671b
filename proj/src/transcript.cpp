#include <cctype>
#include <sstream>

#include "designworld/acts.hpp"

namespace designworld {

const char* act_kind_wire(ActKind k) {
    switch (k) {
    case ActKind::Open: return "open";
    case ActKind::Close: return "close";
    case ActKind::Propose: return "propose";
    case ActKind::Accept: return "accept";
    case ActKind::RejectOption:
    case ActKind::RejectBelief: return "reject";
    case ActKind::Ask: return "ask";
    case ActKind::Say: return "say";
    }
    return "?";
}

Proposition UtteranceAct::realized_belief() const {
    if (const auto* s = std::get_if<ScoreContent>(&content))
        return Proposition::score(s->act.item, s->value);
    if (const auto* h = std::get_if<HasContent>(&content))
        return h->negated ? Proposition::has_not(h->agent, h->item)
                          : Proposition::has(h->agent, h->item);
    if (const auto* i = std::get_if<IntendContent>(&content))
        return Proposition::intend(i->act);
    if (const auto* o = std::get_if<OptionContent>(&content))
        return Proposition::option(o->act);
    throw DomainError("act realizes no storable belief");
}

std::vector<Turn> Transcript::turns() const {
    std::vector<Turn> out;
    for (const UtteranceAct& act : acts) {
        if (out.empty() || out.back().speaker != act.speaker)
            out.push_back({act.speaker, {}});
        out.back().acts.push_back(act);
    }
    return out;
}

namespace {

std::string put_act_str(const PutAct& a, const Transcript& t) {
    return "put-act (" + t.names[a.actor] + " " + a.item.wire_name() + " " +
           room_name(a.room) + ")";
}

std::string content_str(const ActContent& content, const Transcript& t) {
    std::ostringstream os;
    if (const auto* o = std::get_if<OptionContent>(&content)) {
        os << "option-" << o->label << ": " << put_act_str(o->act, t);
    } else if (const auto* i = std::get_if<IntendContent>(&content)) {
        os << "intended-" << i->label << ": " << put_act_str(i->act, t);
    } else if (const auto* s = std::get_if<ScoreContent>(&content)) {
        os << "bel-" << s->bel << ": score (option-" << s->option_label << ": "
           << put_act_str(s->act, t) << " " << s->value << ")";
    } else if (const auto* h = std::get_if<HasContent>(&content)) {
        os << "bel-" << h->bel << ": " << (h->negated ? "hasn't" : "has") << " ("
           << t.names[h->agent] << " " << h->item.wire_name() << ")";
    } else if (const auto* g = std::get_if<GoalContent>(&content)) {
        os << "goal-" << g->label << ": design-room (" << room_name(g->room) << ")";
    } else if (const auto* a = std::get_if<AskContent>(&content)) {
        os << "bel-" << a->bel << ": score (" << a->item.wire_name() << " ?value)";
    }
    return os.str();
}

std::string room_gloss(Room r) {
    return r == Room::Room1 ? "the study" : "the living room";
}

std::string speaker_gloss(const std::string& name) {
    std::string s = name;
    if (s.rfind("agent-", 0) == 0) s = s.substr(6);
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::string gloss_act(const UtteranceAct& act, const Transcript& t,
                      bool first_proposal, ActKind previous_kind) {
    auto put_phrase = [&](const PutAct& a) {
        return "put the " + a.item.wire_name() + " in " + room_gloss(a.room);
    };
    switch (act.kind) {
    case ActKind::Propose: {
        const auto& o = std::get<OptionContent>(act.content);
        if (first_proposal) return "First, " + put_phrase(o.act) + ".";
        return "Then, let's " + put_phrase(o.act) + ".";
    }
    case ActKind::Accept: {
        const auto& o = std::get<OptionContent>(act.content);
        return "Yes, let's " + put_phrase(o.act) + ".";
    }
    case ActKind::RejectOption: {
        const auto& o = std::get<OptionContent>(act.content);
        if (previous_kind == ActKind::Say)
            return "It is better to " + put_phrase(o.act) + ".";
        return "No, instead let's " + put_phrase(o.act) + ".";
    }
    case ActKind::RejectBelief: {
        const auto& h = std::get<HasContent>(act.content);
        return "No, we no longer have " + h.item.wire_name() + ".";
    }
    case ActKind::Say: {
        if (const auto* s = std::get_if<ScoreContent>(&act.content))
            return "Putting in the " + s->act.item.wire_name() + " is worth " +
                   std::to_string(s->value);
        if (const auto* h = std::get_if<HasContent>(&act.content))
            return h->negated
                       ? "And we no longer have " + h->item.wire_name() + "."
                       : "We have the " + h->item.wire_name() + ".";
        const auto& i = std::get<IntendContent>(act.content);
        return "We agreed to " + put_phrase(i.act) + ".";
    }
    case ActKind::Close: {
        if (const auto* i = std::get_if<IntendContent>(&act.content))
            return "So, we've agreed to " + put_phrase(i->act) + ".";
        const auto& g = std::get<GoalContent>(act.content);
        return "That is all for " + room_gloss(g.room) + ".";
    }
    case ActKind::Open: {
        const auto& g = std::get<GoalContent>(act.content);
        return "Next, let's design " + room_gloss(g.room) + ".";
    }
    case ActKind::Ask: {
        const auto& a = std::get<AskContent>(act.content);
        return "What is the " + a.item.wire_name() + " worth?";
    }
    }
    return "";
}

std::string print_act(const UtteranceAct& act, const Transcript& t) {
    std::ostringstream os;
    os << "(" << act_kind_wire(act.kind) << " " << t.names[act.speaker] << " "
       << t.names[act.hearer] << " " << content_str(act.content, t) << ")";
    return os.str();
}

std::string print_transcript(const Transcript& t, bool gloss) {
    std::ostringstream os;
    bool seen_proposal = false;
    ActKind prev = ActKind::Open;
    for (const UtteranceAct& act : t.acts) {
        if (gloss)
            os << ";; " << speaker_gloss(t.names[act.speaker]) << ": "
               << gloss_act(act, t, !seen_proposal && act.kind == ActKind::Propose,
                            prev)
               << "\n";
        if (act.kind == ActKind::Propose) seen_proposal = true;
        prev = act.kind;
        os << print_act(act, t) << "\n";
    }
    return os.str();
}

namespace {

struct Cursor {
    std::vector<std::string> tokens;
    std::size_t i = 0;

    bool done() const { return i >= tokens.size(); }
    const std::string& peek() const {
        if (done()) throw ParseError("unexpected end of transcript");
        return tokens[i];
    }
    std::string next() {
        std::string t = peek();
        ++i;
        return t;
    }
    void expect(const std::string& want) {
        std::string got = next();
        if (got != want)
            throw ParseError("expected '" + want + "', got '" + got + "'");
    }
};

std::vector<std::string> act_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line.compare(first, 2, ";;") == 0) continue;  // gloss comment
        for (char c : line) {
            if (c == '(' || c == ')') {
                if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
                tokens.push_back(std::string(1, c));
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
    }
    return tokens;
}

int parse_label(const std::string& token, const std::string& prefix) {
    // "option-10:" -> 10
    if (token.rfind(prefix, 0) != 0 || token.back() != ':')
        throw ParseError("expected " + prefix + "N label, got '" + token + "'");
    return std::stoi(token.substr(prefix.size(), token.size() - prefix.size() - 1));
}

class TranscriptParser {
public:
    explicit TranscriptParser(const std::string& text) { cur_.tokens = act_tokens(text); }

    Transcript parse() {
        while (!cur_.done()) out_.acts.push_back(parse_one());
        if (next_name_ == 1)
            out_.names[1] = "agent-b";  // single-speaker degenerate input
        return out_;
    }

private:
    Cursor cur_;
    Transcript out_;
    int next_name_ = 0;

    AgentIndex agent_of(const std::string& name) {
        for (int i = 0; i < next_name_; ++i)
            if (out_.names[static_cast<std::size_t>(i)] == name)
                return static_cast<AgentIndex>(i);
        if (next_name_ >= 2)
            throw ParseError("transcript names a third agent: " + name);
        out_.names[static_cast<std::size_t>(next_name_)] = name;
        return static_cast<AgentIndex>(next_name_++);
    }

    ItemRef parse_item() {
        auto color = color_from_name(cur_.next());
        std::string kind_tok = cur_.next();
        auto kind = kind_from_name(kind_tok);
        if (!color || !kind) throw ParseError("unknown item: " + kind_tok);
        return {*color, *kind};
    }

    PutAct parse_put_act() {
        cur_.expect("put-act");
        cur_.expect("(");
        AgentIndex actor = agent_of(cur_.next());
        ItemRef item = parse_item();
        auto room = room_from_name(cur_.next());
        if (!room) throw ParseError("unknown room in put-act");
        cur_.expect(")");
        return {actor, item, *room};
    }

    UtteranceAct parse_one() {
        cur_.expect("(");
        std::string kind_tok = cur_.next();
        AgentIndex speaker = agent_of(cur_.next());
        AgentIndex hearer = agent_of(cur_.next());
        if (speaker == hearer) throw ParseError("speaker equals hearer");

        UtteranceAct act{};
        act.speaker = speaker;
        act.hearer = hearer;

        std::string label_tok = cur_.next();
        if (label_tok.rfind("option-", 0) == 0) {
            OptionContent c{parse_label(label_tok, "option-"), parse_put_act()};
            act.content = c;
            if (kind_tok == "propose") act.kind = ActKind::Propose;
            else if (kind_tok == "accept") act.kind = ActKind::Accept;
            else if (kind_tok == "reject") act.kind = ActKind::RejectOption;
            else throw ParseError("act '" + kind_tok + "' cannot carry an option");
        } else if (label_tok.rfind("intended-", 0) == 0) {
            IntendContent c{parse_label(label_tok, "intended-"), parse_put_act()};
            act.content = c;
            if (kind_tok == "close") act.kind = ActKind::Close;
            else if (kind_tok == "say") act.kind = ActKind::Say;
            else throw ParseError("act '" + kind_tok + "' cannot carry an intention");
        } else if (label_tok.rfind("goal-", 0) == 0) {
            int label = parse_label(label_tok, "goal-");
            cur_.expect("design-room");
            cur_.expect("(");
            auto room = room_from_name(cur_.next());
            if (!room) throw ParseError("unknown room in design-room goal");
            cur_.expect(")");
            act.content = GoalContent{label, *room};
            if (kind_tok == "close") act.kind = ActKind::Close;
            else if (kind_tok == "open") act.kind = ActKind::Open;
            else throw ParseError("act '" + kind_tok + "' cannot carry a room goal");
        } else if (label_tok.rfind("bel-", 0) == 0) {
            int bel = parse_label(label_tok, "bel-");
            std::string form = cur_.next();
            if (form == "score") {
                cur_.expect("(");
                if (cur_.peek().rfind("option-", 0) == 0) {
                    int opt = parse_label(cur_.next(), "option-");
                    PutAct put = parse_put_act();
                    int value = std::stoi(cur_.next());
                    cur_.expect(")");
                    act.content = ScoreContent{bel, opt, put, value};
                } else {
                    ItemRef item = parse_item();
                    cur_.expect("?value");
                    cur_.expect(")");
                    act.content = AskContent{bel, item};
                }
            } else if (form == "has" || form == "hasn't") {
                cur_.expect("(");
                AgentIndex who = agent_of(cur_.next());
                ItemRef item = parse_item();
                cur_.expect(")");
                act.content = HasContent{bel, form == "hasn't", who, item};
            } else {
                throw ParseError("unknown belief form: " + form);
            }
            if (kind_tok == "say") act.kind = ActKind::Say;
            else if (kind_tok == "reject") act.kind = ActKind::RejectBelief;
            else if (kind_tok == "ask") act.kind = ActKind::Ask;
            else throw ParseError("act '" + kind_tok + "' cannot carry a belief");
            if (act.kind == ActKind::Ask && !std::holds_alternative<AskContent>(act.content))
                throw ParseError("ask content must contain a variable");
            if (act.kind != ActKind::Ask && std::holds_alternative<AskContent>(act.content))
                throw ParseError("only ask content may contain a variable");
        } else {
            throw ParseError("unknown content label: " + label_tok);
        }
        cur_.expect(")");
        return act;
    }
};

}  // namespace

Transcript parse_transcript(const std::string& text) {
    return TranscriptParser(text).parse();
}

}  // namespace designworld
