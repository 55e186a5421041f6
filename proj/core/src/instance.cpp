#include "mmp/instance.hpp"

#include <algorithm>
#include <map>

namespace mmp {

namespace {

struct Value {
    enum class Kind { Integer, Tuple, List };
    Kind kind;
    Int integer;
    std::vector<Int> tuple;
    std::vector<std::vector<Int>> list;
    int line = 0, col = 0;
};

struct Token {
    std::string key;
    std::string raw;
    int line, col;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        int tline = line, tcol = col;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
               text[i] != '\n' && text[i] != '\r') {
            ++i;
            ++col;
        }
        std::string tok(text.substr(start, i - start));
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(tline, tcol, "expected key=value, got '" + tok + "'");
        out.push_back({tok.substr(0, eq), tok.substr(eq + 1), tline, tcol});
    }
    return out;
}

Int parse_int_at(const std::string& s, std::size_t& i, const Token& tok) {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits_from = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == digits_from)
        throw ParseError(tok.line, tok.col + static_cast<int>(start),
                         "expected an integer in value of '" + tok.key + "'");
    return Int(s.substr(start, i - start));
}

std::vector<Int> parse_tuple_at(const std::string& s, std::size_t& i, const Token& tok) {
    if (i >= s.size() || s[i] != '(')
        throw ParseError(tok.line, tok.col, "expected '(' in value of '" + tok.key + "'");
    ++i;
    std::vector<Int> vals;
    while (true) {
        vals.push_back(parse_int_at(s, i, tok));
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ')') {
            ++i;
            return vals;
        }
        throw ParseError(tok.line, tok.col, "expected ',' or ')' in value of '" + tok.key + "'");
    }
}

Value parse_value(const Token& tok) {
    Value v;
    v.line = tok.line;
    v.col = tok.col;
    const std::string& s = tok.raw;
    if (s.empty()) throw ParseError(tok.line, tok.col, "empty value for key '" + tok.key + "'");
    std::size_t i = 0;
    if (s[0] == '[') {
        v.kind = Value::Kind::List;
        i = 1;
        if (i < s.size() && s[i] == ']') {
            ++i;
        } else {
            while (true) {
                v.list.push_back(parse_tuple_at(s, i, tok));
                if (i < s.size() && s[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < s.size() && s[i] == ']') {
                    ++i;
                    break;
                }
                throw ParseError(tok.line, tok.col,
                                 "expected ',' or ']' in value of '" + tok.key + "'");
            }
        }
    } else if (s[0] == '(') {
        v.kind = Value::Kind::Tuple;
        v.tuple = parse_tuple_at(s, i, tok);
    } else {
        v.kind = Value::Kind::Integer;
        v.integer = parse_int_at(s, i, tok);
    }
    if (i != s.size())
        throw ParseError(tok.line, tok.col, "trailing characters in value of '" + tok.key + "'");
    return v;
}

class KeyMap {
  public:
    KeyMap(const std::vector<Token>& tokens, std::string kind) : kind_(std::move(kind)) {
        for (const Token& t : tokens) {
            if (t.key == "kind") continue;
            if (!values_.emplace(t.key, parse_value(t)).second)
                throw ParseError(t.line, t.col, "duplicate key '" + t.key + "'");
        }
    }

    const Value& require(const std::string& key, Value::Kind kind) {
        auto it = values_.find(key);
        if (it == values_.end())
            throw ParseError(1, 1, "missing key '" + key + "' for kind=" + kind_);
        used_.push_back(key);
        check_kind(it->second, key, kind);
        return it->second;
    }

    const Value* optional(const std::string& key, Value::Kind kind) {
        auto it = values_.find(key);
        if (it == values_.end()) return nullptr;
        used_.push_back(key);
        check_kind(it->second, key, kind);
        return &it->second;
    }

    void reject_unknown() const {
        for (const auto& [key, value] : values_)
            if (std::find(used_.begin(), used_.end(), key) == used_.end())
                throw ParseError(value.line, value.col,
                                 "unknown key '" + key + "' for kind=" + kind_);
    }

  private:
    static void check_kind(const Value& v, const std::string& key, Value::Kind kind) {
        if (v.kind != kind) {
            const char* want = kind == Value::Kind::Integer  ? "an integer"
                               : kind == Value::Kind::Tuple ? "a tuple"
                                                            : "a tuple list";
            throw ParseError(v.line, v.col, "key '" + key + "' expects " + want);
        }
    }

    std::string kind_;
    std::map<std::string, Value> values_;
    std::vector<std::string> used_;
};

std::array<Int, 3> as_triple(const std::vector<Int>& t, const char* what) {
    if (t.size() != 3)
        throw ValidationError(std::string(what) + " must be a triple");
    return {t[0], t[1], t[2]};
}

long to_long_checked(const Int& v, const char* what) {
    if (v < -1000000000 || v > 1000000000)
        throw ValidationError(std::string(what) + " out of supported range");
    return static_cast<long>(v);
}

}  // namespace

InstanceData parse_instance(std::string_view text) {
    std::vector<Token> tokens = tokenize(text);
    std::string kind;
    for (const Token& t : tokens)
        if (t.key == "kind") {
            if (!kind.empty()) throw ParseError(t.line, t.col, "duplicate key 'kind'");
            kind = t.raw;
        }
    if (kind.empty()) throw ParseError(1, 1, "missing key 'kind'");

    KeyMap keys(tokens, kind);
    if (kind == "quotient") {
        QuotientInstance q;
        q.n = keys.require("n", Value::Kind::Integer).integer;
        q.q = keys.require("q", Value::Kind::Integer).integer;
        keys.reject_unknown();
        to_quotient(q);  // validate now, with the invariant named
        return q;
    }
    if (kind == "terminal_point") {
        TerminalPointInstance p;
        p.r = keys.require("r", Value::Kind::Integer).integer;
        p.a = keys.require("a", Value::Kind::Integer).integer;
        for (const auto& t : keys.require("g", Value::Kind::List).list) {
            if (t.size() != 2) throw ValidationError("germ terms must be (k,val) pairs");
            p.terms.emplace_back(to_long_checked(t[0], "germ exponent"),
                                 to_long_checked(t[1], "germ valuation"));
        }
        std::sort(p.terms.begin(), p.terms.end());
        keys.reject_unknown();
        to_terminal_point(p);
        return p;
    }
    if (kind == "curve_config") {
        CurveConfigInstance c;
        c.case_no = static_cast<int>(
            to_long_checked(keys.require("case", Value::Kind::Integer).integer, "case"));
        if (const Value* v = keys.optional("points", Value::Kind::List))
            for (const auto& t : v->list) c.points.push_back(as_triple(t, "curve point"));
        if (const Value* v = keys.optional("boundary", Value::Kind::Tuple))
            c.boundary = as_triple(v->tuple, "boundary point");
        if (const Value* v = keys.optional("index", Value::Kind::Tuple)) {
            if (v->tuple.size() != 2)
                throw ValidationError("case-1 index must be a pair (r,a)");
            c.index = std::array<Int, 2>{v->tuple[0], v->tuple[1]};
        }
        keys.reject_unknown();
        to_curve_config(c);
        return c;
    }
    if (kind == "flip_state") {
        FlipStateInstance f;
        for (const auto& t : keys.require("points", Value::Kind::List).list)
            f.points.push_back(as_triple(t, "state point"));
        if (const Value* v = keys.optional("seed", Value::Kind::Integer)) {
            if (v->integer < 0 || v->integer > Int("18446744073709551615"))
                throw ValidationError("seed out of range");
            f.seed = static_cast<std::uint64_t>(v->integer);
        }
        keys.reject_unknown();
        to_flip_state(f, std::nullopt);
        return f;
    }
    throw ValidationError("unknown kind '" + kind + "'");
}

namespace {

std::string triple_str(const std::array<Int, 3>& t) {
    return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

}  // namespace

std::string serialize_instance(const InstanceData& inst) {
    if (const auto* q = std::get_if<QuotientInstance>(&inst))
        return "kind=quotient n=" + q->n.str() + " q=" + q->q.str() + "\n";
    if (const auto* p = std::get_if<TerminalPointInstance>(&inst)) {
        std::string g = "[";
        for (std::size_t i = 0; i < p->terms.size(); ++i) {
            if (i) g += ",";
            g += "(" + std::to_string(p->terms[i].first) + "," +
                 std::to_string(p->terms[i].second) + ")";
        }
        return "kind=terminal_point r=" + p->r.str() + " a=" + p->a.str() + " g=" + g + "]\n";
    }
    if (const auto* c = std::get_if<CurveConfigInstance>(&inst)) {
        std::string s = "kind=curve_config case=" + std::to_string(c->case_no);
        if (c->index)
            s += " index=(" + (*c->index)[0].str() + "," + (*c->index)[1].str() + ")";
        if (c->boundary) s += " boundary=" + triple_str(*c->boundary);
        if (!c->points.empty()) {
            s += " points=[";
            for (std::size_t i = 0; i < c->points.size(); ++i) {
                if (i) s += ",";
                s += triple_str(c->points[i]);
            }
            s += "]";
        }
        return s + "\n";
    }
    const auto& f = std::get<FlipStateInstance>(inst);
    std::string s = "kind=flip_state points=[";
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        if (i) s += ",";
        s += triple_str(f.points[i]);
    }
    s += "] seed=" + std::to_string(f.seed);
    return s + "\n";
}

CyclicQuotientType to_quotient(const QuotientInstance& q) { return make_quotient(q.n, q.q); }

TerminalPoint to_terminal_point(const TerminalPointInstance& p) {
    std::vector<GermSeries::Term> terms;
    for (const auto& [k, val] : p.terms) terms.push_back({k, val});
    return make_terminal_point(p.r, p.a, GermSeries(terms));
}

CurveConfig to_curve_config(const CurveConfigInstance& c) {
    auto to_point = [](const std::array<Int, 3>& t) {
        CyclicQuotientType germ = make_quotient(t[0], t[1]);
        return make_point_on_curve(germ, static_cast<std::size_t>(
                                             to_long_checked(t[2], "meeting position")));
    };
    switch (c.case_no) {
        case 1: {
            if (!c.index)
                throw ValidationError("case-1 curve_config requires index=(r,a)");
            if (c.boundary || !c.points.empty())
                throw ValidationError("case-1 curve_config carries only index=(r,a)");
            return make_case1_config((*c.index)[0], (*c.index)[1]);
        }
        case 2: {
            if (c.index) throw ValidationError("index=(r,a) is only for case 1");
            if (!c.boundary)
                throw ValidationError("case-2 curve_config requires boundary=(n,q,meet)");
            if (c.points.size() > 1)
                throw ValidationError("case-2 curve_config carries at most one off-curve point");
            std::optional<PointOnCurve> off;
            if (!c.points.empty()) off = to_point(c.points[0]);
            return make_case2_config(to_point(*c.boundary), off);
        }
        case 3: {
            if (c.index || c.boundary)
                throw ValidationError("case-3 curve_config carries only points=[...]");
            std::vector<PointOnCurve> pts;
            for (const auto& t : c.points) pts.push_back(to_point(t));
            return make_case3_config(pts);
        }
        default:
            throw ValidationError("case must be 1, 2 or 3");
    }
}

FlipState to_flip_state(const FlipStateInstance& f, std::optional<std::uint64_t> seed_override) {
    std::vector<SimPoint> pts;
    for (const auto& t : f.points) {
        if (t[0] > 1000000000) throw ValidationError("point index out of supported range");
        pts.push_back(SimPoint{t[0], t[1], t[2], true, 0});
    }
    return make_flip_state(pts, seed_override.value_or(f.seed));
}

FlipState to_flip_state(const CurveConfigInstance& c, std::uint64_t seed) {
    CurveConfig cfg = to_curve_config(c);
    std::vector<SimPoint> pts;
    auto add_from_germ = [&pts](const PointOnCurve& p, bool boundary) {
        if (p.is_smooth()) return;
        if (boundary) {
            // 1/r(b,1): threefold index r, weight a = b^{-1} mod r.
            pts.push_back(SimPoint{p.germ.n, mod_inverse(p.germ.q, p.germ.n), 1, true, 0});
        } else if (p.family) {
            pts.push_back(SimPoint{p.family->r, mod_inverse(p.family->b, p.family->r), 1,
                                   p.family->h == 1, 0});
        }
        // A-type points lie over index-1 threefold points; they never act.
    };
    if (cfg.case_tag == CaseTag::Case1) {
        pts.push_back(SimPoint{cfg.case1->r, cfg.case1->a, 1, true, 0});
    } else {
        if (cfg.boundary_meeting) add_from_germ(*cfg.boundary_meeting, true);
        for (const auto& p : cfg.points) add_from_germ(p, false);
    }
    return make_flip_state(pts, seed, cfg);
}

}  // namespace mmp
