#include "hbsa/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace hbsa {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::optional<Arm> parse_arm(const std::string& s) {
    if (s == "a1") return Arm::a1;
    if (s == "a2") return Arm::a2;
    if (s == "b1") return Arm::b1;
    if (s == "b2") return Arm::b2;
    return std::nullopt;
}

std::optional<Slot> parse_slot(const std::string& s) {
    if (s == "A") return Slot::A;
    if (s == "B") return Slot::B;
    if (s == "both") return Slot::Both;
    return std::nullopt;
}

class LineParser {
  public:
    LineParser(int line_no, std::vector<Token> tokens)
        : line_(line_no), tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (done()) throw ParseError(line_, end_col(), "unexpected end of line");
        return tokens_[pos_];
    }
    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }
    void expect(const std::string& word) {
        Token t = next();
        if (t.text != word)
            throw ParseError(line_, t.col, "expected '" + word + "', got '" + t.text + "'");
    }
    bool accept(const std::string& word) {
        if (!done() && tokens_[pos_].text == word) {
            ++pos_;
            return true;
        }
        return false;
    }
    void finish() {
        if (!done())
            throw ParseError(line_, peek().col, "trailing input '" + peek().text + "'");
    }
    int end_col() const {
        if (tokens_.empty()) return 1;
        const Token& last = tokens_.back();
        return last.col + static_cast<int>(last.text.size());
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, done() ? end_col() : tokens_[pos_].col, msg);
    }

    Slot parse_on_clause() {
        expect("on");
        Token t = next();
        auto s = parse_slot(t.text);
        if (!s) throw ParseError(line_, t.col, "expected A, B or both, got '" + t.text + "'");
        return *s;
    }

    double parse_number() {
        Token t = next();
        double value{};
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            throw ParseError(line_, t.col, "expected a number, got '" + t.text + "'");
        return value;
    }

    Arm parse_arm_assignment(const std::string& key) {
        Token t = next();
        std::string prefix = key + "=";
        if (t.text.rfind(prefix, 0) != 0)
            throw ParseError(line_, t.col, "expected " + prefix + "<arm>, got '" + t.text + "'");
        auto a = parse_arm(t.text.substr(prefix.size()));
        if (!a)
            throw ParseError(line_, t.col + static_cast<int>(prefix.size()),
                             "unknown arm '" + t.text.substr(prefix.size()) + "'");
        return *a;
    }

    int line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit circuit;
    circuit.name = "circuit";
    bool saw_any = false;
    // duplicate-FBS tracking per photon slot
    bool fbs_a = false, fbs_b = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        LineParser p(line_no, std::move(tokens));
        Token head = p.next();
        if (head.text == "circuit") {
            if (saw_any)
                throw ParseError(line_no, head.col, "circuit header must come first");
            Token name = p.next();
            circuit.name = name.text;
            p.finish();
            saw_any = true;
            continue;
        }
        saw_any = true;
        StepSpec spec;
        if (head.text == "hwp") {
            spec.kind = StepSpec::Kind::hwp;
            spec.angle_deg = p.parse_number();
            spec.slot = p.parse_on_clause();
        } else if (head.text == "fbs") {
            spec.kind = StepSpec::Kind::fbs;
            spec.slot = p.parse_on_clause();
            bool hits_a = spec.slot != Slot::B;
            bool hits_b = spec.slot != Slot::A;
            if ((hits_a && fbs_a) || (hits_b && fbs_b))
                throw ParseError(line_no, head.col,
                                 "duplicate fbs: a photon path already carries one");
            fbs_a = fbs_a || hits_a;
            fbs_b = fbs_b || hits_b;
        } else if (head.text == "fs") {
            spec.kind = StepSpec::Kind::fs;
            spec.slot = p.parse_on_clause();
            if (p.accept("arm")) {
                Token t = p.next();
                if (t.text == "x1")
                    spec.fs_arm = XTag::x1;
                else if (t.text == "x2")
                    spec.fs_arm = XTag::x2;
                else
                    throw ParseError(line_no, t.col, "expected x1 or x2, got '" + t.text + "'");
            }
        } else if (head.text == "stage2") {
            spec.kind = StepSpec::Kind::stage2;
            spec.slot = p.parse_on_clause();
        } else if (head.text == "bs") {
            spec.kind = StepSpec::Kind::bs;
            spec.slot = p.parse_on_clause();
        } else if (head.text == "ui") {
            spec.kind = StepSpec::Kind::ui;
            spec.ui_m = p.parse_arm_assignment("m");
            spec.ui_n = p.parse_arm_assignment("n");
            if (spec.ui_m == spec.ui_n)
                throw ParseError(line_no, head.col, "ui arms m and n must differ");
            if (p.accept("sign")) {
                Token t = p.next();
                if (t.text == "-")
                    spec.ui_sign = -1;
                else if (t.text == "+")
                    spec.ui_sign = +1;
                else
                    throw ParseError(line_no, t.col, "expected + or -, got '" + t.text + "'");
            }
            if (p.accept("variant")) {
                Token t = p.next();
                if (t.text == "printed")
                    spec.ui_variant = UiVariant::printed;
                else if (t.text == "ortho")
                    spec.ui_variant = UiVariant::ortho;
                else
                    throw ParseError(line_no, t.col,
                                     "expected printed or ortho, got '" + t.text + "'");
            }
            spec.slot = p.parse_on_clause();
        } else if (head.text == "delay") {
            spec.kind = StepSpec::Kind::delay;
            Token t = p.next();
            if (t.text == "t0")
                spec.delay_kind = DelayKind::t0;
            else if (t.text == "t1")
                spec.delay_kind = DelayKind::t1;
            else
                throw ParseError(line_no, t.col, "expected t0 or t1, got '" + t.text + "'");
            spec.slot = p.parse_on_clause();
        } else {
            throw ParseError(line_no, head.col, "unknown element '" + head.text + "'");
        }
        p.finish();
        circuit.steps.push_back(make_step(spec));
    }
    // recover canonical stage marks when the step sequence matches
    const Circuit canonical = build_hbsa_circuit();
    if (circuit.steps.size() == canonical.steps.size()) {
        bool same = true;
        for (std::size_t i = 0; i < circuit.steps.size(); ++i)
            if (!(circuit.steps[i].spec == canonical.steps[i].spec)) same = false;
        if (same) circuit.stage_marks = canonical.stage_marks;
    }
    return circuit;
}

namespace {

std::string format_angle(double deg) {
    std::ostringstream os;
    os.precision(10);
    os << deg;
    return os.str();
}

}  // namespace

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream os;
    os << "circuit " << circuit.name << "\n";
    for (const auto& step : circuit.steps) {
        const StepSpec& s = step.spec;
        switch (s.kind) {
            case StepSpec::Kind::hwp:
                os << "hwp " << format_angle(s.angle_deg) << " on " << to_string(s.slot);
                break;
            case StepSpec::Kind::fbs:
                os << "fbs on " << to_string(s.slot);
                break;
            case StepSpec::Kind::fs:
                os << "fs on " << to_string(s.slot);
                if (s.fs_arm) os << " arm " << to_string(*s.fs_arm);
                break;
            case StepSpec::Kind::stage2:
                os << "stage2 on " << to_string(s.slot);
                break;
            case StepSpec::Kind::bs:
                os << "bs on " << to_string(s.slot);
                break;
            case StepSpec::Kind::ui:
                os << "ui m=" << to_string(s.ui_m) << " n=" << to_string(s.ui_n);
                if (s.ui_sign < 0) os << " sign -";
                if (s.ui_variant == UiVariant::printed) os << " variant printed";
                os << " on " << to_string(s.slot);
                break;
            case StepSpec::Kind::delay:
                os << "delay " << (s.delay_kind == DelayKind::t0 ? "t0" : "t1") << " on "
                   << to_string(s.slot);
                break;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hbsa
