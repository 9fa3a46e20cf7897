#include "codesift/eval/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <string_view>

namespace codesift::eval {

namespace {

constexpr std::array<std::string_view, 48> kWords = {
    "count", "total", "buffer", "index", "value", "node",  "list",   "item",  "key",    "size",  "offset", "result",
    "state", "entry", "table",  "block", "frame", "token", "record", "field", "cursor", "limit", "flag",   "mask",
    "width", "depth", "level",  "range", "score", "chunk", "packet", "queue", "stack",  "page",  "line",   "row",
    "col",   "pixel", "color",  "step",  "delta", "accum", "weight", "bias",  "seed",   "hash",  "slot",   "port",
};

constexpr std::array<std::string_view, 24> kVerbs = {
    "compute", "update", "parse", "read",  "write",  "scan",  "check",  "find",
    "build",   "reset",  "merge", "split", "encode", "apply", "filter", "count",
    "process", "handle", "load",  "store", "fill",   "clear", "walk",   "emit",
};

constexpr std::array<std::string_view, 16> kCommentWords = {
    "handle", "the", "next", "value", "clamp", "result", "skip", "empty", "update", "counter", "check", "bounds",
    "fast",   "path", "retry", "buffer",
};

constexpr std::array<std::string_view, 12> kLibCalls = {
    "strlen", "memcpy", "memset", "printf", "abs", "malloc", "free", "strcmp", "isdigit", "toupper", "sqrt", "puts",
};

constexpr std::array<std::string_view, 8> kExternal = {
    "log_event", "lock_table", "unlock_table", "emit_metric", "xfer_block", "ring_push", "ring_pop", "trace_point",
};

class Gen
{
  public:
    Gen(std::mt19937_64& rng, const std::vector<std::string>& helpers) : rng_(rng), helpers_(helpers) {}

    std::string function(const std::string& name)
    {
        std::string out;
        if (chance(0.3)) {
            out += "/* " + words(3) + " */\n";
        }
        std::string ret = pick_type();
        out += ret + " " + name + "(";
        std::size_t nparams = uniform(0, 3);
        for (std::size_t i = 0; i < nparams; ++i) {
            std::string pname = ident() + std::to_string(i);
            if (i > 0) {
                out += ", ";
            }
            if (chance(0.3)) {
                out += "int *" + pname;
                ptrs_.push_back(pname);
            } else {
                std::string t = chance(0.7) ? "int" : "long";
                out += t + " " + pname;
                ints_.push_back(pname);
            }
        }
        if (nparams == 0) {
            out += "void";
        }
        out += ")\n{\n";
        std::size_t nlocals = uniform(1, 4);
        for (std::size_t i = 0; i < nlocals; ++i) {
            std::string lname = ident() + "_" + std::to_string(i);
            std::string t = chance(0.8) ? "int" : (chance(0.5) ? "unsigned" : "double");
            out += "    " + t + " " + lname;
            if (chance(0.6)) {
                out += " = " + literal();
            }
            out += ";\n";
            ints_.push_back(lname);
        }
        std::size_t nstmts = uniform(1, 6);
        for (std::size_t i = 0; i < nstmts; ++i) {
            out += statement(1, 2);
        }
        if (ret != "void") {
            out += "    return " + expr(1) + ";\n";
        }
        out += "}\n";
        return out;
    }

  private:
    std::size_t uniform(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    template <typename C>
    std::string pick(const C& c)
    {
        return std::string(c[uniform(0, c.size() - 1)]);
    }

    std::string ident() { return pick(kWords); }

    std::string words(std::size_t n)
    {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) {
            s += (i > 0 ? " " : "") + pick(kCommentWords);
        }
        return s;
    }

    std::string pick_type()
    {
        static constexpr std::array<std::string_view, 5> types = {"int", "int", "void", "long", "unsigned"};
        return pick(types);
    }

    std::string literal()
    {
        static constexpr std::array<std::string_view, 10> lits = {"0", "1", "2", "4", "8", "16", "-1", "10", "255",
                                                                  "0x7f"};
        return pick(lits);
    }

    std::string var() { return ints_.empty() ? literal() : ints_[uniform(0, ints_.size() - 1)]; }

    std::string expr(int depth)
    {
        static constexpr std::array<std::string_view, 11> ops = {"+", "-", "*", "/", "%", "&", "|", "^", "<<", ">>",
                                                                 "+"};
        if (depth <= 0 || chance(0.35)) {
            if (!ptrs_.empty() && chance(0.15)) {
                return ptrs_[uniform(0, ptrs_.size() - 1)] + "[" + var() + "]";
            }
            return chance(0.7) ? var() : literal();
        }
        if (chance(0.1)) {
            return "abs(" + expr(depth - 1) + ")";
        }
        return "(" + expr(depth - 1) + " " + pick(ops) + " " + expr(depth - 1) + ")";
    }

    std::string cond()
    {
        static constexpr std::array<std::string_view, 6> rel = {"<", "<=", ">", ">=", "==", "!="};
        std::string c = var() + " " + pick(rel) + " " + expr(1);
        if (chance(0.2)) {
            c += (chance(0.5) ? " && " : " || ") + var() + " != 0";
        }
        return c;
    }

    std::string call()
    {
        double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        if (r < 0.4 && !helpers_.empty()) {
            return helpers_[uniform(0, helpers_.size() - 1)] + "(" + var() + ")";
        }
        if (r < 0.6) {
            return pick(kExternal) + "(" + var() + ")";
        }
        std::string f = pick(kLibCalls);
        if (f == "printf") {
            return "printf(\"" + ident() + " %d\\n\", " + var() + ")";
        }
        if (f == "puts") {
            return "puts(\"" + words(2) + "\")";
        }
        if (f == "strlen" || f == "strcmp") {
            return "abs(" + var() + ")";
        }
        if (f == "memcpy" || f == "memset") {
            return ptrs_.empty() ? "abs(" + var() + ")" : f + "(" + ptrs_.front() + ", 0, " + var() + ")";
        }
        if (f == "malloc" || f == "free") {
            return "abs(" + var() + ")";
        }
        return f + "(" + var() + ")";
    }

    std::string statement(int indent, int depth)
    {
        std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
        double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        if (ints_.empty() || depth <= 0 || r < 0.35) {
            static constexpr std::array<std::string_view, 5> assign = {"=", "=", "+=", "-=", "|="};
            std::string s;
            if (chance(0.15)) {
                s += pad + "/* " + words(uniform(1, 4)) + " */\n";
            }
            if (chance(0.25)) {
                return s + pad + call() + ";\n";
            }
            if (!ptrs_.empty() && chance(0.15)) {
                return s + pad + ptrs_[uniform(0, ptrs_.size() - 1)] + "[" + var() + "] = " + expr(2) + ";\n";
            }
            if (chance(0.1)) {
                return s + pad + var() + "++;\n";
            }
            return s + pad + var() + " " + pick(assign) + " " + expr(2) + ";\n";
        }
        if (r < 0.6) {
            std::string s = pad + "if (" + cond() + ") {\n" + block(indent + 1, depth - 1) + pad + "}";
            if (chance(0.4)) {
                s += " else {\n" + block(indent + 1, depth - 1) + pad + "}";
            }
            return s + "\n";
        }
        if (r < 0.8) {
            std::string i = var();
            return pad + "for (" + i + " = 0; " + i + " < " + expr(1) + "; " + i + "++) {\n" +
                   block(indent + 1, depth - 1) + pad + "}\n";
        }
        if (r < 0.92) {
            return pad + "while (" + cond() + ") {\n" + block(indent + 1, depth - 1) + pad + "    " + var() +
                   " -= 1;\n" + pad + "}\n";
        }
        std::string s = pad + "switch (" + var() + ") {\n";
        std::size_t cases = uniform(1, 3);
        for (std::size_t c = 0; c < cases; ++c) {
            s += pad + "case " + std::to_string(c) + ":\n" + statement(indent + 1, 0) + pad + "    break;\n";
        }
        s += pad + "default:\n" + statement(indent + 1, 0) + pad + "    break;\n";
        return s + pad + "}\n";
    }

    std::string block(int indent, int depth)
    {
        std::string s;
        std::size_t n = uniform(1, 3);
        for (std::size_t i = 0; i < n; ++i) {
            s += statement(indent, depth);
        }
        return s;
    }

    std::mt19937_64& rng_;
    const std::vector<std::string>& helpers_;
    std::vector<std::string> ints_;
    std::vector<std::string> ptrs_;
};

} // namespace

std::string synthetic_function(std::mt19937_64& rng, const std::string& name, const std::vector<std::string>& helpers)
{
    return Gen(rng, helpers).function(name);
}

std::vector<frontend::ManifestUnit> synthetic_units(std::size_t count, std::uint64_t seed, const SyntheticOptions& opts)
{
    std::mt19937_64 rng(seed);
    const std::size_t per_file = std::max<std::size_t>(opts.functions_per_file, 1);
    const std::size_t dirs = std::max<std::size_t>(opts.directories, 1);

    std::vector<std::string> names;
    std::set<std::string> used;
    while (names.size() < count) {
        std::string n = std::string(kVerbs[rng() % kVerbs.size()]);
        std::string w = std::string(kWords[rng() % kWords.size()]);
        n += (rng() % 2 == 0) ? "_" + w : std::string(1, static_cast<char>(w[0] - 'a' + 'A')) + w.substr(1);
        n += "_" + std::to_string(names.size());
        if (used.insert(n).second) {
            names.push_back(n);
        }
    }

    std::vector<frontend::ManifestUnit> units;
    for (std::size_t f = 0; f * per_file < count; ++f) {
        frontend::ManifestUnit u;
        char file[64];
        std::snprintf(file, sizeof file, "/d%02zu/gen%05zu.c", f % dirs, f);
        u.unit.path = opts.root + file;
        u.unit.project_id = opts.project_id;
        u.distractor = true;
        for (std::size_t i = f * per_file; i < std::min(count, (f + 1) * per_file); ++i) {
            std::vector<std::string> helpers;
            for (std::size_t h = 0; h < 3 && i > 0; ++h) {
                helpers.push_back(names[rng() % i]);
            }
            u.unit.text += synthetic_function(rng, names[i], helpers) + "\n";
        }
        units.push_back(std::move(u));
    }
    return units;
}

} // namespace codesift::eval
