#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qes::jsonw {

/// Formats a double with 17 significant digits so identical runs emit
/// byte-identical artifacts.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Minimal ordered JSON document: keys serialize in insertion order and all
/// numbers go through format_double, which keeps artifacts reproducible.
class Value {
public:
    enum class Kind { Null, Bool, Num, Str, Arr, Obj };

    Value() : kind_(Kind::Null) {}
    static Value boolean(bool b) { Value v; v.kind_ = Kind::Bool; v.bool_ = b; return v; }
    static Value number(double d) { Value v; v.kind_ = Kind::Num; v.num_ = d; return v; }
    static Value str(std::string s) { Value v; v.kind_ = Kind::Str; v.str_ = std::move(s); return v; }
    static Value array() { Value v; v.kind_ = Kind::Arr; return v; }
    static Value object() { Value v; v.kind_ = Kind::Obj; return v; }

    Value& set(const std::string& key, Value v) {
        obj_.emplace_back(key, std::move(v));
        return obj_.back().second;
    }
    void push(Value v) { arr_.push_back(std::move(v)); }
    bool empty() const { return arr_.empty() && obj_.empty(); }

    std::string dump(int indent = 0) const {
        std::string out;
        write(out, indent);
        out.push_back('\n');
        return out;
    }

private:
    static void escape(std::string& out, const std::string& s) {
        out.push_back('"');
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default: out.push_back(c);
            }
        }
        out.push_back('"');
    }

    void write(std::string& out, int level) const {
        const std::string pad(static_cast<size_t>(level) * 2, ' ');
        const std::string pad_in(static_cast<size_t>(level + 1) * 2, ' ');
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += bool_ ? "true" : "false"; break;
            case Kind::Num: out += format_double(num_); break;
            case Kind::Str: escape(out, str_); break;
            case Kind::Arr: {
                if (arr_.empty()) { out += "[]"; break; }
                out += "[\n";
                for (size_t i = 0; i < arr_.size(); ++i) {
                    out += pad_in;
                    arr_[i].write(out, level + 1);
                    if (i + 1 < arr_.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "]";
                break;
            }
            case Kind::Obj: {
                if (obj_.empty()) { out += "{}"; break; }
                out += "{\n";
                for (size_t i = 0; i < obj_.size(); ++i) {
                    out += pad_in;
                    escape(out, obj_[i].first);
                    out += ": ";
                    obj_[i].second.write(out, level + 1);
                    if (i + 1 < obj_.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "}";
                break;
            }
        }
    }

    Kind kind_ = Kind::Null;
    bool bool_ = false;
    double num_ = 0.0;
    std::string str_;
    std::vector<Value> arr_;
    std::vector<std::pair<std::string, Value>> obj_;
};

} // namespace qes::jsonw
