#include "braidmetric/json_io.hpp"

#include <fstream>

namespace braidmetric {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw DataError(what + ": missing key '" + key + "'");
    return *it;
}

int int_field(const Json& j, const char* key, const std::string& what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_integer()) throw DataError(what + ": key '" + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

Json to_json(const BraidWord& w) {
    return Json{{"n", w.strand_count()}, {"letters", w.letters()}};
}

BraidWord word_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("word: expected an object");
    const Json& letters = field(j, "letters", "word");
    if (!letters.is_array()) throw DataError("word: 'letters' must be an array");
    std::vector<Letter> ls;
    ls.reserve(letters.size());
    for (const Json& v : letters) {
        if (!v.is_number_integer()) throw DataError("word: letters must be integers");
        ls.push_back(v.get<int>());
    }
    return BraidWord(int_field(j, "n", "word"), std::move(ls));
}

Json to_json(const NameEntry& e) {
    return Json{{"p", e.strand_low}, {"q", e.strand_high}, {"a", e.rank}, {"sign", e.sign}};
}

NameEntry name_entry_from_json(const Json& j) {
    NameEntry e{int_field(j, "p", "name"), int_field(j, "q", "name"), int_field(j, "a", "name"),
                int_field(j, "sign", "name")};
    if (e.sign != 1 && e.sign != -1) throw DataError("name: sign must be +1 or -1");
    if (e.strand_low < 1 || e.strand_high <= e.strand_low)
        throw DataError("name: strand pair must satisfy 1 <= p < q");
    return e;
}

Json to_json(const NameSequence& s) {
    Json arr = Json::array();
    for (const NameEntry& e : s.entries) arr.push_back(to_json(e));
    return arr;
}

Json to_json(const Move& m) {
    Json j{{"kind", std::string(to_string(m.kind))}, {"pos", m.pos}};
    if (m.kind == MoveKind::free_insert) {
        j["generator"] = m.generator;
        j["order"] = m.order == InsertOrder::pos_then_neg ? "pn" : "np";
    }
    return j;
}

Move move_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("move: expected an object");
    const Json& kind = field(j, "kind", "move");
    if (!kind.is_string()) throw DataError("move: 'kind' must be a string");
    Move m;
    m.kind = move_kind_from_string(kind.get<std::string>());
    m.pos = int_field(j, "pos", "move");
    if (m.kind == MoveKind::free_insert) {
        m.generator = int_field(j, "generator", "move");
        const Json& order = field(j, "order", "move");
        if (order == "pn")
            m.order = InsertOrder::pos_then_neg;
        else if (order == "np")
            m.order = InsertOrder::neg_then_pos;
        else
            throw DataError("move: 'order' must be \"pn\" or \"np\"");
    }
    return m;
}

Json to_json(const Derivation& d) {
    Json moves = Json::array();
    for (const Move& m : d.moves) moves.push_back(to_json(m));
    return Json{{"n", d.strand_count()}, {"start", d.start.letters()}, {"moves", std::move(moves)}};
}

Derivation derivation_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("derivation: expected an object");
    const Json& start = field(j, "start", "derivation");
    if (!start.is_array()) throw DataError("derivation: 'start' must be an array");
    std::vector<Letter> letters;
    letters.reserve(start.size());
    for (const Json& v : start) {
        if (!v.is_number_integer()) throw DataError("derivation: start letters must be integers");
        letters.push_back(v.get<int>());
    }
    BraidWord word(int_field(j, "n", "derivation"), std::move(letters));

    const Json& moves = field(j, "moves", "derivation");
    if (!moves.is_array()) throw DataError("derivation: 'moves' must be an array");
    std::vector<Move> ms;
    ms.reserve(moves.size());
    for (const Json& mj : moves) ms.push_back(move_from_json(mj));
    return Derivation{std::move(word), std::move(ms)};
}

Json to_json(const LowerBoundReport& r) {
    return Json{{"multiset_equal", r.multiset_equal}, {"disjoint", r.disjoint_inversions},
                {"shared", r.shared_inversions},     {"median", r.median_inversions},
                {"bound_simple", r.bound_simple},    {"bound", r.bound}};
}

Json to_json(const DistanceResult& r) {
    Json j{{"status", std::string(to_string(r.status))}};
    if (r.status == DistanceStatus::exact) {
        j["distance"] = r.distance;
        if (r.witness) j["witness"] = to_json(*r.witness);
    }
    if (r.status == DistanceStatus::unknown) j["reason"] = r.reason;
    return j;
}

Json to_json(const Certificate& c) {
    if (c.certified)
        return Json{{"status", "certified_optimal"},
                    {"distance", c.distance},
                    {"method", std::string(to_string(c.method))}};
    return Json{{"status", "inconclusive"}, {"gap", c.gap}, {"reason", c.reason}};
}

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError(what + ": not valid JSON");
    return j;
}

Derivation load_derivation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return derivation_from_json(parse_json_text(text, path));
}

void save_derivation_file(const std::string& path, const Derivation& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << to_json(d).dump(2) << '\n';
}

}  // namespace braidmetric
