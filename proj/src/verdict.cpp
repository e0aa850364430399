#include "mwkit/verdict.hpp"

namespace mwkit {

Verdict Verdict::accept(std::string check, std::string note) {
  Verdict v;
  v.accepted = true;
  v.check = std::move(check);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::reject(std::string check, std::string criterion, Witness witness) {
  Verdict v;
  v.accepted = false;
  v.check = std::move(check);
  v.criterion = std::move(criterion);
  v.witness = std::move(witness);
  return v;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out;
  out["accepted"] = v.accepted;
  out["check"] = v.check;
  out["criterion"] = v.criterion.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.criterion);
  if (!v.note.empty()) out["note"] = v.note;
  if (!v.witness) {
    out["witness"] = nullptr;
    return out;
  }
  const Witness& w = *v.witness;
  nlohmann::json wj = nlohmann::json::object();
  if (!w.labels.empty()) wj["labels"] = w.labels;
  if (w.expected) wj["expected"] = to_string(*w.expected);
  if (w.found) wj["found"] = to_string(*w.found);
  if (!w.sums.empty()) {
    auto& arr = wj["sums"] = nlohmann::json::array();
    for (const auto& s : w.sums) arr.push_back(to_string(s));
  }
  if (!w.candidates.empty() || v.criterion == "median") wj["candidates"] = w.candidates;
  if (!w.quartets.empty()) wj["quartets"] = w.quartets;
  if (!w.sets.empty()) wj["sets"] = w.sets;
  if (!w.message.empty()) wj["message"] = w.message;
  out["witness"] = std::move(wj);
  return out;
}

}  // namespace mwkit
