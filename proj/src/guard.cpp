#include "pnsup/guard.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pnsup/errors.hpp"

namespace pnsup {

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::kForbid:
      return "FORBID";
    case Polarity::kEnable:
      return "ENABLE";
    case Polarity::kFree:
      return "FREE";
  }
  return "?";
}

std::size_t Guard::literal_count() const {
  std::size_t n = 0;
  for (const auto& term : terms) n += term.thresholds.marked_places();
  return n;
}

Guard free_guard(TransitionId t) { return Guard{t, Polarity::kFree, {}}; }

Guard guard_from_cover(TransitionId t, std::span<const SubMarking> cover, Polarity polarity) {
  if (cover.empty()) throw std::invalid_argument("guard_from_cover needs a nonempty cover");
  if (polarity == Polarity::kFree) throw std::invalid_argument("a cover guard cannot be FREE");
  Guard g{t, polarity, {}};
  for (const auto& v : cover) {
    if (v.is_zero()) throw std::invalid_argument("guard term thresholds must be nonzero");
    g.terms.push_back(Term{v});
  }
  return g;
}

Guard guard_fallback(TransitionId t, std::span<const Marking> critical) {
  return guard_from_cover(t, critical, Polarity::kForbid);
}

Guard choose_simpler(const std::optional<Guard>& forbid, const std::optional<Guard>& enable,
                     const Guard& fallback) {
  if (!forbid && !enable) return fallback;
  if (!enable) return *forbid;
  if (!forbid) return *enable;
  const auto key = [](const Guard& g) { return std::tuple(g.literal_count(), g.terms.size()); };
  return key(*enable) < key(*forbid) ? *enable : *forbid;
}

bool evaluate(const Guard& guard, const Marking& m) {
  const auto holds = [&](const Term& term) { return term.satisfied_by(m); };
  switch (guard.polarity) {
    case Polarity::kFree:
      return true;
    case Polarity::kEnable:
      return std::any_of(guard.terms.begin(), guard.terms.end(), holds);
    case Polarity::kForbid:
      return std::none_of(guard.terms.begin(), guard.terms.end(), holds);
  }
  return true;
}

bool Controller::permits(TransitionId t, const Marking& m) const {
  const auto it = guards.find(t);
  return it == guards.end() || evaluate(it->second, m);
}

std::string render_guard(const PetriNet& net, const Guard& guard) {
  std::string out = net.transition(guard.transition).name;
  out += ' ';
  out += polarity_name(guard.polarity);
  if (guard.polarity == Polarity::kFree) return out;
  out += ' ';
  bool first_term = true;
  for (const auto& term : guard.terms) {
    if (!first_term) out += '|';
    first_term = false;
    out += '(';
    bool first_lit = true;
    for (std::size_t p = 0; p < term.thresholds.size(); ++p) {
      if (term.thresholds[p] == 0) continue;
      if (!first_lit) out += '&';
      first_lit = false;
      out += net.place(p).name;
      out += ">=";
      out += std::to_string(term.thresholds[p]);
    }
    out += ')';
  }
  return out;
}

std::string render_guards(const PetriNet& net, const Controller& controller) {
  std::string out;
  for (const TransitionId t : net.controllable_transitions()) {
    const auto it = controller.guards.find(t);
    out += render_guard(net, it == controller.guards.end() ? free_guard(t) : it->second);
    out += '\n';
  }
  return out;
}

namespace {

Term parse_term(std::string_view text, const PetriNet& net, std::size_t line) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError(line, "term must be parenthesized: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  Term term{Marking(net.num_places())};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto amp = text.find('&', pos);
    const std::string_view lit = text.substr(pos, amp == std::string_view::npos ? amp : amp - pos);
    pos = amp == std::string_view::npos ? text.size() + 1 : amp + 1;
    const auto ge = lit.find(">=");
    if (ge == std::string_view::npos) {
      throw ParseError(line, "expected '<place>>=<n>', got '" + std::string(lit) + "'");
    }
    const auto place = net.find_place(lit.substr(0, ge));
    if (!place) throw ParseError(line, "unknown place '" + std::string(lit.substr(0, ge)) + "'");
    const std::string_view num = lit.substr(ge + 2);
    TokenCount k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty() || k == 0) {
      throw ParseError(line, "bad threshold in '" + std::string(lit) + "'");
    }
    if (term.thresholds[*place] != 0) {
      throw ParseError(line, "place '" + net.place(*place).name + "' repeated in term");
    }
    term.thresholds[*place] = k;
  }
  return term;
}

}  // namespace

Controller parse_guards(std::string_view text, const PetriNet& net) {
  Controller controller;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    std::istringstream in{std::string(raw)};
    std::string tname, pol, body, extra;
    if (!(in >> tname)) continue;
    if (!(in >> pol)) throw ParseError(line_no, "missing polarity for '" + tname + "'");
    in >> body;
    if (in >> extra) throw ParseError(line_no, "unexpected '" + extra + "'");

    const auto t = net.find_transition(tname);
    if (!t) throw ParseError(line_no, "unknown transition '" + tname + "'");
    if (!net.transition(*t).controllable) {
      throw ParseError(line_no, "transition '" + tname + "' is uncontrollable");
    }
    if (controller.guards.count(*t)) throw ParseError(line_no, "duplicate guard for '" + tname + "'");

    Guard g{*t, Polarity::kFree, {}};
    if (pol == "FREE") {
      if (!body.empty()) throw ParseError(line_no, "FREE guard takes no terms");
    } else if (pol == "FORBID" || pol == "ENABLE") {
      g.polarity = pol == "FORBID" ? Polarity::kForbid : Polarity::kEnable;
      if (body.empty()) throw ParseError(line_no, pol + " guard needs at least one term");
      std::size_t bpos = 0;
      while (bpos <= body.size()) {
        const auto bar = body.find('|', bpos);
        g.terms.push_back(parse_term(
            std::string_view(body).substr(bpos, bar == std::string::npos ? bar : bar - bpos), net,
            line_no));
        bpos = bar == std::string::npos ? body.size() + 1 : bar + 1;
      }
    } else {
      throw ParseError(line_no, "unknown polarity '" + pol + "'");
    }
    controller.guards.emplace(*t, std::move(g));
  }
  for (const TransitionId t : net.controllable_transitions()) {
    controller.guards.try_emplace(t, free_guard(t));
  }
  return controller;
}

Controller load_guards(const std::string& path, const PetriNet& net) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_guards(buf.str(), net);
}

}  // namespace pnsup
