#include "pnsup/net.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pnsup/errors.hpp"

namespace pnsup {

bool LinearConstraint::satisfied_by(const Marking& m) const {
  if (coefficients.size() != m.size()) {
    throw std::invalid_argument("linear constraint dimension mismatch");
  }
  std::int64_t lhs = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    lhs += coefficients[p] * static_cast<std::int64_t>(m[p]);
  }
  return lhs <= bound;
}

bool ForbiddenSpec::forbids(const Marking& m) const {
  for (const auto& c : linear_constraints) {
    if (!c.satisfied_by(m)) return true;
  }
  return std::find(explicit_markings.begin(), explicit_markings.end(), m) !=
         explicit_markings.end();
}

PetriNet::PetriNet(std::string name, std::vector<Place> places,
                   std::vector<Transition> transitions, std::vector<std::vector<TokenCount>> pre,
                   std::vector<std::vector<TokenCount>> post)
    : name_(std::move(name)),
      places_(std::move(places)),
      transitions_(std::move(transitions)),
      pre_(std::move(pre)),
      post_(std::move(post)) {
  if (places_.empty()) throw std::invalid_argument("net needs at least one place");
  if (transitions_.empty()) throw std::invalid_argument("net needs at least one transition");
  if (pre_.size() != places_.size() ||
      std::any_of(pre_.begin(), pre_.end(),
                  [&](const auto& row) { return row.size() != transitions_.size(); })) {
    throw std::invalid_argument("pre matrix must be places x transitions");
  }
  if (post_.size() != transitions_.size() ||
      std::any_of(post_.begin(), post_.end(),
                  [&](const auto& row) { return row.size() != places_.size(); })) {
    throw std::invalid_argument("post matrix must be transitions x places");
  }
  place_names_.reserve(places_.size());
  for (const auto& p : places_) place_names_.push_back(p.name);
}

Marking PetriNet::initial_marking() const {
  Marking m(places_.size());
  for (std::size_t p = 0; p < places_.size(); ++p) m[p] = places_[p].initial;
  return m;
}

std::optional<PlaceId> PetriNet::find_place(std::string_view name) const {
  for (std::size_t p = 0; p < places_.size(); ++p) {
    if (places_[p].name == name) return p;
  }
  return std::nullopt;
}

std::optional<TransitionId> PetriNet::find_transition(std::string_view name) const {
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    if (transitions_[t].name == name) return t;
  }
  return std::nullopt;
}

std::vector<TransitionId> PetriNet::controllable_transitions() const {
  std::vector<TransitionId> out;
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    if (transitions_[t].controllable) out.push_back(t);
  }
  return out;
}

bool PetriNet::is_enabled(const Marking& m, TransitionId t) const {
  if (m.size() != places_.size()) throw std::invalid_argument("marking dimension mismatch");
  for (std::size_t p = 0; p < places_.size(); ++p) {
    if (m[p] < pre_[p][t]) return false;
  }
  return true;
}

std::vector<TransitionId> PetriNet::enabled(const Marking& m) const {
  std::vector<TransitionId> out;
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    if (is_enabled(m, t)) out.push_back(t);
  }
  return out;
}

Marking PetriNet::fire(const Marking& m, TransitionId t) const {
  if (!is_enabled(m, t)) {
    throw std::logic_error("transition " + transitions_.at(t).name + " is not enabled");
  }
  Marking next = m;
  for (std::size_t p = 0; p < places_.size(); ++p) next[p] = m[p] - pre_[p][t] + post_[t][p];
  return next;
}

Marking PetriNet::unfire(const Marking& m, TransitionId t) const {
  Marking prev = m;
  for (std::size_t p = 0; p < places_.size(); ++p) {
    if (m[p] < post_[t][p]) {
      throw std::logic_error("transition " + transitions_.at(t).name + " cannot be reversed");
    }
    prev[p] = m[p] - post_[t][p] + pre_[p][t];
  }
  return prev;
}

// Parser --------------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

template <typename Int>
Int parse_int(const std::string& s, std::size_t line, const char* what) {
  Int value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  }
  return value;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

struct PendingArc {
  std::string from, to;
  TokenCount weight;
  std::size_t line;
};

struct PendingLinear {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  std::int64_t bound;
  std::size_t line;
};

struct PendingMarking {
  std::vector<std::pair<std::string, TokenCount>> entries;
  std::size_t line;
};

PendingLinear parse_linear(const std::vector<std::string>& tok, std::size_t line) {
  // tok[0] == "forbid", tok[1] == "linear"
  PendingLinear out{{}, 0, line};
  std::size_t i = 2;
  std::int64_t sign = 1;
  bool expect_term = true;
  for (; i < tok.size(); ++i) {
    const std::string& s = tok[i];
    if (s == "<=") break;
    if (expect_term) {
      if (s == "-" && out.terms.empty()) {
        sign = -1;
        continue;
      }
      std::int64_t coeff = 1;
      std::string place = s;
      if (const auto star = s.find('*'); star != std::string::npos) {
        coeff = parse_int<std::int64_t>(s.substr(0, star), line, "coefficient");
        place = s.substr(star + 1);
      } else if (!s.empty() && s[0] == '-') {
        coeff = -1;
        place = s.substr(1);
      }
      if (!valid_identifier(place)) throw ParseError(line, "bad term '" + s + "'");
      out.terms.emplace_back(sign * coeff, place);
      sign = 1;
      expect_term = false;
    } else {
      if (s == "+") {
        sign = 1;
      } else if (s == "-") {
        sign = -1;
      } else {
        throw ParseError(line, "expected '+', '-' or '<=', got '" + s + "'");
      }
      expect_term = true;
    }
  }
  if (out.terms.empty() || expect_term) throw ParseError(line, "incomplete linear constraint");
  if (i + 2 != tok.size()) throw ParseError(line, "expected '<= <bound>' at end of constraint");
  out.bound = parse_int<std::int64_t>(tok[i + 1], line, "bound");
  return out;
}

}  // namespace

NetDocument parse_net(std::string_view text) {
  std::string name = "net";
  bool have_name = false;
  std::vector<Place> places;
  std::vector<Transition> transitions;
  std::map<std::string, std::size_t, std::less<>> place_index, trans_index;
  std::vector<PendingArc> arcs;
  std::vector<PendingLinear> linear;
  std::vector<PendingMarking> markings;
  bool forbid_deadlocks = false;

  auto check_new_name = [&](const std::string& id, std::size_t line) {
    if (!valid_identifier(id)) throw ParseError(line, "invalid identifier '" + id + "'");
    if (place_index.count(id) || trans_index.count(id)) {
      throw ParseError(line, "duplicate name '" + id + "'");
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "net") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'net <name>'");
      if (have_name) throw ParseError(line_no, "duplicate 'net' declaration");
      name = tok[1];
      have_name = true;
    } else if (kw == "place") {
      if (tok.size() != 2 && !(tok.size() == 4 && tok[2] == "init")) {
        throw ParseError(line_no, "expected 'place <id> [init <n>]'");
      }
      check_new_name(tok[1], line_no);
      TokenCount init = tok.size() == 4 ? parse_int<TokenCount>(tok[3], line_no, "token count") : 0;
      place_index[tok[1]] = places.size();
      places.push_back({tok[1], init});
    } else if (kw == "trans") {
      const bool ok_shape = tok.size() == 3 || (tok.size() == 5 && tok[3] == "event");
      if (!ok_shape || (tok[2] != "ctrl" && tok[2] != "unctrl")) {
        throw ParseError(line_no, "expected 'trans <id> ctrl|unctrl [event <label>]'");
      }
      check_new_name(tok[1], line_no);
      trans_index[tok[1]] = transitions.size();
      transitions.push_back({tok[1], tok[2] == "ctrl", tok.size() == 5 ? tok[4] : std::string{}});
    } else if (kw == "arc") {
      if (tok.size() != 3 && tok.size() != 4) {
        throw ParseError(line_no, "expected 'arc <from> <to> [<weight>]'");
      }
      TokenCount w = tok.size() == 4 ? parse_int<TokenCount>(tok[3], line_no, "arc weight") : 1;
      if (w == 0) throw ParseError(line_no, "arc weight must be positive");
      arcs.push_back({tok[1], tok[2], w, line_no});
    } else if (kw == "forbid") {
      if (tok.size() < 2) throw ParseError(line_no, "expected 'forbid linear|marking|deadlock'");
      if (tok[1] == "linear") {
        linear.push_back(parse_linear(tok, line_no));
      } else if (tok[1] == "marking") {
        PendingMarking pm{{}, line_no};
        for (std::size_t i = 2; i < tok.size(); ++i) {
          const auto colon = tok[i].find(':');
          if (colon == std::string::npos) {
            throw ParseError(line_no, "expected '<place>:<n>', got '" + tok[i] + "'");
          }
          pm.entries.emplace_back(
              tok[i].substr(0, colon),
              parse_int<TokenCount>(tok[i].substr(colon + 1), line_no, "token count"));
        }
        markings.push_back(std::move(pm));
      } else if (tok[1] == "deadlock") {
        if (tok.size() != 2) throw ParseError(line_no, "unexpected tokens after 'forbid deadlock'");
        forbid_deadlocks = true;
      } else {
        throw ParseError(line_no, "unknown forbid kind '" + tok[1] + "'");
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + kw + "'");
    }
  }

  if (places.empty()) throw ParseError(line_no, "no places declared");
  if (transitions.empty()) throw ParseError(line_no, "no transitions declared");
  if (std::all_of(places.begin(), places.end(), [](const Place& p) { return p.initial == 0; })) {
    throw ParseError(line_no, "initial marking has no tokens");
  }

  std::vector<std::vector<TokenCount>> pre(places.size(),
                                           std::vector<TokenCount>(transitions.size(), 0));
  std::vector<std::vector<TokenCount>> post(transitions.size(),
                                            std::vector<TokenCount>(places.size(), 0));
  for (const auto& a : arcs) {
    const auto fp = place_index.find(a.from), ft = trans_index.find(a.from);
    const auto tp = place_index.find(a.to), tt = trans_index.find(a.to);
    if (fp != place_index.end() && tt != trans_index.end()) {
      auto& w = pre[fp->second][tt->second];
      if (w != 0) throw ParseError(a.line, "duplicate arc " + a.from + " -> " + a.to);
      w = a.weight;
    } else if (ft != trans_index.end() && tp != place_index.end()) {
      auto& w = post[ft->second][tp->second];
      if (w != 0) throw ParseError(a.line, "duplicate arc " + a.from + " -> " + a.to);
      w = a.weight;
    } else {
      const bool from_known = fp != place_index.end() || ft != trans_index.end();
      const bool to_known = tp != place_index.end() || tt != trans_index.end();
      if (!from_known) throw ParseError(a.line, "arc references unknown node '" + a.from + "'");
      if (!to_known) throw ParseError(a.line, "arc references unknown node '" + a.to + "'");
      throw ParseError(a.line, "arc must connect a place and a transition");
    }
  }

  ForbiddenSpec spec;
  spec.forbid_deadlocks = forbid_deadlocks;
  for (const auto& l : linear) {
    LinearConstraint c{std::vector<std::int64_t>(places.size(), 0), l.bound};
    for (const auto& [coeff, pname] : l.terms) {
      const auto it = place_index.find(pname);
      if (it == place_index.end()) throw ParseError(l.line, "unknown place '" + pname + "'");
      c.coefficients[it->second] += coeff;
    }
    spec.linear_constraints.push_back(std::move(c));
  }
  for (const auto& pm : markings) {
    Marking m(places.size());
    for (const auto& [pname, n] : pm.entries) {
      const auto it = place_index.find(pname);
      if (it == place_index.end()) throw ParseError(pm.line, "unknown place '" + pname + "'");
      m[it->second] = n;
    }
    spec.explicit_markings.push_back(std::move(m));
  }

  return NetDocument{PetriNet(std::move(name), std::move(places), std::move(transitions),
                              std::move(pre), std::move(post)),
                     std::move(spec)};
}

NetDocument load_net(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_net(buf.str());
}

std::string render_net(const PetriNet& net, const ForbiddenSpec& spec) {
  std::ostringstream out;
  out << "net " << net.name() << '\n';
  for (const auto& p : net.places()) {
    out << "place " << p.name;
    if (p.initial != 0) out << " init " << p.initial;
    out << '\n';
  }
  for (const auto& t : net.transitions()) {
    out << "trans " << t.name << (t.controllable ? " ctrl" : " unctrl");
    if (!t.event.empty()) out << " event " << t.event;
    out << '\n';
  }
  auto weight_suffix = [](TokenCount w) { return w == 1 ? std::string{} : " " + std::to_string(w); };
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      if (const auto w = net.pre(p, t); w != 0) {
        out << "arc " << net.place(p).name << ' ' << net.transition(t).name << weight_suffix(w)
            << '\n';
      }
    }
    for (std::size_t p = 0; p < net.num_places(); ++p) {
      if (const auto w = net.post(t, p); w != 0) {
        out << "arc " << net.transition(t).name << ' ' << net.place(p).name << weight_suffix(w)
            << '\n';
      }
    }
  }
  for (const auto& c : spec.linear_constraints) {
    out << "forbid linear";
    bool first = true;
    for (std::size_t p = 0; p < c.coefficients.size(); ++p) {
      const auto a = c.coefficients[p];
      if (a == 0) continue;
      if (first) {
        out << ' ' << a << '*' << net.place(p).name;
      } else {
        out << (a < 0 ? " - " : " + ") << (a < 0 ? -a : a) << '*' << net.place(p).name;
      }
      first = false;
    }
    if (first) out << " 0*" << net.place(0).name;
    out << " <= " << c.bound << '\n';
  }
  for (const auto& m : spec.explicit_markings) {
    out << "forbid marking";
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (m[p] != 0) out << ' ' << net.place(p).name << ':' << m[p];
    }
    out << '\n';
  }
  if (spec.forbid_deadlocks) out << "forbid deadlock\n";
  return out.str();
}

}  // namespace pnsup
