#include "prismcurv/contact_stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "prismcurv/errors.hpp"
#include "prismcurv/format.hpp"

namespace prismcurv {

namespace {

bool event_less(const ContactEvent& a, const ContactEvent& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view field, T& value) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

ContactSequence ContactSequence::from_events(std::vector<ContactEvent> events, bool binned) {
  for (auto& e : events) {
    if (e.i == e.j) throw DomainError("self-contact on node " + std::to_string(e.i));
    if (!std::isfinite(e.t)) throw DomainError("non-finite contact time");
    if (e.t < 0) throw DomainError("negative contact time");
    if (binned && e.t != std::floor(e.t)) throw DomainError("binned sequence with non-integer time");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(events.begin(), events.end(), event_less);
  events.erase(std::unique(events.begin(), events.end()), events.end());

  ContactSequence seq;
  seq.binned_ = binned;
  for (const auto& e : events) {
    if (seq.active_times_.empty() || seq.active_times_.back() != e.t) seq.active_times_.push_back(e.t);
    seq.nodes_.insert(e.i);
    seq.nodes_.insert(e.j);
  }
  seq.events_ = std::move(events);
  return seq;
}

std::vector<double> ContactSequence::active_times_of(NodeId v) const {
  std::vector<double> out;
  for (const auto& e : events_) {
    if ((e.i == v || e.j == v) && (out.empty() || out.back() != e.t)) out.push_back(e.t);
  }
  return out;
}

ContactSequence parse_contacts(std::istream& in) {
  std::vector<ContactEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 3) throw ParseError(lineno, "expected `t i j`, got " + std::to_string(fields.size()) + " field(s)");

    ContactEvent e;
    if (!parse_number(fields[0], e.t)) throw ParseError(lineno, "non-numeric time '" + std::string(fields[0]) + "'");
    if (!parse_number(fields[1], e.i)) throw ParseError(lineno, "bad node id '" + std::string(fields[1]) + "'");
    if (!parse_number(fields[2], e.j)) throw ParseError(lineno, "bad node id '" + std::string(fields[2]) + "'");
    if (!std::isfinite(e.t)) throw ParseError(lineno, "non-finite time");
    if (e.t < 0) throw DomainError("line " + std::to_string(lineno) + ": negative time");
    if (e.i == e.j) throw SelfLoopError(lineno, "self-contact on node " + std::to_string(e.i));
    events.push_back(e);
  }
  return ContactSequence::from_events(std::move(events));
}

ContactSequence parse_contacts(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_contacts(in);
}

ContactSequence read_contacts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open contact file: " + path);
  return parse_contacts(in);
}

void write_contacts(std::ostream& out, const ContactSequence& seq) {
  for (const auto& e : seq.events()) {
    if (seq.is_binned())
      out << ContactSequence::slice_of(e.t);
    else
      out << format_double(e.t);
    out << ' ' << e.i << ' ' << e.j << '\n';
  }
}

std::string serialize_contacts(const ContactSequence& seq) {
  std::ostringstream out;
  write_contacts(out, seq);
  return out.str();
}

ContactSequence bin(const ContactSequence& seq, double bin_width) {
  if (!(bin_width > 0) || !std::isfinite(bin_width)) throw DomainError("bin width must be positive and finite");
  std::vector<ContactEvent> events;
  events.reserve(seq.size());
  for (auto e : seq.events()) {
    e.t = std::floor(e.t / bin_width);
    events.push_back(e);
  }
  return ContactSequence::from_events(std::move(events), true);
}

ContactSequence window(const ContactSequence& seq, double t_start, double t_end) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw DomainError("window bounds must be finite");
  if (!(t_start < t_end)) throw DomainError("window requires t_start < t_end");
  std::vector<ContactEvent> events;
  for (auto e : seq.events()) {
    if (e.t >= t_start && e.t < t_end) {
      e.t -= t_start;
      events.push_back(e);
    }
  }
  const bool keeps_slices = seq.is_binned() && t_start == std::floor(t_start);
  return ContactSequence::from_events(std::move(events), keeps_slices);
}

}  // namespace prismcurv
