#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prismcurv {

using NodeId = std::uint64_t;

/// One undirected contact. After canonicalization `i < j`.
struct ContactEvent {
  NodeId i = 0;
  NodeId j = 0;
  double t = 0.0;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

/// Ordered, deduplicated contact sequence.
///
/// Events are sorted by (t, i, j). `active_times()` is the strictly increasing
/// list of distinct event times; once the sequence has been binned these are
/// integer slice indices and `is_binned()` is true.
class ContactSequence {
 public:
  ContactSequence() = default;

  /// Canonicalizes (i < j), sorts and deduplicates. Throws DomainError on
  /// self-contacts, negative or non-finite times.
  static ContactSequence from_events(std::vector<ContactEvent> events, bool binned = false);

  const std::vector<ContactEvent>& events() const noexcept { return events_; }
  const std::vector<double>& active_times() const noexcept { return active_times_; }
  const std::set<NodeId>& nodes() const noexcept { return nodes_; }
  bool is_binned() const noexcept { return binned_; }
  bool empty() const noexcept { return events_.empty(); }
  std::size_t size() const noexcept { return events_.size(); }

  /// Times at which node `v` takes part in a contact.
  std::vector<double> active_times_of(NodeId v) const;

  /// Integer slice value of a binned sequence's time.
  static std::int64_t slice_of(double t) { return static_cast<std::int64_t>(t); }

 private:
  std::vector<ContactEvent> events_;
  std::vector<double> active_times_;
  std::set<NodeId> nodes_;
  bool binned_ = false;
};

/// Reads whitespace-separated `t i j` lines. `#` lines and blank lines are
/// skipped, extra trailing columns are ignored.
ContactSequence parse_contacts(std::istream& in);
ContactSequence parse_contacts(std::string_view text);
ContactSequence read_contacts_file(const std::string& path);

/// Writes `t i j` lines in event order. Binned times are written as integers.
void write_contacts(std::ostream& out, const ContactSequence& seq);
std::string serialize_contacts(const ContactSequence& seq);

/// Replaces every time by floor(t / bin_width) and collapses duplicates.
ContactSequence bin(const ContactSequence& seq, double bin_width);

/// Keeps events with t_start <= t < t_end, shifted so the window starts at 0.
ContactSequence window(const ContactSequence& seq, double t_start, double t_end);

}  // namespace prismcurv
