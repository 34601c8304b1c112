#include "gring/report.hpp"

#include <sstream>

namespace gring {

namespace {

std::string members_csv(const ElementSet& s) {
  std::ostringstream os;
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) os << ',';
    first = false;
    os << e;
  });
  return os.str();
}

std::string flags_csv(const IdealFlags& f) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](bool b, const char* name) {
    if (!b) return;
    if (!first) os << ',';
    first = false;
    os << name;
  };
  put(f.is_additive_subgroup, "subgroup");
  put(f.is_right_ideal, "right");
  put(f.is_twosided, "twosided");
  put(f.is_graded, "graded");
  put(f.is_proper, "proper");
  put(f.is_idempotent, "idempotent");
  return os.str();
}

std::string witness_field(const Verdict& v) {
  if (v.value) return "";
  std::ostringstream os;
  if (v.ideal_pair)
    os << members_csv(v.ideal_pair->first) << '|' << members_csv(v.ideal_pair->second);
  else if (v.element_pair)
    os << v.element_pair->first << '|' << v.element_pair->second;
  else if (v.colon_element)
    os << *v.colon_element;
  return os.str();
}

std::string witness_text(const Verdict& v) {
  if (v.value) return "";
  std::ostringstream os;
  if (v.ideal_pair)
    os << "  witness X=" << v.ideal_pair->first.to_string()
       << " Y=" << v.ideal_pair->second.to_string();
  else if (v.element_pair)
    os << "  witness x=" << v.element_pair->first << " y=" << v.element_pair->second;
  else if (v.colon_element)
    os << "  witness x=" << *v.colon_element
       << (v.detail.empty() ? "" : " (" + v.detail + ")");
  return os.str();
}

}  // namespace

std::string render_classification_text(const std::string& name, const GradedRing& gr,
                                        const ClassificationReport& rep) {
  std::ostringstream os;
  os << "ring " << name << "  order=" << gr.order() << "  group=" << gr.group_order()
     << "  unity=";
  if (gr.ring().has_unity())
    os << *gr.ring().unity();
  else
    os << "none";
  os << "\n";
  os << "proper graded right ideals: " << rep.ideals.size() << "\n";
  for (const IdealReport& ir : rep.ideals) {
    os << "  " << ir.ideal.to_string() << "\n";
    os << "    flags: " << flags_csv(ir.flags) << "\n";
    os << "    prime=" << (ir.prime.value ? "yes" : "no") << witness_text(ir.prime)
       << "\n";
    os << "    weakly-prime=" << (ir.weakly_prime.value ? "yes" : "no")
       << witness_text(ir.weakly_prime) << "\n";
    os << "    almost-prime=" << (ir.almost_prime.value ? "yes" : "no")
       << witness_text(ir.almost_prime) << "\n";
  }
  os << "proper right ideals that are not graded: " << rep.non_graded_right_ideals.size()
     << "\n";
  for (const ElementSet& s : rep.non_graded_right_ideals)
    os << "  " << s.to_string() << "\n";
  os << "all graded right ideals almost prime: " << (rep.all_almost_prime ? "yes" : "no")
     << "\n";
  return os.str();
}

std::string render_classification_machine(const std::string& name, const GradedRing& gr,
                                          const ClassificationReport& rep) {
  std::ostringstream os;
  os << "ring\t" << name << "\torder=" << gr.order() << "\tgroup=" << gr.group_order()
     << "\tunity=";
  if (gr.ring().has_unity())
    os << *gr.ring().unity();
  else
    os << "none";
  os << "\n";
  for (const IdealReport& ir : rep.ideals) {
    os << "ideal\t" << members_csv(ir.ideal) << "\tflags=" << flags_csv(ir.flags)
       << "\tprime=" << ir.prime.value << "\tweakly=" << ir.weakly_prime.value
       << "\talmost=" << ir.almost_prime.value;
    if (!ir.prime.value) os << "\tprime_witness=" << witness_field(ir.prime);
    if (!ir.weakly_prime.value)
      os << "\tweakly_witness=" << witness_field(ir.weakly_prime);
    if (!ir.almost_prime.value)
      os << "\talmost_witness=" << witness_field(ir.almost_prime);
    os << "\n";
  }
  for (const ElementSet& s : rep.non_graded_right_ideals)
    os << "nongraded\t" << members_csv(s) << "\n";
  os << "summary\tideals=" << rep.ideals.size()
     << "\tnongraded=" << rep.non_graded_right_ideals.size()
     << "\tall_almost_prime=" << rep.all_almost_prime << "\n";
  return os.str();
}

std::string render_ideal_list(const std::vector<ElementSet>& ideals) {
  std::ostringstream os;
  for (const ElementSet& s : ideals) os << members_csv(s) << "\n";
  return os.str();
}

std::string render_audit_line(const AuditResult& result) {
  std::ostringstream os;
  os << "audit\t" << result.theorem << "\tstatus=" << (result.passed() ? "pass" : "FAIL")
     << "\tchecked=" << result.checked << "\tskipped=" << result.skipped;
  os << "\n";
  for (const std::string& note : result.notes) os << "  note: " << note << "\n";
  for (const AuditCounterexample& cx : result.counterexamples)
    os << "  counterexample: " << cx.description << "\n";
  return os.str();
}

}  // namespace gring
