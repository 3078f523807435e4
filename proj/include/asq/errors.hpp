#pragma once

#include <stdexcept>
#include <string>

namespace asq {

enum class errc {
  invalid_poset,
  incomparable_elements,
  not_forest,
  not_thin_forest,
  index_out_of_range,
  not_an_occurrence,
  arity_mismatch,
  budget_exceeded,
  not_terminating,
  not_a_normal_form,
  not_a_morphism,
  not_q_associative,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_poset: return "invalid_poset";
    case errc::incomparable_elements: return "incomparable_elements";
    case errc::not_forest: return "not_forest";
    case errc::not_thin_forest: return "not_thin_forest";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::not_an_occurrence: return "not_an_occurrence";
    case errc::arity_mismatch: return "arity_mismatch";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::not_terminating: return "not_terminating";
    case errc::not_a_normal_form: return "not_a_normal_form";
    case errc::not_a_morphism: return "not_a_morphism";
    case errc::not_q_associative: return "not_q_associative";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace asq
