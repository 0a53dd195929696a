#pragma once

#include <optional>
#include <string>

#include "chainmail/family.hpp"
#include "chainmail/graph.hpp"
#include "chainmail/tait.hpp"

namespace chainmail {

// All builders return versioned, byte-stable plain text ("chainmail report
// v1: ..."), suitable for golden files and re-run comparisons.

std::string analyze_report(const ChainmailGraph& g);

std::string family_report(const ChainmailGraph& g, const std::string& pivot,
                          unsigned long n_max, bool* all_pass);

// Certificate text plus the threshold N in decimal.
std::string certify_report(const ChainmailGraph& g, const std::string& pivot,
                           std::string* n_decimal);

std::string tait_report(const std::string& pd_text, FaceColor outer,
                        const std::optional<std::string>& root_override,
                        std::string* tait_json, std::string* reduced_json);

// Without a pivot: one certificate for the graph itself. With a pivot: one
// certificate per family member n in [n_from, n_to].
std::string pi1_report(const ChainmailGraph& g, const std::string& kill,
                       const std::optional<std::string>& pivot, unsigned long n_from,
                       unsigned long n_to, bool* all_valid);

std::string prospect_report(const ProspectOptions& opts, bool* partial);

}  // namespace chainmail
