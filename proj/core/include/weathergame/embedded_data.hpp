#pragma once

#include <string_view>

// Default data tables compiled into the library from core/data.
namespace weathergame::embedded {

std::string_view wmo_lexicon_tsv();
std::string_view natural_rules_tsv();
std::string_view numeracy_bank_json();

}  // namespace weathergame::embedded
