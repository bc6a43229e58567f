// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "imnet/ast.hpp"
#include "imnet/fabric.hpp"
#include "imnet/state.hpp"

namespace imnet {

// Event transformers. All are pure over gamma; any failure aborts the
// whole transformer. Error messages name the offending element index.

Event eval_lift(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env);
Event eval_apply_left(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env);
Event eval_apply_right(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env);
Event eval_merge(std::string_view x1, std::string_view x2, const VariableState& gamma);
Event eval_filter(std::string_view x, const ast::Lambda& p, const VariableState& gamma, const FabricView& env);

/// n copies of the value x denotes. x must hold a one-element event (its
/// element is used) or a rule list.
Event eval_once(std::string_view x, std::uint64_t n, const VariableState& gamma);

Event eval_mix_fst(const ValueSet& seed, std::string_view x1, std::string_view x2, const VariableState& gamma);
Event eval_mix_snd(const ValueSet& seed, std::string_view x1, std::string_view x2, const VariableState& gamma);

/// (SwitchId, Port, Packet) triples to (id, [(exact pattern of pk, [sendout(pr)])]).
InitialRuleAssignment eval_mak_forw_rule(std::string_view x, const VariableState& gamma);

/// (Pattern, action or constructor, argument or _) triples to rules.
RuleList eval_make_rule(std::string_view x, const VariableState& gamma);

Binding eval_transformer(const ast::EventTransformer& et, const VariableState& gamma, const FabricView& env);

}  // namespace imnet
