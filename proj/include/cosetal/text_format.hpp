#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetal/cohomology.hpp"

namespace cosetal {

/// Stanza-based text input.
///
///   monoid <name> <size> <identity>      size rows of size integers
///   group <name> <size> <identity>       same, validated as an abelian group
///   hom <name> <dom> <cod>               one row of |dom| integers
///   extension <name>                     lines: kernel/total/quotient <monoid>,
///                                        k/e <hom>
///   partition <name> <N-size> <H-size>   one row of N*H class ids
///   action <name>                        H rows of N integers
///   factorset <name>                     H rows of H integers
///
/// `#` starts a comment line. A stanza body runs until the next header.
class Workspace {
 public:
  struct Location {
    std::string source;
    std::size_t line = 0;
  };
  struct HomEntry {
    std::string domain;
    std::string codomain;
    MonoidHom hom;
  };
  struct ExtensionEntry {
    std::string kernel;
    std::string total;
    std::string quotient;
    std::string k;
    std::string e;
    Location where;
  };

  /// Every lookup throws UnknownName for a missing name.
  const FiniteMonoid& monoid(const std::string& name) const;
  /// The monoid stanza validated as an abelian group.
  FiniteAbelianGroup group(const std::string& name) const;
  const HomEntry& hom(const std::string& name) const;
  const ExtensionEntry& extension(const std::string& name) const;
  const PairPartition& partition(const std::string& name) const;
  const ActionTable& action(const std::string& name) const;
  const FactorTable& factor_set(const std::string& name) const;

  /// Resolves the five references and validates the kernel half of the
  /// diagram. The cokernel condition is left to the caller.
  KernelDiagram kernel_diagram(const std::string& name) const;
  /// As kernel_diagram, plus the cokernel certificate.
  ExtensionDiagram extension_diagram(const std::string& name) const;

  const std::map<std::string, FiniteMonoid>& monoids() const noexcept { return monoids_; }
  const std::map<std::string, HomEntry>& homs() const noexcept { return homs_; }
  const std::map<std::string, ExtensionEntry>& extensions() const noexcept { return extensions_; }
  const std::map<std::string, PairPartition>& partitions() const noexcept { return partitions_; }
  const std::map<std::string, ActionTable>& actions() const noexcept { return actions_; }
  const std::map<std::string, FactorTable>& factor_sets() const noexcept { return factor_sets_; }

 private:
  friend Workspace parse_workspace(const std::vector<std::pair<std::string, std::string>>&);

  std::map<std::string, FiniteMonoid> monoids_;
  std::map<std::string, HomEntry> homs_;
  std::map<std::string, ExtensionEntry> extensions_;
  std::map<std::string, PairPartition> partitions_;
  std::map<std::string, ActionTable> actions_;
  std::map<std::string, FactorTable> factor_sets_;
};

/// Parses (source name, text) pairs as one workspace; homs may refer to
/// monoids from any of the inputs. Errors: ParseError (message carries
/// source:line, witness the line), DuplicateName, UnknownName, and the
/// validation errors of the stanza contents.
Workspace parse_workspace(const std::vector<std::pair<std::string, std::string>>& sources);
Workspace parse_workspace(std::string_view text, const std::string& source = "<input>");
/// Errors: ParseError when a file cannot be read.
Workspace load_workspace(const std::vector<std::string>& paths);

std::string emit_monoid(const std::string& name, const FiniteMonoid& m);
std::string emit_group(const std::string& name, const FiniteAbelianGroup& n);
std::string emit_hom(const std::string& name, const std::string& domain,
                     const std::string& codomain, const MonoidHom& f);
std::string emit_partition(const std::string& name, const PairPartition& e);
std::string emit_action(const std::string& name, const ActionTable& phi);
std::string emit_factor_set(const std::string& name, const FactorTable& g);

/// `<name>_G`, `<name>_k`, `<name>_e` and the extension stanza itself,
/// referring to existing kernel and quotient stanzas.
std::string emit_extension(const std::string& name, const std::string& kernel,
                           const std::string& quotient, const KernelDiagram& d);

}  // namespace cosetal
