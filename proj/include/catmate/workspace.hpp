#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"
#include "catmate/derived.hpp"
#include "catmate/localization.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmate {

// Entities of one kind in declaration order.
template <class T>
struct Named {
    std::vector<std::string> order;
    std::map<std::string, T> items;

    bool has(const std::string& name) const { return items.count(name) != 0; }
    const T& at(const std::string& name) const { return items.at(name); }
    void add(const std::string& name, T value) {
        order.push_back(name);
        items.emplace(name, std::move(value));
    }
    std::size_t size() const { return order.size(); }
};

struct RetractionEntry {
    std::string relcat;
    RetractionSide side = RetractionSide::Left;
    std::vector<std::string> sub;
    std::vector<std::pair<std::string, std::string>> Q;  // objects and morphisms
    std::vector<std::pair<std::string, std::string>> q;
    DeformationRetraction ret;
};

struct Workspace {
    Named<CatPtr> categories;
    Named<RelCat> relcats;
    Named<Functor> functors;
    Named<NatTrans> nats;
    Named<Adjunction> adjunctions;
    Named<RetractionEntry> retractions;
};

// Line-oriented format with '#' comments:
//   category <name> / object <id> / morphism <id> : <dom> -> <cod> /
//     compose <g> . <f> = <h> / end
//   relcat <name> from <category> / weq <mor> / end
//   functor <name> : <src> -> <tgt> / obj <a> |-> <x> / mor <f> |-> <g> / end
//   nat <name> : <F> => <G> / at <obj> = <mor> / end
//   adjunction <name> = <F> -| <G> unit <nat> counit <nat>
//   retraction <name> on <relcat> [left|right] sub <obj>... Q { a |-> b ; f |-> g } q { a = <mor> }
// Identities id_<obj> and their composites are added unless declared, and
// functors send identities to identities unless told otherwise. Entities
// are appended to ws; names must be new.
void parse_into(Workspace& ws, std::string_view text);
Workspace parse(std::string_view text);

std::string serialize(const Workspace& ws);
std::string serialize_category(const FinCat& c);

// Same names per kind and extensionally equal entities.
bool equivalent(const Workspace& a, const Workspace& b, std::string* witness = nullptr);

// A relative category by name, or a category with W = isos.
RelCat relcat_named(const Workspace& ws, const std::string& name);

} // namespace catmate
