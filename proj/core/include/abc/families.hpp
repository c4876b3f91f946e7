#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "abc/graph.hpp"

namespace abc {

/// Declarative constructor for the named graph families.
///
/// Labeling conventions (fixed so Perron components can be addressed by
/// structural role):
///   star        center 0, leaves 1..n-1
///   path        0..n-1 along the path
///   cycle       0..n-1 around the cycle
///   complete    any
///   double_star centers 0 (a leaves: 2..a+1) and 1 (b leaves: a+2..n-1)
///   t_tree      max-degree center 0; branch vertices follow the leaves
///   paths_attached / stars_attached: see attach_paths / attach_stars
struct FamilySpec {
    enum class Tag {
        star,
        path,
        cycle,
        complete,
        double_star,
        t_tree,
        paths_attached,
        stars_attached,
    };

    Tag tag = Tag::star;
    int a = 0;       // n for star/path/cycle/complete; a for double_star;
                     // tree index for t_tree; k for attached families
    int b = 0;       // b for double_star; n for t_tree; l for attached families
    int anchor = 0;  // v0 / w for attached families
    std::shared_ptr<const FamilySpec> base;  // attached families only

    static FamilySpec star(int n);
    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec complete(int n);
    static FamilySpec double_star(int a, int b);
    static FamilySpec t_tree(int index, int n);
    static FamilySpec paths_attached(FamilySpec base, int v0, int k, int l);
    static FamilySpec stars_attached(FamilySpec base, int w, int k, int l);

    /// Colon mini-language: star:N path:N cycle:N complete:N dstar:A:B
    /// t:I:N gkl:<base>:<v0>:<k>:<l> g1kl:<base>:<w>:<k>:<l>
    static FamilySpec parse(std::string_view text);

    std::string to_string() const;

    /// Throws parameter_error naming the violated constraint.
    void validate() const;

    /// Order of the resulting graph.
    int order() const;
};

Graph build_family(const FamilySpec& spec);

}  // namespace abc
