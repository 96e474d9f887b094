//! Builtin catalog of spaces with frozen expected properties.

use serde::{Deserialize, Serialize};

use crate::order::FinitePoset;
use crate::space::SpaceExpr;

/// Properties a space is asserted to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub finite: bool,
    pub noetherian: bool,
    pub inverse_noetherian: bool,
    pub weakly_noetherian: bool,
    /// Number of radical ideals, when finite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_ideals: Option<u128>,
}

impl Expected {
    fn finite(count: u128) -> Self {
        Self {
            finite: true,
            noetherian: true,
            inverse_noetherian: true,
            weakly_noetherian: true,
            radical_ideals: Some(count),
        }
    }

    fn infinite(noetherian: bool, inverse_noetherian: bool, weakly_noetherian: bool) -> Self {
        Self {
            finite: false,
            noetherian,
            inverse_noetherian,
            weakly_noetherian,
            radical_ideals: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub expr: SpaceExpr,
    pub expected: Expected,
}

fn poset(elements: &[&str], covers: &[(&str, &str)]) -> FinitePoset {
    FinitePoset::build(elements, covers).expect("catalog posets are valid")
}

pub fn point() -> FinitePoset {
    poset(&["a"], &[])
}

pub fn antichain2() -> FinitePoset {
    poset(&["a", "b"], &[])
}

pub fn chain(n: usize) -> FinitePoset {
    let labels = crate::verify::posets::letter_labels(n);
    let names: Vec<&str> = labels.iter().map(String::as_str).collect();
    let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
    poset(&names, &covers)
}

/// `a, b ≤ c`.
pub fn vee() -> FinitePoset {
    poset(&["a", "b", "c"], &[("a", "c"), ("b", "c")])
}

/// `a ≤ b, c ≤ d`.
pub fn diamond() -> FinitePoset {
    poset(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
}

/// `a < c, b < c, b < d`.
pub fn n_poset() -> FinitePoset {
    poset(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")])
}

fn fin(p: FinitePoset) -> SpaceExpr {
    SpaceExpr::finite(p)
}

fn goa() -> SpaceExpr {
    SpaceExpr::goa()
}

fn inv_goa() -> SpaceExpr {
    SpaceExpr::dual_of(SpaceExpr::goa())
}

/// The builtin catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name, expr, expected| CatalogEntry { name, expr, expected };
    vec![
        entry("point", fin(point()), Expected::finite(2)),
        entry("empty", fin(FinitePoset::empty()), Expected::finite(1)),
        entry("antichain-2", fin(antichain2()), Expected::finite(4)),
        entry("chain-2", fin(chain(2)), Expected::finite(3)),
        entry("chain-3", fin(chain(3)), Expected::finite(4)),
        entry("chain-4", fin(chain(4)), Expected::finite(5)),
        entry("vee", fin(vee()), Expected::finite(5)),
        entry("diamond", fin(diamond()), Expected::finite(6)),
        entry("dual-diamond", SpaceExpr::dual_of(fin(diamond())), Expected::finite(6)),
        entry("n-poset", fin(n_poset()), Expected::finite(8)),
        entry("sum-chain2-antichain2", SpaceExpr::sum(vec![fin(chain(2)), fin(antichain2())]), Expected::finite(12)),
        entry(
            "dual-sum-chain3-vee",
            SpaceExpr::dual_of(SpaceExpr::sum(vec![fin(chain(3)), fin(vee())])),
            Expected::finite(20),
        ),
        entry("empty-sum", SpaceExpr::sum(vec![]), Expected::finite(1)),
        entry("goa", goa(), Expected::infinite(true, false, true)),
        entry("dual-goa", inv_goa(), Expected::infinite(false, true, false)),
        entry("dual-dual-goa", SpaceExpr::dual_of(inv_goa()), Expected::infinite(true, false, true)),
        entry("sum-goa-dual-goa", SpaceExpr::sum(vec![goa(), inv_goa()]), Expected::infinite(false, false, false)),
        entry("sum-chain2-goa", SpaceExpr::sum(vec![fin(chain(2)), goa()]), Expected::infinite(true, false, true)),
        entry(
            "dual-sum-chain2-goa",
            SpaceExpr::dual_of(SpaceExpr::sum(vec![fin(chain(2)), goa()])),
            Expected::infinite(false, true, false),
        ),
        entry("sum-goa-goa", SpaceExpr::sum(vec![goa(), goa()]), Expected::infinite(true, false, true)),
        entry("sum-dual-goa-point", SpaceExpr::sum(vec![inv_goa(), fin(point())]), Expected::infinite(false, true, false)),
        entry(
            "sum-dual-goa-dual-goa",
            SpaceExpr::sum(vec![inv_goa(), inv_goa()]),
            Expected::infinite(false, true, false),
        ),
        entry(
            "nested-sum-goa-chain3",
            SpaceExpr::sum(vec![SpaceExpr::sum(vec![goa()]), fin(chain(3))]),
            Expected::infinite(true, false, true),
        ),
        entry(
            "dual-sum-goa-vee",
            SpaceExpr::dual_of(SpaceExpr::sum(vec![goa(), fin(vee())])),
            Expected::infinite(false, true, false),
        ),
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_catalog_is_large_enough() {
        let cat = catalog();
        assert!(cat.len() >= 20);
        let names: std::collections::BTreeSet<_> = cat.iter().map(|e| e.name).collect();
        assert_eq!(names.len(), cat.len());
        assert!(lookup("goa").is_some());
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn finite_entries_are_finite_exprs() {
        for e in catalog() {
            assert_eq!(e.expr.is_finite(), e.expected.finite, "{}", e.name);
            assert_eq!(e.expected.radical_ideals.is_some(), e.expected.finite, "{}", e.name);
        }
    }
}
